#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "symdyn/graph.hpp"
#include "symdyn/int_matrix.hpp"
#include "symdyn/moves.hpp"
#include "symdyn/sft.hpp"

namespace symdyn {

struct EntropyEstimate {
  enum class Method { WordCount, Perron };
  double value = 0;
  Method method = Method::Perron;
  std::optional<std::size_t> n_used;
  bool empty_shift = false;
};

std::string to_string(EntropyEstimate::Method m);

// (1/n) log2 |B_n(X)| by exact path counting.
EntropyEstimate entropy_word_count(const ForbiddenSetSFT& sft, std::size_t n);
EntropyEstimate entropy_word_count(const LabeledGraph& presentation, std::size_t n);

// log2 of the spectral radius, taken over strongly connected components.
EntropyEstimate perron_entropy(const IntMatrix& a);
EntropyEstimate perron_entropy(const Graph& g);
// Perron root of one component; 1 for a cycle, 0 without edges.
double perron_root(const IntMatrix& a);

EntropyEstimate sofic_entropy(const LabeledGraph& g);

// Replaces each edge by a path of n edges.
DirectedGraph scale_entropy_construction(const DirectedGraph& g, std::size_t n);

struct Boost {
  MovePipeline pipeline;
  ForbiddenSetSFT result() const { return pipeline.target(); }
};

// Contracts b a^i to ◇i for i = 2^N down to 1.
Boost boost_entropy_construction(const ForbiddenSetSFT& sft, const Symbol& a, const Symbol& b, std::size_t n_bits);

// Every {a,b}-word of length at most len is in the language.
bool embeds_full_two_shift(const ForbiddenSetSFT& sft, const Symbol& a, const Symbol& b, std::size_t len);

}  // namespace symdyn
