#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "symdyn/automaton.hpp"
#include "symdyn/word.hpp"

namespace symdyn {

// Shift of finite type given by an alphabet and a finite set of forbidden words.
class ForbiddenSetSFT {
 public:
  ForbiddenSetSFT() = default;
  ForbiddenSetSFT(Alphabet alphabet, std::set<Word> forbidden);
  ForbiddenSetSFT(Alphabet alphabet, const std::vector<Word>& forbidden)
      : ForbiddenSetSFT(std::move(alphabet), std::set<Word>(forbidden.begin(), forbidden.end())) {}

  const Alphabet& alphabet() const { return alphabet_; }
  const std::set<Word>& forbidden() const { return forbidden_; }
  std::size_t max_forbidden_length() const;
  // M such that all forbidden words have length at most M+1.
  std::size_t memory() const;

  // No forbidden factor.
  bool locally_admissible(const Word& w) const;

  // Minimal automaton of the language B(X); computed once.
  const Automaton& language() const;

  friend bool operator==(const ForbiddenSetSFT& a, const ForbiddenSetSFT& b) {
    return a.alphabet_ == b.alphabet_ && a.forbidden_ == b.forbidden_;
  }

 private:
  Alphabet alphabet_;
  std::set<Word> forbidden_;
  struct Cache {
    std::once_flag once;
    std::unique_ptr<const Automaton> language;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Equivalent forbidden set whose words all have length M+1.
ForbiddenSetSFT to_m_step(const ForbiddenSetSFT& sft);

std::set<Word> enumerate_language(const ForbiddenSetSFT& sft, std::size_t n);
bool contains_word(const ForbiddenSetSFT& sft, const Word& w);
bool contains_periodic(const ForbiddenSetSFT& sft, const PeriodicOrbit& orbit);
bool is_empty(const ForbiddenSetSFT& sft);
bool is_irreducible(const ForbiddenSetSFT& sft);

// Sliding block code with memory m and anticipation n: the symbol at i is
// table[w[i-m .. i+n]].
struct BlockMap {
  std::size_t memory = 0;
  std::size_t anticipation = 0;
  std::map<Word, Symbol> table;

  std::size_t window() const { return memory + anticipation + 1; }
  const Symbol& operator()(const Word& block) const;
};

// Image of a finite word; the result has length |w| - m - n.
Word apply_block_map(const BlockMap& phi, const Word& w);

}  // namespace symdyn
