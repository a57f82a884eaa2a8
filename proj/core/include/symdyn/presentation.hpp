#pragma once

#include <cstddef>
#include <vector>

#include "symdyn/automaton.hpp"
#include "symdyn/graph.hpp"
#include "symdyn/sft.hpp"

namespace symdyn {

// Labels in order of first appearance.
Alphabet label_alphabet(const LabeledGraph& g);

// Minimal automaton of the factor language of the shift presented by g.
Automaton language_automaton(const LabeledGraph& g, const Alphabet& alphabet);
Automaton language_automaton(const LabeledGraph& g);

// Right-resolving presentation of an SFT built from the pattern-matching
// automaton of its forbidden words; essential.
LabeledGraph sft_presentation(const ForbiddenSetSFT& sft);

struct EdgeShift {
  DirectedGraph graph;         // edge labels are the (M+1)-blocks
  std::vector<Word> vertex_blocks;  // M-block of each vertex
  std::vector<Word> edge_blocks;    // (M+1)-block of each edge, by position
  std::size_t memory = 0;
};

// Vertices B_M(X), edges B_{M+1}(X); essential.
EdgeShift sft_to_edge_shift(const ForbiddenSetSFT& sft);

// Subset construction seeded by the full vertex set and every singleton.
LabeledGraph determinize(const LabeledGraph& g);

// Quotient of a right-resolving graph by equality of follower sets.
LabeledGraph merge_follower_equivalent(const LabeledGraph& g);
bool is_follower_separated(const LabeledGraph& g);

// Smallest right-resolving presentation of an irreducible sofic shift.
LabeledGraph minimal_right_resolving(const LabeledGraph& g);

// Terminal vertices of paths labeled w, by index; throws if w is not presented.
std::vector<std::size_t> focus_set(const LabeledGraph& g, const Word& w);

// Extends w to the right until its focus set is a single vertex.
Word extend_to_synchronizing(const LabeledGraph& g, const Word& w);

// Some bi-infinite path is labeled u^inf.
bool presents_periodic(const LabeledGraph& g, const Word& u);

std::set<Word> sofic_language(const LabeledGraph& g, std::size_t n);

}  // namespace symdyn
