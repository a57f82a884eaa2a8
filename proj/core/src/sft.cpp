#include "symdyn/sft.hpp"

#include <algorithm>

#include "symdyn/error.hpp"
#include "symdyn/graph.hpp"
#include "symdyn/presentation.hpp"

namespace symdyn {

ForbiddenSetSFT::ForbiddenSetSFT(Alphabet alphabet, std::set<Word> forbidden)
    : alphabet_(std::move(alphabet)), forbidden_(std::move(forbidden)) {
  for (const auto& f : forbidden_) {
    if (f.empty()) throw InputError("forbidden words must be non-empty");
    alphabet_.check(f);
  }
}

std::size_t ForbiddenSetSFT::max_forbidden_length() const {
  std::size_t m = 0;
  for (const auto& f : forbidden_) m = std::max(m, f.size());
  return m;
}

std::size_t ForbiddenSetSFT::memory() const {
  std::size_t m = max_forbidden_length();
  return m ? m - 1 : 0;
}

bool ForbiddenSetSFT::locally_admissible(const Word& w) const {
  return std::none_of(forbidden_.begin(), forbidden_.end(), [&](const Word& f) { return f.occurs_in(w); });
}

const Automaton& ForbiddenSetSFT::language() const {
  std::call_once(cache_->once, [this] {
    cache_->language = std::make_unique<const Automaton>(language_automaton(sft_presentation(*this), alphabet_));
  });
  return *cache_->language;
}

ForbiddenSetSFT to_m_step(const ForbiddenSetSFT& sft) {
  const std::size_t len = sft.max_forbidden_length();
  if (len == 0) return sft;
  const std::size_t k = sft.alphabet().size();
  double total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= static_cast<double>(k);
  if (total > 4e6) throw PreconditionError("to_m_step: alphabet^(M+1) too large to enumerate");
  std::set<Word> out;
  std::vector<Symbol> buf(len);
  std::vector<std::size_t> digits(len, 0);
  while (true) {
    for (std::size_t i = 0; i < len; ++i) buf[i] = sft.alphabet()[digits[i]];
    Word w(buf);
    if (!sft.locally_admissible(w)) out.insert(std::move(w));
    std::size_t i = len;
    while (i > 0 && ++digits[i - 1] == k) digits[--i] = 0;
    if (i == 0) break;
  }
  return ForbiddenSetSFT(sft.alphabet(), std::move(out));
}

std::set<Word> enumerate_language(const ForbiddenSetSFT& sft, std::size_t n) {
  if (n == 0) return {Word()};
  return words_of_length(sft.language(), n);
}

bool contains_word(const ForbiddenSetSFT& sft, const Word& w) {
  sft.alphabet().check(w);
  return sft.language().accepts(w);
}

bool contains_periodic(const ForbiddenSetSFT& sft, const PeriodicOrbit& orbit) {
  sft.alphabet().check(orbit.cycle());
  return presents_periodic(sft_presentation(sft), orbit.cycle());
}

bool is_empty(const ForbiddenSetSFT& sft) { return sft.language().empty(); }

bool is_irreducible(const ForbiddenSetSFT& sft) {
  // Beyond length M the state of the language automaton is the follower set of
  // the last M symbols, so X is irreducible iff those states form one strongly
  // connected class.
  const Automaton& a = sft.language();
  if (a.empty()) return false;
  const std::size_t m = sft.memory();
  const std::size_t k = a.alphabet().size();
  std::vector<bool> layer(a.state_count(), false);
  layer[a.start()] = true;
  for (std::size_t step = 0; step < m; ++step) {
    std::vector<bool> next(a.state_count(), false);
    for (std::size_t s = 0; s < a.state_count(); ++s)
      if (layer[s])
        for (std::size_t c = 0; c < k; ++c)
          if (a.next(s, c) != Automaton::kNone) next[a.next(s, c)] = true;
    layer = std::move(next);
  }
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < a.state_count(); ++s)
    if (layer[s]) stack.push_back(s);
  std::vector<bool> closed = layer;
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t t = a.next(s, c);
      if (t != Automaton::kNone && !closed[t]) {
        closed[t] = true;
        stack.push_back(t);
      }
    }
  }
  Graph g;
  std::vector<std::size_t> map(a.state_count(), Automaton::kNone);
  for (std::size_t s = 0; s < a.state_count(); ++s)
    if (closed[s]) map[s] = g.add_vertex(std::to_string(s));
  for (std::size_t s = 0; s < a.state_count(); ++s)
    if (closed[s])
      for (std::size_t c = 0; c < k; ++c)
        if (a.next(s, c) != Automaton::kNone) g.add_edge(map[s], map[a.next(s, c)], a.alphabet()[c]);
  return is_strongly_connected(g);
}

const Symbol& BlockMap::operator()(const Word& block) const {
  auto it = table.find(block);
  if (it == table.end()) throw PreconditionError("block map undefined on \"" + block.str() + "\"");
  return it->second;
}

Word apply_block_map(const BlockMap& phi, const Word& w) {
  const std::size_t win = phi.window();
  if (w.size() < win) {
    throw PreconditionError("word shorter than the block-map window (" + std::to_string(win) + ")");
  }
  Word out;
  for (std::size_t i = 0; i + win <= w.size(); ++i) out.push_back(phi(w.factor(i, win)));
  return out;
}

}  // namespace symdyn
