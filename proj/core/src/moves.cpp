#include "symdyn/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "symdyn/error.hpp"
#include "symdyn/graph.hpp"
#include "symdyn/presentation.hpp"

namespace symdyn {

namespace {

void require_symbol(const ForbiddenSetSFT& sft, const Symbol& s) {
  if (!sft.alphabet().contains(s)) throw InputError("symbol \"" + s + "\" is not in the alphabet");
}

// Minimal forbidden words of the SFT whose language automaton is `lang`.
std::set<Word> minimal_forbidden_words(const Automaton& lang) {
  const Alphabet& alpha = lang.alphabet();
  const std::size_t k = alpha.size();
  std::set<Word> out;
  if (lang.empty()) {
    for (const auto& s : alpha) out.insert(Word{s});
    return out;
  }
  const std::size_t nq = lang.state_count();
  const std::size_t s0 = lang.start();
  // Longest run of pairs (state after ux, state after x) that stay off the diagonal.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::size_t>> succ;
  std::vector<std::size_t> sources;
  auto intern = [&](std::size_t p, std::size_t q) {
    auto [it, inserted] = id.emplace(std::make_pair(p, q), pairs.size());
    if (inserted) {
      pairs.emplace_back(p, q);
      succ.emplace_back();
    }
    return std::make_pair(it->second, inserted);
  };
  std::deque<std::size_t> queue;
  for (std::size_t p = 0; p < nq; ++p) {
    if (p == s0) continue;
    auto [i, fresh] = intern(p, s0);
    sources.push_back(i);
    if (fresh) queue.push_back(i);
  }
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    auto [p, q] = pairs[i];
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t tp = lang.next(p, c);
      if (tp == Automaton::kNone) continue;
      std::size_t tq = lang.next(q, c);
      if (tq == Automaton::kNone) throw Error("language automaton is not factorial");
      if (tp == tq) continue;
      auto [j, fresh] = intern(tp, tq);
      succ[i].push_back(j);
      if (fresh) queue.push_back(j);
    }
  }
  std::vector<std::size_t> indeg(pairs.size(), 0), depth(pairs.size(), 0);
  for (const auto& s : succ)
    for (std::size_t j : s) ++indeg[j];
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (indeg[i] == 0) order.push_back(i);
  for (std::size_t h = 0; h < order.size(); ++h)
    for (std::size_t j : succ[order[h]]) {
      depth[j] = std::max(depth[j], depth[order[h]] + 1);
      if (--indeg[j] == 0) order.push_back(j);
    }
  if (order.size() != pairs.size()) throw PreconditionError("image shift is not of finite type");
  std::size_t memory = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) memory = std::max(memory, depth[i] + 1);

  for (std::size_t c = 0; c < k; ++c)
    if (lang.next(s0, c) == Automaton::kNone) out.insert(Word{alpha[c]});
  // Words a u b with au, ub in the language and aub not, |u| <= memory - 1.
  std::vector<Symbol> u;
  auto rec = [&](auto& self, std::size_t cur, const std::vector<std::size_t>& left) -> void {
    for (std::size_t a = 0; a < k; ++a) {
      if (left[a] == Automaton::kNone) continue;
      for (std::size_t b = 0; b < k; ++b)
        if (lang.next(cur, b) != Automaton::kNone && lang.next(left[a], b) == Automaton::kNone) {
          std::vector<Symbol> w{alpha[a]};
          w.insert(w.end(), u.begin(), u.end());
          w.push_back(alpha[b]);
          out.insert(Word(std::move(w)));
        }
    }
    if (u.size() + 2 > memory) return;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t nc = lang.next(cur, c);
      if (nc == Automaton::kNone) continue;
      std::vector<std::size_t> nl(k);
      bool any = false;
      for (std::size_t a = 0; a < k; ++a) {
        nl[a] = left[a] == Automaton::kNone ? Automaton::kNone : lang.next(left[a], c);
        any |= nl[a] != Automaton::kNone && nl[a] != nc;
      }
      if (!any) continue;  // every extension agrees with the unconstrained one
      u.push_back(alpha[c]);
      self(self, nc, nl);
      u.pop_back();
    }
  };
  std::vector<std::size_t> left(k);
  for (std::size_t a = 0; a < k; ++a) left[a] = lang.next(s0, a);
  rec(rec, s0, left);
  return out;
}

// Shift presented by a graph whose empty labels stand for erased symbols.
ForbiddenSetSFT shift_from_graph(const Graph& g, const Alphabet& alphabet) {
  const std::size_t n = g.vertex_count();
  Graph eps;
  for (const auto& v : g.vertices()) eps.add_vertex(v);
  for (const auto& e : g.edges())
    if (e.label.empty()) eps.add_edge(e.from, e.to);
  if (!scc_decompose(eps).empty()) throw PreconditionError("erased symbols form a cycle");
  auto eps_out = eps.out_edges();
  auto outs = g.out_edges();
  Graph closed;
  for (const auto& v : g.vertices()) closed.add_vertex(v);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{u};
    seen[u] = true;
    std::set<std::pair<Symbol, std::size_t>> added;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t ei : outs[v]) {
        const Edge& e = g.edges()[ei];
        if (!e.label.empty() && added.emplace(e.label, e.to).second) closed.add_edge(u, e.to, e.label);
      }
      for (std::size_t ei : eps_out[v]) {
        std::size_t w = eps.edges()[ei].to;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  Automaton lang = language_automaton(closed, alphabet);
  // Keep only symbols that occur in some point.
  std::vector<Symbol> used;
  for (std::size_t c = 0; c < alphabet.size(); ++c)
    if (!lang.empty() && lang.next(lang.start(), c) != Automaton::kNone) used.push_back(alphabet[c]);
  if (used.size() != alphabet.size() && !used.empty()) {
    Alphabet trimmed(used);
    return ForbiddenSetSFT(trimmed, minimal_forbidden_words(language_automaton(closed, trimmed)));
  }
  return ForbiddenSetSFT(alphabet, minimal_forbidden_words(lang));
}

}  // namespace

Expansion symbol_expand(const ForbiddenSetSFT& sft, const Symbol& a, const std::optional<Symbol>& fresh) {
  require_symbol(sft, a);
  Symbol d = fresh ? *fresh : sft.alphabet().fresh_symbol();
  if (sft.alphabet().contains(d)) throw InputError("symbol \"" + d + "\" is already in the alphabet");
  std::set<Word> forbidden;
  for (const auto& f : sft.forbidden()) {
    Word img;
    for (const auto& s : f) {
      img.push_back(s);
      if (s == a) img.push_back(d);
    }
    forbidden.insert(img);
  }
  for (const auto& b : sft.alphabet()) {
    if (b != a) forbidden.insert(Word{b, d});
    forbidden.insert(Word{a, b});
  }
  forbidden.insert(Word{d, d});
  return {ForbiddenSetSFT(sft.alphabet().with(d), std::move(forbidden)), d};
}

std::optional<Word> contraction_witness(const ForbiddenSetSFT& sft, const Symbol& a, const Symbol& d) {
  require_symbol(sft, a);
  require_symbol(sft, d);
  if (a == d) throw InputError("contraction needs two different symbols");
  LabeledGraph p = sft_presentation(sft);
  auto outs = p.out_edges();
  auto ins = p.in_edges();
  for (const auto& e : p.edges()) {
    if (e.label == a) {
      for (std::size_t ei : outs[e.to])
        if (p.edges()[ei].label != d) return Word{a, p.edges()[ei].label};
    }
    if (e.label == d) {
      for (std::size_t ei : ins[e.from])
        if (p.edges()[ei].label != a) return Word{p.edges()[ei].label, d};
    }
  }
  return std::nullopt;
}

ForbiddenSetSFT symbol_contract(const ForbiddenSetSFT& sft, const Symbol& a, const Symbol& d) {
  if (auto w = contraction_witness(sft, a, d)) {
    throw PreconditionError("cannot contract " + d + " after " + a + ": \"" + w->str() + "\" occurs");
  }
  LabeledGraph p = sft_presentation(sft);
  Graph g;
  for (const auto& v : p.vertices()) g.add_vertex(v);
  for (const auto& e : p.edges()) g.add_edge(e.from, e.to, e.label == d ? Symbol{} : e.label);
  return shift_from_graph(g, sft.alphabet().without(d));
}

bool is_nonoverlapping(const Word& w) {
  if (w.empty()) throw InputError("non-overlapping check needs a non-empty word");
  for (std::size_t len = 1; len < w.size(); ++len)
    if (w.prefix(len) == w.suffix(len)) return false;
  return true;
}

bool admits_nontrivial_overlaps(const ForbiddenSetSFT& sft, const Word& w) {
  if (!contains_word(sft, w)) throw PreconditionError("\"" + w.str() + "\" is not in the language");
  for (std::size_t len = 1; len < w.size(); ++len)
    if (w.prefix(len) == w.suffix(len) && contains_word(sft, w + w.factor(len, w.size() - len))) return true;
  return false;
}

ForbiddenSetSFT recode_image(const ForbiddenSetSFT& sft, const BlockMap& phi, const Alphabet& target) {
  for (const auto& [block, out] : phi.table) {
    if (block.size() != phi.window()) throw InputError("block map entry has the wrong window length");
    if (!target.contains(out)) throw InputError("block map output \"" + out + "\" is not in the target alphabet");
  }
  LabeledGraph p = sft_presentation(sft);
  const Alphabet& alpha = sft.alphabet();
  const std::size_t hist = phi.window() - 1;
  auto outs = p.out_edges();
  // Nodes: (vertex, labels of the last `hist` edges of a path ending there).
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> id;
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> nodes;
  Graph g;
  std::vector<std::size_t> path;
  auto collect = [&](auto& self, std::size_t v) -> void {
    if (path.size() == hist) {
      auto key = std::make_pair(v, path);
      if (id.emplace(key, nodes.size()).second) {
        nodes.push_back(key);
        g.add_vertex(std::to_string(nodes.size() - 1));
      }
      return;
    }
    for (std::size_t ei : outs[v]) {
      path.push_back(*alpha.index_of(p.edges()[ei].label));
      self(self, p.edges()[ei].to);
      path.pop_back();
    }
  };
  for (std::size_t v = 0; v < p.vertex_count(); ++v) collect(collect, v);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [v, hist_labels] = nodes[i];
    for (std::size_t ei : outs[v]) {
      const Edge& e = p.edges()[ei];
      std::size_t c = *alpha.index_of(e.label);
      std::vector<Symbol> window;
      for (std::size_t x : hist_labels) window.push_back(alpha[x]);
      window.push_back(e.label);
      std::vector<std::size_t> next(hist_labels.begin() + (hist ? 1 : 0), hist_labels.end());
      if (hist) next.push_back(c);
      g.add_edge(i, id.at({e.to, next}), phi(Word(window)));
    }
  }
  return shift_from_graph(g, target);
}

std::string Move::str() const {
  switch (kind) {
    case Kind::Expand:
      return "expand " + symbol + " -> " + symbol + other;
    case Kind::Contract:
      return "contract " + symbol + other + " -> " + symbol;
    case Kind::Recode:
      return "recode memory=" + std::to_string(map.memory) + " anticipation=" + std::to_string(map.anticipation);
  }
  return {};
}

std::string MoveSpec::str() const {
  switch (kind) {
    case Kind::Expand:
      return "expand " + symbol;
    case Kind::Contract:
      return "contract " + symbol + other + " -> " + symbol;
    case Kind::WordContract:
      return "word_contract " + word.str();
    case Kind::Recode:
      return "recode";
  }
  return {};
}

MovePipeline::MovePipeline(ForbiddenSetSFT source) : source_(std::move(source)) {}

void MovePipeline::push(Move move, ForbiddenSetSFT result) {
  stages_.push_back({std::move(move), std::move(result), specs_.size() - 1});
}

Symbol MovePipeline::expand(const Symbol& a) {
  auto e = symbol_expand(target(), a);
  specs_.push_back({MoveSpec::Kind::Expand, a, e.fresh, {}, {}});
  push({Move::Kind::Expand, a, e.fresh, {}}, std::move(e.sft));
  return specs_.back().other;
}

void MovePipeline::contract(const Symbol& a, const Symbol& d) {
  auto next = symbol_contract(target(), a, d);
  specs_.push_back({MoveSpec::Kind::Contract, a, d, {}, {}});
  push({Move::Kind::Contract, a, d, {}}, std::move(next));
}

Symbol MovePipeline::word_contract(const Word& w, const std::optional<Symbol>& name) {
  ForbiddenSetSFT cur = target();
  cur.alphabet().check(w);
  if (w.empty()) throw InputError("cannot contract the empty word");
  if (!contains_word(cur, w)) throw PreconditionError("\"" + w.str() + "\" is not in the language");
  if (admits_nontrivial_overlaps(cur, w)) {
    throw PreconditionError("the shift admits non-trivial overlaps of \"" + w.str() + "\"");
  }
  Symbol diamond = name ? *name : cur.alphabet().fresh_symbol();
  if (cur.alphabet().contains(diamond)) throw InputError("symbol \"" + diamond + "\" is already in the alphabet");
  specs_.push_back({MoveSpec::Kind::WordContract, {}, diamond, w, {}});

  // Mark each occurrence of w at its first symbol.
  BlockMap mark{0, w.size() - 1, {}};
  for (const auto& block : enumerate_language(cur, w.size())) mark.table[block] = block == w ? diamond : block[0];
  Alphabet alpha = cur.alphabet().with(diamond);
  if (w.size() == 1) alpha = cur.alphabet().without(w[0]).with(diamond);
  cur = recode_image(cur, mark, alpha);
  push({Move::Kind::Recode, {}, {}, mark}, cur);

  // Absorb w_2 .. w_n into the marker one symbol at a time.
  for (std::size_t i = 1; i < w.size(); ++i) {
    Symbol tag = cur.alphabet().fresh_symbol();
    BlockMap absorb{1, 0, {}};
    for (const auto& block : enumerate_language(cur, 2))
      absorb.table[block] = (block[0] == diamond && block[1] == w[i]) ? tag : block[1];
    cur = recode_image(cur, absorb, cur.alphabet().with(tag));
    push({Move::Kind::Recode, {}, {}, absorb}, cur);
    cur = symbol_contract(cur, diamond, tag);
    push({Move::Kind::Contract, diamond, tag, {}}, cur);
  }
  return diamond;
}

void MovePipeline::rename(const BlockMap& map) {
  if (map.memory != 0 || map.anticipation != 0) throw InputError("only 1-block renamings are accepted as recodes");
  const ForbiddenSetSFT& cur = target();
  std::vector<Symbol> out;
  std::set<Symbol> seen;
  for (const auto& s : cur.alphabet()) {
    const Symbol& img = map(Word{s});
    if (!seen.insert(img).second) throw PreconditionError("renaming is not injective at \"" + img + "\"");
    out.push_back(img);
  }
  auto next = recode_image(cur, map, Alphabet(out));
  specs_.push_back({MoveSpec::Kind::Recode, {}, {}, {}, map});
  push({Move::Kind::Recode, {}, {}, map}, std::move(next));
}

void MovePipeline::apply(const MoveSpec& spec) {
  switch (spec.kind) {
    case MoveSpec::Kind::Expand:
      expand(spec.symbol);
      break;
    case MoveSpec::Kind::Contract:
      contract(spec.symbol, spec.other);
      break;
    case MoveSpec::Kind::WordContract:
      word_contract(spec.word, spec.other.empty() ? std::nullopt : std::optional<Symbol>(spec.other));
      break;
    case MoveSpec::Kind::Recode:
      rename(spec.map);
      break;
  }
}

ForbiddenSetSFT word_contract(const ForbiddenSetSFT& sft, const Word& w) {
  MovePipeline p(sft);
  p.word_contract(w);
  return p.target();
}

Word pipeline_apply_word(const MovePipeline& p, const Word& w) {
  if (!contains_word(p.source(), w)) throw PreconditionError("\"" + w.str() + "\" is not in the source language");
  Word cur = w;
  for (const auto& stage : p.stages()) {
    const Move& m = stage.move;
    Word next;
    switch (m.kind) {
      case Move::Kind::Expand:
        for (const auto& s : cur) {
          next.push_back(s);
          if (s == m.symbol) next.push_back(m.other);
        }
        break;
      case Move::Kind::Contract:
        for (const auto& s : cur)
          if (s != m.other) next.push_back(s);
        break;
      case Move::Kind::Recode:
        if (cur.size() >= m.map.window()) next = apply_block_map(m.map, cur);
        break;
    }
    cur = std::move(next);
  }
  return cur;
}

PeriodicOrbit pipeline_apply_periodic(const MovePipeline& p, const PeriodicOrbit& u) {
  if (!contains_periodic(p.source(), u)) {
    throw PreconditionError("(" + u.cycle().str() + ")^inf is not in the source shift");
  }
  Word cur = u.cycle();
  for (const auto& stage : p.stages()) {
    const Move& m = stage.move;
    Word next;
    switch (m.kind) {
      case Move::Kind::Expand:
        for (const auto& s : cur) {
          next.push_back(s);
          if (s == m.symbol) next.push_back(m.other);
        }
        break;
      case Move::Kind::Contract:
        for (const auto& s : cur)
          if (s != m.other) next.push_back(s);
        break;
      case Move::Kind::Recode: {
        const std::size_t n = cur.size();
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Symbol> window;
          for (std::size_t j = 0; j < m.map.window(); ++j) window.push_back(cur[(i + n * m.map.window() - m.map.memory + j) % n]);
          next.push_back(m.map(Word(window)));
        }
        break;
      }
    }
    if (next.empty()) throw Error("periodic image collapsed to the empty word");
    cur = std::move(next);
  }
  return PeriodicOrbit(cur);
}

Integer deciding_length_bound(std::size_t move_count, std::size_t max_window) {
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, move_count);
  return (Integer(static_cast<unsigned long>(max_window + 1)) * static_cast<unsigned long>(move_count) + 1) * two_n;
}

Integer deciding_length_bound(const MovePipeline& p) {
  std::size_t window = 0;
  for (const auto& s : p.stages())
    if (s.move.kind == Move::Kind::Recode) window = std::max(window, s.move.map.window());
  return deciding_length_bound(p.stages().size(), window);
}

}  // namespace symdyn
