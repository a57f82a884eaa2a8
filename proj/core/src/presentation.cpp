#include "symdyn/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "symdyn/error.hpp"

namespace symdyn {

Alphabet label_alphabet(const LabeledGraph& g) {
  std::vector<Symbol> syms;
  for (const auto& e : g.edges()) {
    if (e.label.empty()) throw InputError("presentation has an unlabeled edge");
    if (std::find(syms.begin(), syms.end(), e.label) == syms.end()) syms.push_back(e.label);
  }
  return Alphabet(std::move(syms));
}

Automaton language_automaton(const LabeledGraph& input, const Alphabet& alphabet) {
  LabeledGraph g = essentialize(input);
  Automaton a(alphabet);
  if (g.vertex_count() == 0) return a;
  std::vector<std::size_t> label_index;
  for (const auto& e : g.edges()) {
    auto idx = alphabet.index_of(e.label);
    if (!idx) throw InputError("edge label \"" + e.label + "\" is not in the alphabet");
    label_index.push_back(*idx);
  }
  auto outs = g.out_edges();
  std::map<std::vector<std::size_t>, std::size_t> ids;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> full(g.vertex_count());
  for (std::size_t v = 0; v < full.size(); ++v) full[v] = v;
  ids[full] = a.add_state();
  subsets.push_back(full);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<std::vector<std::size_t>> next(alphabet.size());
    for (std::size_t v : subsets[i])
      for (std::size_t ei : outs[v]) next[label_index[ei]].push_back(g.edges()[ei].to);
    for (std::size_t c = 0; c < alphabet.size(); ++c) {
      auto& t = next[c];
      if (t.empty()) continue;
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      auto it = ids.find(t);
      if (it == ids.end()) {
        it = ids.emplace(t, a.add_state()).first;
        subsets.push_back(t);
      }
      a.set(i, c, it->second);
    }
  }
  a.set_start(0);
  return minimize(a);
}

Automaton language_automaton(const LabeledGraph& g) { return language_automaton(g, label_alphabet(g)); }

LabeledGraph sft_presentation(const ForbiddenSetSFT& sft) {
  const Alphabet& alpha = sft.alphabet();
  const std::size_t k = alpha.size();
  // Trie of forbidden words with failure links; goto is completed into a DFA.
  std::vector<std::vector<std::size_t>> go{std::vector<std::size_t>(k, Automaton::kNone)};
  std::vector<bool> terminal{false};
  for (const auto& f : sft.forbidden()) {
    std::size_t s = 0;
    for (const auto& sym : f) {
      std::size_t c = *alpha.index_of(sym);
      if (go[s][c] == Automaton::kNone) {
        go[s][c] = go.size();
        go.emplace_back(k, Automaton::kNone);
        terminal.push_back(false);
      }
      s = go[s][c];
    }
    terminal[s] = true;
  }
  std::vector<std::size_t> fail(go.size(), 0);
  std::deque<std::size_t> queue;
  for (std::size_t c = 0; c < k; ++c) {
    if (go[0][c] == Automaton::kNone) {
      go[0][c] = 0;
    } else {
      fail[go[0][c]] = 0;
      queue.push_back(go[0][c]);
    }
  }
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    if (terminal[fail[s]]) terminal[s] = true;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t t = go[s][c];
      if (t == Automaton::kNone) {
        go[s][c] = go[fail[s]][c];
      } else {
        fail[t] = go[fail[s]][c];
        queue.push_back(t);
      }
    }
  }
  LabeledGraph g;
  std::vector<std::size_t> map(go.size(), Automaton::kNone);
  for (std::size_t s = 0; s < go.size(); ++s)
    if (!terminal[s]) map[s] = g.add_vertex("Q" + std::to_string(s));
  for (std::size_t s = 0; s < go.size(); ++s) {
    if (terminal[s]) continue;
    for (std::size_t c = 0; c < k; ++c)
      if (!terminal[go[s][c]]) g.add_edge(map[s], map[go[s][c]], alpha[c]);
  }
  return essentialize(g);
}

EdgeShift sft_to_edge_shift(const ForbiddenSetSFT& sft) {
  EdgeShift out;
  out.memory = sft.memory();
  auto edges = enumerate_language(sft, out.memory + 1);
  if (edges.empty()) return out;
  auto vertices = enumerate_language(sft, out.memory);
  std::map<Word, std::size_t> index;
  for (const auto& v : vertices) {
    index[v] = out.graph.add_vertex(v.empty() ? "ε" : v.str());
    out.vertex_blocks.push_back(v);
  }
  for (const auto& e : edges) {
    out.graph.add_edge(index.at(e.prefix(out.memory)), index.at(e.suffix(out.memory)), e.str());
    out.edge_blocks.push_back(e);
  }
  return out;
}

namespace {

std::string subset_name(const LabeledGraph& g, const std::vector<std::size_t>& s) {
  std::string name = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) name += ",";
    name += g.vertices()[s[i]];
  }
  return name + "}";
}

// Transition table of a right-resolving graph over its label alphabet.
std::vector<std::vector<std::size_t>> transitions(const LabeledGraph& g, const Alphabet& alpha) {
  std::vector<std::vector<std::size_t>> delta(g.vertex_count(), std::vector<std::size_t>(alpha.size(), Automaton::kNone));
  for (const auto& e : g.edges()) {
    auto& slot = delta[e.from][*alpha.index_of(e.label)];
    if (slot != Automaton::kNone) throw PreconditionError("graph is not right-resolving at vertex " + g.vertices()[e.from]);
    slot = e.to;
  }
  return delta;
}

void require_right_resolving(const LabeledGraph& g) {
  if (!is_right_resolving(g)) throw PreconditionError("presentation is not right-resolving");
}

}  // namespace

LabeledGraph determinize(const LabeledGraph& g) {
  Alphabet alpha = label_alphabet(g);
  auto outs = g.out_edges();
  std::map<std::vector<std::size_t>, std::size_t> ids;
  std::vector<std::vector<std::size_t>> subsets;
  LabeledGraph out;
  auto intern = [&](std::vector<std::size_t> s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    std::size_t v = out.add_vertex(subset_name(g, s));
    ids.emplace(s, v);
    subsets.push_back(std::move(s));
    return v;
  };
  if (g.vertex_count() == 0) return out;
  std::vector<std::size_t> full(g.vertex_count());
  for (std::size_t v = 0; v < full.size(); ++v) full[v] = v;
  intern(full);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) intern({v});
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<std::vector<std::size_t>> next(alpha.size());
    for (std::size_t v : subsets[i])
      for (std::size_t ei : outs[v]) next[*alpha.index_of(g.edges()[ei].label)].push_back(g.edges()[ei].to);
    for (std::size_t c = 0; c < alpha.size(); ++c) {
      auto& t = next[c];
      if (t.empty()) continue;
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      std::size_t target = intern(t);
      out.add_edge(i, target, alpha[c]);
    }
  }
  return essentialize(out);
}

LabeledGraph merge_follower_equivalent(const LabeledGraph& g) {
  require_right_resolving(g);
  Alphabet alpha = label_alphabet(g);
  auto delta = transitions(g, alpha);
  auto cls = future_classes(delta);
  std::size_t count = 0;
  for (std::size_t c : cls) count = std::max(count, c + 1);
  LabeledGraph out;
  std::vector<std::size_t> rep(count, Automaton::kNone);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (rep[cls[v]] == Automaton::kNone) rep[cls[v]] = v;
  for (std::size_t c = 0; c < count; ++c) out.add_vertex(g.vertices()[rep[c]]);
  for (std::size_t c = 0; c < count; ++c)
    for (std::size_t a = 0; a < alpha.size(); ++a) {
      std::size_t t = delta[rep[c]][a];
      if (t != Automaton::kNone) out.add_edge(c, cls[t], alpha[a]);
    }
  return out;
}

bool is_follower_separated(const LabeledGraph& g) {
  return merge_follower_equivalent(g).vertex_count() == g.vertex_count();
}

std::vector<std::size_t> focus_set(const LabeledGraph& g, const Word& w) {
  std::vector<bool> cur(g.vertex_count(), true);
  auto outs = g.out_edges();
  for (const auto& sym : w) {
    std::vector<bool> next(g.vertex_count(), false);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (cur[v])
        for (std::size_t ei : outs[v])
          if (g.edges()[ei].label == sym) next[g.edges()[ei].to] = true;
    cur = std::move(next);
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (cur[v]) out.push_back(v);
  if (out.empty()) throw PreconditionError("word \"" + w.str() + "\" is not presented by the graph");
  return out;
}

namespace {

// Shortest word readable from p but not from q, if any.
std::optional<Word> separating_word(const std::vector<std::vector<std::size_t>>& delta, const Alphabet& alpha,
                                    std::size_t p, std::size_t q) {
  using Pair = std::pair<std::size_t, std::size_t>;
  std::map<Pair, std::pair<Pair, std::size_t>> parent;
  std::deque<Pair> queue{{p, q}};
  parent[{p, q}] = {{p, q}, Automaton::kNone};
  auto unwind = [&](Pair at, std::size_t last) {
    std::vector<Symbol> rev{alpha[last]};
    while (parent[at].second != Automaton::kNone) {
      rev.push_back(alpha[parent[at].second]);
      at = parent[at].first;
    }
    std::reverse(rev.begin(), rev.end());
    return Word(rev);
  };
  while (!queue.empty()) {
    Pair cur = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < alpha.size(); ++c) {
      std::size_t tp = delta[cur.first][c];
      if (tp == Automaton::kNone) continue;
      std::size_t tq = delta[cur.second][c];
      if (tq == Automaton::kNone) return unwind(cur, c);
      Pair nxt{tp, tq};
      if (parent.emplace(nxt, std::make_pair(cur, c)).second) queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

}  // namespace

Word extend_to_synchronizing(const LabeledGraph& g, const Word& w) {
  require_right_resolving(g);
  if (!is_follower_separated(g)) throw PreconditionError("presentation is not follower-separated");
  Alphabet alpha = label_alphabet(g);
  auto delta = transitions(g, alpha);
  Word out = w;
  auto focus = focus_set(g, out);
  while (focus.size() > 1) {
    auto a = separating_word(delta, alpha, focus[0], focus[1]);
    auto b = separating_word(delta, alpha, focus[1], focus[0]);
    const Word& ext = !a ? *b : (!b ? *a : (b->size() < a->size() ? *b : *a));
    out += ext;
    focus = focus_set(g, out);
  }
  return out;
}

LabeledGraph minimal_right_resolving(const LabeledGraph& input) {
  LabeledGraph g = essentialize(input);
  if (g.edge_count() == 0) throw PreconditionError("presented shift is empty");
  LabeledGraph merged = merge_follower_equivalent(essentialize(determinize(g)));
  Word sync = extend_to_synchronizing(merged, Word());
  std::size_t v = focus_set(merged, sync).front();
  // Vertices reachable from the focus of a synchronizing word.
  auto outs = merged.out_edges();
  std::vector<bool> seen(merged.vertex_count(), false);
  std::vector<std::size_t> stack{v}, keep;
  seen[v] = true;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    keep.push_back(x);
    for (std::size_t ei : outs[x]) {
      std::size_t y = merged.edges()[ei].to;
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::sort(keep.begin(), keep.end());
  LabeledGraph cover = merged.induced(keep);
  Alphabet alpha = label_alphabet(g);
  if (!is_strongly_connected(cover) || !same_language(language_automaton(cover, alpha), language_automaton(g, alpha))) {
    throw PreconditionError("presented shift is not irreducible");
  }
  return cover;
}

bool presents_periodic(const LabeledGraph& input, const Word& u) {
  if (u.empty()) throw InputError("periodic point needs a non-empty cycle");
  LabeledGraph g = essentialize(input);
  // Relation v -> v' when a path labeled u runs from v to v'; look for a cycle.
  const std::size_t n = g.vertex_count();
  auto outs = g.out_edges();
  Graph rel;
  for (std::size_t v = 0; v < n; ++v) rel.add_vertex(g.vertices()[v]);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<bool> cur(n, false);
    cur[v] = true;
    for (const auto& sym : u) {
      std::vector<bool> next(n, false);
      for (std::size_t x = 0; x < n; ++x)
        if (cur[x])
          for (std::size_t ei : outs[x])
            if (g.edges()[ei].label == sym) next[g.edges()[ei].to] = true;
      cur = std::move(next);
    }
    for (std::size_t x = 0; x < n; ++x)
      if (cur[x]) rel.add_edge(v, x);
  }
  return !scc_decompose(rel).empty();
}

std::set<Word> sofic_language(const LabeledGraph& g, std::size_t n) {
  return words_of_length(language_automaton(g), n);
}

}  // namespace symdyn
