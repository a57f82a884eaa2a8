#include "symdyn/automaton.hpp"

#include <deque>
#include <map>

#include "symdyn/error.hpp"

namespace symdyn {

std::size_t Automaton::add_state() {
  delta_.emplace_back(alphabet_.size(), kNone);
  return delta_.size() - 1;
}

std::size_t Automaton::run(std::size_t state, const Word& w) const {
  for (const auto& s : w) {
    if (state == kNone) return kNone;
    auto idx = alphabet_.index_of(s);
    if (!idx) return kNone;
    state = delta_[state][*idx];
  }
  return state;
}

bool Automaton::accepts(const Word& w) const { return !empty() && run(start_, w) != kNone; }

std::vector<std::size_t> future_classes(const std::vector<std::vector<std::size_t>>& delta) {
  const std::size_t n = delta.size();
  std::vector<std::size_t> cls(n, 0);
  std::size_t count = n ? 1 : 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{cls[s]};
      for (std::size_t t : delta[s]) sig.push_back(t == Automaton::kNone ? Automaton::kNone : cls[t]);
      auto [it, inserted] = ids.emplace(std::move(sig), ids.size());
      next[s] = it->second;
    }
    cls = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  return cls;
}

Automaton trim_unreachable(const Automaton& a) {
  if (a.empty()) return a;
  const std::size_t k = a.alphabet().size();
  std::vector<std::size_t> map(a.state_count(), Automaton::kNone);
  std::vector<std::size_t> order{a.start()};
  map[a.start()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t t = a.next(order[i], c);
      if (t != Automaton::kNone && map[t] == Automaton::kNone) {
        map[t] = order.size();
        order.push_back(t);
      }
    }
  Automaton out(a.alphabet());
  for (std::size_t i = 0; i < order.size(); ++i) out.add_state();
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t t = a.next(order[i], c);
      if (t != Automaton::kNone) out.set(i, c, map[t]);
    }
  out.set_start(0);
  return out;
}

Automaton minimize(const Automaton& input) {
  Automaton a = trim_unreachable(input);
  if (a.empty()) return a;
  const std::size_t k = a.alphabet().size();
  std::vector<std::vector<std::size_t>> delta(a.state_count());
  for (std::size_t s = 0; s < a.state_count(); ++s)
    for (std::size_t c = 0; c < k; ++c) delta[s].push_back(a.next(s, c));
  auto cls = future_classes(delta);
  std::size_t count = 0;
  for (std::size_t c : cls) count = std::max(count, c + 1);
  Automaton out(a.alphabet());
  for (std::size_t i = 0; i < count; ++i) out.add_state();
  for (std::size_t s = 0; s < a.state_count(); ++s)
    for (std::size_t c = 0; c < k; ++c)
      if (delta[s][c] != Automaton::kNone) out.set(cls[s], c, cls[delta[s][c]]);
  out.set_start(cls[a.start()]);
  return trim_unreachable(out);
}

Integer count_words(const Automaton& a, std::size_t n) {
  if (a.empty()) return 0;
  const std::size_t k = a.alphabet().size();
  std::vector<Integer> cur(a.state_count(), 0), nxt(a.state_count());
  cur[a.start()] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (std::size_t s = 0; s < a.state_count(); ++s) {
      if (cur[s] == 0) continue;
      for (std::size_t c = 0; c < k; ++c) {
        std::size_t t = a.next(s, c);
        if (t != Automaton::kNone) nxt[t] += cur[s];
      }
    }
    std::swap(cur, nxt);
  }
  Integer total = 0;
  for (const auto& v : cur) total += v;
  return total;
}

std::set<Word> words_of_length(const Automaton& a, std::size_t n) {
  std::set<Word> out;
  if (a.empty()) return out;
  const std::size_t k = a.alphabet().size();
  std::vector<Symbol> buf;
  auto rec = [&](auto& self, std::size_t state) -> void {
    if (buf.size() == n) {
      out.insert(Word(buf));
      return;
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t t = a.next(state, c);
      if (t == Automaton::kNone) continue;
      buf.push_back(a.alphabet()[c]);
      self(self, t);
      buf.pop_back();
    }
  };
  rec(rec, a.start());
  return out;
}

bool same_language(const Automaton& a, const Automaton& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  // Compare over the union alphabet; a symbol outside one alphabet is never readable there.
  std::vector<Symbol> uni = a.alphabet().symbols();
  for (const auto& s : b.alphabet())
    if (!a.alphabet().contains(s)) uni.push_back(s);
  std::vector<std::size_t> ia, ib;
  for (const auto& s : uni) {
    auto x = a.alphabet().index_of(s);
    auto y = b.alphabet().index_of(s);
    ia.push_back(x ? *x : Automaton::kNone);
    ib.push_back(y ? *y : Automaton::kNone);
  }
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  std::deque<std::pair<std::size_t, std::size_t>> queue{{a.start(), b.start()}};
  seen[{a.start(), b.start()}] = true;
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < uni.size(); ++c) {
      std::size_t tp = ia[c] == Automaton::kNone ? Automaton::kNone : a.next(p, ia[c]);
      std::size_t tq = ib[c] == Automaton::kNone ? Automaton::kNone : b.next(q, ib[c]);
      if ((tp == Automaton::kNone) != (tq == Automaton::kNone)) return false;
      if (tp == Automaton::kNone) continue;
      if (seen.emplace(std::make_pair(tp, tq), true).second) queue.emplace_back(tp, tq);
    }
  }
  return true;
}

}  // namespace symdyn
