#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

bool has_forbidden_factor(const Word& w, const std::set<Word>& forbidden) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; i + len <= w.size(); ++len)
      if (forbidden.count(w.factor(i, len))) return true;
  return false;
}

namespace {

// Only factors ending at the last symbol need checking after an append.
bool new_suffix_forbidden(const std::vector<std::string>& buf, const std::set<Word>& forbidden) {
  for (std::size_t len = 1; len <= buf.size(); ++len) {
    Word tail(std::vector<std::string>(buf.end() - len, buf.end()));
    if (forbidden.count(tail)) return true;
  }
  return false;
}

bool new_prefix_forbidden(const std::vector<std::string>& buf, const std::set<Word>& forbidden) {
  for (std::size_t len = 1; len <= buf.size(); ++len) {
    Word head(std::vector<std::string>(buf.begin(), buf.begin() + len));
    if (forbidden.count(head)) return true;
  }
  return false;
}

bool extends_left(std::vector<std::string>& buf, std::size_t left, const std::vector<std::string>& alphabet,
                  const std::set<Word>& forbidden) {
  if (left == 0) return true;
  for (const auto& s : alphabet) {
    buf.insert(buf.begin(), s);
    bool ok = !new_prefix_forbidden(buf, forbidden) && extends_left(buf, left - 1, alphabet, forbidden);
    buf.erase(buf.begin());
    if (ok) return true;
  }
  return false;
}

bool extends_right_then_left(std::vector<std::string>& buf, std::size_t right, std::size_t left,
                             const std::vector<std::string>& alphabet, const std::set<Word>& forbidden) {
  if (right == 0) {
    std::vector<std::string> copy = buf;
    return extends_left(copy, left, alphabet, forbidden);
  }
  for (const auto& s : alphabet) {
    buf.push_back(s);
    bool ok = !new_suffix_forbidden(buf, forbidden) && extends_right_then_left(buf, right - 1, left, alphabet, forbidden);
    buf.pop_back();
    if (ok) return true;
  }
  return false;
}

void admissible_words(std::vector<std::string>& buf, std::size_t n, const std::vector<std::string>& alphabet,
                      const std::set<Word>& forbidden, const std::function<void(const std::vector<std::string>&)>& f) {
  if (buf.size() == n) {
    f(buf);
    return;
  }
  for (const auto& s : alphabet) {
    buf.push_back(s);
    if (!new_suffix_forbidden(buf, forbidden)) admissible_words(buf, n, alphabet, forbidden, f);
    buf.pop_back();
  }
}

std::size_t default_reach(const std::vector<std::string>& alphabet, const std::set<Word>& forbidden) {
  std::size_t m = 0;
  for (const auto& f : forbidden) m = std::max(m, f.size());
  std::size_t memory = m ? m - 1 : 0;
  std::size_t blocks = 1;
  for (std::size_t i = 0; i < memory; ++i) blocks *= alphabet.size();
  return blocks + memory + 1;
}

}  // namespace

std::set<Word> bi_extendable(const std::vector<std::string>& alphabet, const std::set<Word>& forbidden, std::size_t n,
                             std::size_t reach) {
  std::set<Word> out;
  std::vector<std::string> buf;
  admissible_words(buf, n, alphabet, forbidden, [&](const std::vector<std::string>& w) {
    std::vector<std::string> b = w;
    if (extends_right_then_left(b, reach, reach, alphabet, forbidden)) out.insert(Word(w));
  });
  return out;
}

std::set<Word> language(const std::vector<std::string>& alphabet, const std::set<Word>& forbidden, std::size_t n) {
  return bi_extendable(alphabet, forbidden, n, default_reach(alphabet, forbidden));
}

Integer laplace_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = a(i, j);
    Integer term = a(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

namespace {

void choose(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  choose(n, k, 0, cur, out);
  return out;
}

}  // namespace

Integer minors_gcd(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  for (const auto& rows : subsets(a.rows(), k))
    for (const auto& cols : subsets(a.cols(), k)) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
      Integer d = laplace_det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

std::set<Word> path_labels(const symdyn::Graph& g, std::size_t n) {
  const std::size_t v = g.vertex_count();
  std::vector<bool> alive(v, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < v; ++x) {
      if (!alive[x]) continue;
      bool in = false, out = false;
      for (const auto& e : g.edges()) {
        if (!alive[e.from] || !alive[e.to]) continue;
        in |= e.to == x;
        out |= e.from == x;
      }
      if (!in || !out) {
        alive[x] = false;
        changed = true;
      }
    }
  }
  std::set<Word> result;
  std::vector<std::string> buf;
  std::function<void(std::size_t)> walk = [&](std::size_t x) {
    if (buf.size() == n) {
      result.insert(Word(buf));
      return;
    }
    for (const auto& e : g.edges()) {
      if (e.from != x || !alive[e.to]) continue;
      buf.push_back(e.label);
      walk(e.to);
      buf.pop_back();
    }
  };
  for (std::size_t x = 0; x < v; ++x)
    if (alive[x]) walk(x);
  return result;
}

Word rewrite_expand(const Word& x, const std::string& a, const std::string& d) {
  Word out;
  for (const auto& s : x) {
    out.push_back(s);
    if (s == a) out.push_back(d);
  }
  return out;
}

std::set<Word> expanded_language(const std::vector<std::string>& alphabet, const std::set<Word>& forbidden,
                                 const std::string& a, const std::string& d, std::size_t n) {
  std::set<Word> out;
  for (const auto& u : language(alphabet, forbidden, n)) {
    Word img = rewrite_expand(u, a, d);
    for (std::size_t i = 0; i + n <= img.size(); ++i) out.insert(img.factor(i, n));
  }
  return out;
}

std::set<Word> contracted_language(const std::vector<std::string>& alphabet, const std::set<Word>& forbidden,
                                   const Word& w, const std::string& d, std::size_t n) {
  const std::size_t k = w.size();
  const std::size_t m = (n + 3) * k;
  std::set<Word> out;
  for (const auto& u : language(alphabet, forbidden, m)) {
    std::vector<std::string> img;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < u.size();) {
      if (i + k <= u.size() && u.factor(i, k) == w) {
        img.push_back(d);
        origin.push_back(i);
        i += k;
      } else {
        img.push_back(u[i]);
        origin.push_back(i);
        ++i;
      }
    }
    std::vector<std::string> mid;
    for (std::size_t j = 0; j < img.size(); ++j)
      if (origin[j] >= k && origin[j] + 2 * k <= m) mid.push_back(img[j]);
    for (std::size_t i = 0; i + n <= mid.size(); ++i) out.insert(Word(std::vector<std::string>(mid.begin() + i, mid.begin() + i + n)));
  }
  return out;
}

std::set<Word> gap_language(const std::function<bool(long)>& in_s, long sup, std::size_t n) {
  auto completable = [&](long run) { return sup < 0 || run <= sup; };
  std::set<Word> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::vector<std::string> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back((bits >> (n - 1 - i)) & 1 ? "1" : "0");
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] == "1") ones.push_back(i);
    bool ok = true;
    if (ones.empty()) {
      ok = completable(static_cast<long>(n));
    } else {
      ok = completable(static_cast<long>(ones.front())) && completable(static_cast<long>(n - 1 - ones.back()));
      for (std::size_t i = 1; i < ones.size() && ok; ++i) ok = in_s(static_cast<long>(ones[i] - ones[i - 1] - 1));
    }
    if (ok) out.insert(Word(w));
  }
  return out;
}

}  // namespace oracle
