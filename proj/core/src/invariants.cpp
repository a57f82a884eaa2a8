#include "symdyn/invariants.hpp"

#include <algorithm>

#include "symdyn/error.hpp"
#include "symdyn/graph.hpp"

namespace symdyn {

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm f{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = f.D;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return f;
      d.swap_rows(t, pi);
      f.U.swap_rows(t, pi);
      d.swap_cols(t, pj);
      f.V.swap_cols(t, pj);
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        dirty |= d(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        dirty |= d(t, j) != 0;
      }
      if (dirty) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            f.U.add_row_multiple(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

std::string SignedBFGroup::str() const {
  std::string out = "(" + std::to_string(sign) + ", [";
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (i) out += ", ";
    out += divisors[i].get_str();
  }
  return out + "])";
}

SignedBFGroup bowen_franks(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("Bowen-Franks group needs a square matrix");
  if (!a.is_nonnegative()) throw InputError("Bowen-Franks group needs a nonnegative matrix");
  IntMatrix m = IntMatrix::identity(a.rows()) - a;
  SignedBFGroup g;
  g.sign = sgn(determinant(m));
  for (const auto& d : smith_normal_form(m).diagonal())
    if (d != 1) g.divisors.push_back(d);
  if (g.divisors.empty()) g.divisors.push_back(1);
  return g;
}

bool is_irreducible_matrix(const IntMatrix& a) {
  if (!a.is_square() || !a.is_nonnegative() || a.rows() == 0) return false;
  Graph g = graph_from_adjacency(a);
  return g.edge_count() > 0 && is_strongly_connected(g);
}

bool is_single_orbit(const IntMatrix& a) {
  if (!is_irreducible_matrix(a)) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j);
    if (sum != 1) return false;
  }
  return true;
}

bool franks_decide(const IntMatrix& a, const IntMatrix& b) {
  auto check = [](const IntMatrix& m, const char* which) {
    if (!m.is_square() || !m.is_nonnegative()) {
      throw InputError(std::string(which) + " matrix must be square and nonnegative");
    }
    if (!is_irreducible_matrix(m)) throw PreconditionError(std::string(which) + " matrix is not irreducible");
    if (is_single_orbit(m)) throw PreconditionError(std::string(which) + " matrix presents a single periodic orbit");
  };
  check(a, "first");
  check(b, "second");
  return bowen_franks(a) == bowen_franks(b);
}

bool verify_elementary_equivalence(const IntMatrix& a, const IntMatrix& b, const IntMatrix& r, const IntMatrix& s) {
  if (!a.is_square() || !b.is_square()) throw InputError("A and B must be square");
  if (r.rows() != a.rows() || r.cols() != b.rows() || s.rows() != b.rows() || s.cols() != a.rows()) {
    throw InputError("R must be m x n and S must be n x m");
  }
  if (!r.is_nonnegative() || !s.is_nonnegative()) throw PreconditionError("R and S must be nonnegative");
  return r * s == a && s * r == b;
}

IntMatrix expansion_move(const IntMatrix& a, std::size_t k, std::size_t l) {
  if (!a.is_square() || !a.is_nonnegative()) throw InputError("expansion needs a square nonnegative matrix");
  const std::size_t n = a.rows();
  if (k >= n || l >= n) throw InputError("expansion indices out of range");
  if (a(k, l) < 1) throw PreconditionError("expansion needs a(k,l) >= 1");
  IntMatrix out(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i + 1, j + 1) = a(i, j);
  out(k + 1, l + 1) -= 1;
  out(0, l + 1) = 1;
  out(k + 1, 0) = 1;
  return out;
}

}  // namespace symdyn
