#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symdyn/int_matrix.hpp"

namespace symdyn {

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // diagonal, d_i | d_{i+1}, nonnegative, zeros last
  IntMatrix V;  // unimodular, cols x cols
  std::vector<Integer> diagonal() const;
};

// U * A * V = D. Pivot: smallest nonzero |entry| of the active block, ties in row-major order.
SmithForm smith_normal_form(const IntMatrix& a);

// Signed Bowen-Franks group of A: cokernel of I - A as cyclic factors plus
// sign(det(I - A)). Unit factors are dropped; the trivial group is written [1].
struct SignedBFGroup {
  int sign = 0;
  std::vector<Integer> divisors;
  friend bool operator==(const SignedBFGroup&, const SignedBFGroup&) = default;
  std::string str() const;
};

SignedBFGroup bowen_franks(const IntMatrix& a);

// Square, nonnegative, strongly connected with at least one edge.
bool is_irreducible_matrix(const IntMatrix& a);
// Irreducible with every row sum 1, i.e. a single cycle.
bool is_single_orbit(const IntMatrix& a);

// Flow equivalence of irreducible edge shifts that are not single orbits.
bool franks_decide(const IntMatrix& a, const IntMatrix& b);

// A = R S and S R = B for nonnegative R, S.
bool verify_elementary_equivalence(const IntMatrix& a, const IntMatrix& b, const IntMatrix& r, const IntMatrix& s);

// Splits the edges k -> l through a new vertex placed first (index 0); k, l are 0-based.
IntMatrix expansion_move(const IntMatrix& a, std::size_t k, std::size_t l);

}  // namespace symdyn
