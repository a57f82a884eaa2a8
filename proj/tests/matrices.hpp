#pragma once

#include <random>
#include <utility>

#include "symdyn/int_matrix.hpp"

namespace testing_support {

inline symdyn::IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> entry(lo, hi);
  symdyn::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

// Out-splitting of vertex v: A = R S and B = S R with B one vertex larger.
inline std::pair<symdyn::IntMatrix, symdyn::IntMatrix> random_out_split(std::mt19937& rng, const symdyn::IntMatrix& a,
                                                                        std::size_t v) {
  const std::size_t n = a.rows();
  symdyn::IntMatrix s(n + 1, n);
  symdyn::IntMatrix r(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    r(i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) s(i, j) = a(i, j);
  }
  r(v, n) = 1;
  for (std::size_t j = 0; j < n; ++j) {
    long total = a(v, j).get_si();
    long part = std::uniform_int_distribution<long>(0, total)(rng);
    s(v, j) = part;
    s(n, j) = total - part;
  }
  return {r, s};
}

}  // namespace testing_support
