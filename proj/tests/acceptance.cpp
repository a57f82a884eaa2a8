#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matrices.hpp"
#include "oracles.hpp"
#include "pipelines.hpp"
#include "support.hpp"
#include "symdyn/entropy.hpp"
#include "symdyn/invariants.hpp"
#include "symdyn/moves.hpp"
#include "symdyn/presentation.hpp"
#include "symdyn/sgap.hpp"

using namespace symdyn;
using testing_support::full_shift;
using testing_support::golden_mean;

namespace {

const double kLogPhi = std::log2((1 + std::sqrt(5.0)) / 2);

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (++failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const { return failures_ > 3 ? notes_.str() + "; ..." : notes_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

struct Criterion {
  int id;
  std::string title;
  double seconds;  // 0 when untimed
  std::function<void(Check&)> body;
};

double perron_of(const ForbiddenSetSFT& x) { return perron_entropy(sft_to_edge_shift(x).graph).value; }

void full_shift_invariants(Check& c) {
  for (long r = 2; r <= 10; ++r) {
    SignedBFGroup g = bowen_franks(IntMatrix({{r}}));
    c.expect(g.sign == -1 && g.divisors == std::vector<Integer>{Integer(r - 1)}, "BF of [" + std::to_string(r) + "]");
    for (long s = 2; s <= 10; ++s)
      c.expect(franks_decide(IntMatrix({{r}}), IntMatrix({{s}})) == (r == s),
               "decide [" + std::to_string(r) + "] vs [" + std::to_string(s) + "]");
  }
}

void smith_oracle(Check& c) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a = testing_support::random_matrix(rng, dim(rng), dim(rng), -5, 5);
    SmithForm s = smith_normal_form(a);
    const std::string tag = a.str();
    c.expect(s.U * a * s.V == s.D, "UAV != D for " + tag);
    c.expect(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "not unimodular for " + tag);
    const std::size_t r = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) c.expect(s.D(i, j) == 0, "D not diagonal for " + tag);
    Integer prod = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (i + 1 < r) {
        const Integer& d = s.D(i, i);
        c.expect(d == 0 ? s.D(i + 1, i + 1) == 0 : s.D(i + 1, i + 1) % d == 0, "chain broken for " + tag);
      }
      prod *= s.D(i, i);
      c.expect(prod == oracle::minors_gcd(a, i + 1), "minor gcd mismatch for " + tag);
    }
  }
}

void invariance_under_moves(Check& c) {
  std::mt19937 rng(3);
  int done = 0;
  while (done < 100) {
    const std::size_t n = 1 + done % 4;
    IntMatrix a = testing_support::random_matrix(rng, n, n, 0, 2);
    if (!is_irreducible_matrix(a)) continue;
    ++done;
    const SignedBFGroup base = bowen_franks(a);
    IntMatrix cur = a;
    for (int step = 0; step < 6; ++step) {
      const std::size_t k = cur.rows();
      if (step % 2 == 0 || k >= 6) {
        std::vector<std::pair<std::size_t, std::size_t>> positive;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if (cur(i, j) > 0) positive.emplace_back(i, j);
        auto [i, j] = positive[rng() % positive.size()];
        cur = expansion_move(cur, i, j);
      } else {
        const bool transpose = step % 4 == 1;
        auto [r, s] = testing_support::random_out_split(rng, transpose ? cur.transpose() : cur, rng() % k);
        if (transpose) std::tie(r, s) = std::pair{s.transpose(), r.transpose()};
        IntMatrix next = s * r;
        c.expect(verify_elementary_equivalence(cur, next, r, s), "factorization rejected");
        cur = next;
      }
      c.expect(bowen_franks(cur) == base, "invariant changed from " + a.str());
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    IntMatrix r = testing_support::random_matrix(rng, m, n, 0, 3);
    IntMatrix s = testing_support::random_matrix(rng, n, m, 0, 3);
    c.expect(determinant(IntMatrix::identity(m) - r * s) == determinant(IntMatrix::identity(n) - s * r),
             "Sylvester fails for " + r.str());
  }
}

void golden_mean_vs_full_shift(Check& c) {
  IntMatrix gm({{1, 1}, {1, 0}});
  c.expect(franks_decide(gm, IntMatrix({{2}})), "not flow equivalent");
  SignedBFGroup g = bowen_franks(gm);
  c.expect(g.sign == -1 && g.divisors == std::vector<Integer>{Integer(1)}, "golden mean invariant is " + g.str());
  c.expect(bowen_franks(IntMatrix({{2}})) == g, "full 2-shift invariant differs");
}

void entropy_values(Check& c) {
  c.expect(perron_entropy(IntMatrix({{2}})).value == 1.0, "h([2]) != 1");
  c.expect(std::abs(perron_entropy(IntMatrix({{1, 1}, {1, 0}})).value - kLogPhi) < 1e-9, "golden mean Perron");
  c.expect(std::abs(entropy_word_count(golden_mean(), 24).value - kLogPhi) < 0.05, "golden mean word count");
}

void fractional_entropy(Check& c) {
  const Graph two = graph_from_adjacency(IntMatrix({{2}}));
  for (std::size_t n = 2; n <= 6; ++n) {
    const double h = perron_entropy(scale_entropy_construction(two, n)).value;
    c.expect(std::abs(h - 1.0 / static_cast<double>(n)) < 1e-9, "n=" + std::to_string(n) + " gives " + std::to_string(h));
  }
}

void entropy_boost(Check& c) {
  Boost b = boost_entropy_construction(full_shift({"a", "b"}), "a", "b", 2);
  const double h = entropy_word_count(b.result(), 10).value;
  c.expect(h >= 2.0, "word-count entropy " + std::to_string(h));
}

void expansion_bounds(Check& c) {
  std::mt19937 rng(8);
  int done = 0;
  while (done < 20) {
    auto x = testing_support::random_sft(rng, {"a", "b", "c"}, 1 + rng() % 4, 2, 3);
    if (is_empty(x)) continue;
    ++done;
    const double h = perron_of(x);
    const Symbol a = x.alphabet()[rng() % x.alphabet().size()];
    const double he = perron_of(symbol_expand(x, a).sft);
    c.expect(he <= h + 1e-9 && he >= h / 2 - 1e-9, "h=" + std::to_string(h) + " expanded " + std::to_string(he));
  }
}

SGapSet sampled(const std::function<bool(Gap)>& in, Gap bound) {
  SampledGaps s;
  s.bound = bound;
  for (Gap k = 0; k <= bound; ++k)
    if (in(k)) s.members.insert(k);
  return s;
}

bool is_prime(Gap k) {
  if (k < 2) return false;
  for (Gap d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

bool is_square(Gap k) {
  Gap r = 0;
  while (r * r < k) ++r;
  return r * r == k;
}

void sgap_suite(Check& c) {
  using Outcome = FEVerdict::Outcome;
  c.expect(classify_type(FiniteGaps{{0, 2}}).type == ShiftType::FiniteType, "{0,2} not finite type");
  c.expect(fe_equal(FiniteGaps{{0, 2}}, FiniteGaps{{5, 9}}, 50).outcome == Outcome::Equivalent, "{0,2} vs {5,9}");
  auto eo = fe_equal(PeriodicGaps{{}, {0}, 2}, PeriodicGaps{{}, {1}, 2}, 50);
  c.expect(eo.outcome == Outcome::Equivalent && eo.witness && eo.witness->r == 1, "evens vs odds");
  c.expect(fe_equal(PeriodicGaps{{}, {0}, 2}, PeriodicGaps{{}, {0}, 3}, 50).outcome == Outcome::NotEquivalent,
           "N=2 vs N=3");
  SGapSet primes = sampled(is_prime, 200);
  auto pp = fe_equal(primes, sampled([](Gap k) { return is_prime(k - 5); }, 200), 200);
  c.expect(pp.outcome == Outcome::Equivalent && pp.witness == Witness{0, 5}, "primes vs primes+5");
  auto ps = fe_equal(primes, sampled(is_square, 200), 200);
  c.expect(ps.outcome == Outcome::NotEquivalentUpTo && ps.bound == 200, "primes vs squares");
}

void periodic_transport(Check& c) {
  std::mt19937 rng(10);
  int done = 0;
  while (done < 100) {
    auto x = testing_support::random_irreducible_sft(rng);
    auto p = testing_support::random_pipeline(rng, x, 4);
    auto u = testing_support::random_cycle(rng, x);
    if (!u) continue;
    ++done;
    const unsigned long bound = deciding_length_bound(p).get_ui();
    const std::size_t k = (bound + u->size() - 1) / u->size();
    PeriodicOrbit v = pipeline_apply_periodic(p, PeriodicOrbit(*u));
    Word a = pipeline_apply_word(p, u->power(k));
    Word b = pipeline_apply_word(p, u->power(k + 1));
    c.expect(!a.empty() && testing_support::is_single_insertion(a, b, v), "u=" + u->str() + " v=" + v.cycle().str());
  }
}

void language_oracle(Check& c) {
  const std::vector<std::string> ab{"a", "b"};
  std::vector<Word> pool;
  for (std::size_t len = 1; len <= 3; ++len)
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      Word w;
      for (std::size_t i = 0; i < len; ++i) w.push_back(ab[(bits >> i) & 1]);
      pool.push_back(w);
    }
  std::vector<std::set<Word>> sets{{}};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    sets.push_back({pool[i]});
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      sets.push_back({pool[i], pool[j]});
      for (std::size_t k = j + 1; k < pool.size(); ++k) sets.push_back({pool[i], pool[j], pool[k]});
    }
  }
  for (const auto& f : sets) {
    ForbiddenSetSFT x(Alphabet(ab), f);
    for (std::size_t n = 1; n <= 6; ++n)
      c.expect(enumerate_language(x, n) == oracle::language(ab, f, n), "mismatch at n=" + std::to_string(n));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "full-shift invariants", 1.0, full_shift_invariants},
      {2, "Smith normal form against the minor oracle", 10.0, smith_oracle},
      {3, "invariance under expansion moves and elementary equivalences", 0, invariance_under_moves},
      {4, "golden mean flow equivalent to the full 2-shift", 0, golden_mean_vs_full_shift},
      {5, "entropy values", 1.0, entropy_values},
      {6, "fractional entropy by scaling", 0, fractional_entropy},
      {7, "entropy boost", 0, entropy_boost},
      {8, "expansion entropy bounds", 0, expansion_bounds},
      {9, "S-gap suite", 5.0, sgap_suite},
      {10, "periodic transport through random pipelines", 0, periodic_transport},
      {11, "language against brute-force bi-extendability", 30.0, language_oracle},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.seconds > 0) c.expect(secs < cr.seconds, "took " + std::to_string(secs) + " s");
    failed += !c.ok();
    std::printf("%s %2d %s (%.2f s)%s%s\n", c.ok() ? "PASS" : "FAIL", cr.id, cr.title.c_str(), secs, c.ok() ? "" : ": ",
                c.notes().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
