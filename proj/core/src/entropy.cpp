#include "symdyn/entropy.hpp"

#include <cmath>

#include "symdyn/error.hpp"
#include "symdyn/presentation.hpp"

namespace symdyn {

namespace {

double log2_integer(const Integer& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

EntropyEstimate count_estimate(const Automaton& lang, std::size_t n) {
  if (n == 0) throw InputError("word-count entropy needs n >= 1");
  EntropyEstimate e;
  e.method = EntropyEstimate::Method::WordCount;
  e.n_used = n;
  Integer count = count_words(lang, n);
  if (count == 0) {
    e.empty_shift = true;
    return e;
  }
  e.value = log2_integer(count) / static_cast<double>(n);
  return e;
}

}  // namespace

std::string to_string(EntropyEstimate::Method m) { return m == EntropyEstimate::Method::Perron ? "perron" : "wordcount"; }

EntropyEstimate entropy_word_count(const ForbiddenSetSFT& sft, std::size_t n) { return count_estimate(sft.language(), n); }

EntropyEstimate entropy_word_count(const LabeledGraph& presentation, std::size_t n) {
  return count_estimate(language_automaton(presentation), n);
}

double perron_root(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 0;
  bool cycle = true, any = false;
  for (std::size_t i = 0; i < n; ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < n; ++j) sum += a(i, j);
    cycle &= sum == 1;
    any |= sum != 0;
  }
  if (!any) return 0;
  if (cycle) return 1;
  // Power iteration on A + I, which is primitive when A is irreducible;
  // Collatz-Wielandt bounds bracket the root.
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).get_d() + (i == j ? 1.0 : 0.0);
  std::vector<double> x(n, 1.0), y(n);
  constexpr int kMaxIter = 100000;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    double lo = INFINITY, hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m[i][j] * x[j];
      y[i] = s;
      lo = std::min(lo, s / x[i]);
      hi = std::max(hi, s / x[i]);
    }
    if (hi - lo <= 1e-12 * hi) return (lo + hi) / 2 - 1;
    double norm = 0;
    for (double v : y) norm = std::max(norm, v);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw ConvergenceError("power iteration did not converge after " + std::to_string(kMaxIter) + " iterations");
}

EntropyEstimate perron_entropy(const Graph& g) {
  EntropyEstimate e;
  e.method = EntropyEstimate::Method::Perron;
  double root = 0;
  for (const auto& c : scc_decompose(g)) root = std::max(root, perron_root(adjacency(c)));
  if (root == 0) {
    e.empty_shift = true;
    return e;
  }
  e.value = std::max(0.0, std::log2(root));
  return e;
}

EntropyEstimate perron_entropy(const IntMatrix& a) { return perron_entropy(graph_from_adjacency(a)); }

EntropyEstimate sofic_entropy(const LabeledGraph& g) {
  return perron_entropy(is_right_resolving(g) ? g : determinize(g));
}

DirectedGraph scale_entropy_construction(const DirectedGraph& g, std::size_t n) {
  if (n == 0) throw InputError("scale factor must be at least 1");
  if (n == 1) return g;
  DirectedGraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v);
  for (const auto& e : g.edges()) {
    std::size_t prev = e.from;
    for (std::size_t j = 1; j < n; ++j) {
      std::size_t mid = out.add_vertex("e" + std::to_string(e.id) + "." + std::to_string(j));
      out.add_edge(prev, mid, j == 1 ? e.label : Symbol{});
      prev = mid;
    }
    out.add_edge(prev, e.to);
  }
  return out;
}

bool embeds_full_two_shift(const ForbiddenSetSFT& sft, const Symbol& a, const Symbol& b, std::size_t len) {
  const Automaton& lang = sft.language();
  auto ia = lang.alphabet().index_of(a);
  auto ib = lang.alphabet().index_of(b);
  if (!ia || !ib) throw InputError("embedding symbols must be in the alphabet");
  if (lang.empty()) return false;
  std::set<std::size_t> layer{lang.start()};
  for (std::size_t step = 0; step < len; ++step) {
    std::set<std::size_t> next;
    for (std::size_t s : layer) {
      std::size_t ta = lang.next(s, *ia), tb = lang.next(s, *ib);
      if (ta == Automaton::kNone || tb == Automaton::kNone) return false;
      next.insert(ta);
      next.insert(tb);
    }
    if (next == layer) return true;
    layer = std::move(next);
  }
  return true;
}

Boost boost_entropy_construction(const ForbiddenSetSFT& sft, const Symbol& a, const Symbol& b, std::size_t n_bits) {
  if (a == b) throw InputError("boost needs two different symbols");
  if (n_bits > 16) throw InputError("boost target too large");
  const std::size_t m = std::size_t{1} << n_bits;
  if (!embeds_full_two_shift(sft, a, b, 2 * m + 2)) {
    throw PreconditionError("the full shift on {" + a + "," + b + "} is not embedded");
  }
  Boost out{MovePipeline(sft)};
  for (std::size_t i = m; i >= 1; --i) {
    Word w{b};
    for (std::size_t j = 0; j < i; ++j) w.push_back(a);
    Symbol name = "◇" + std::to_string(i);
    const Alphabet& cur = out.pipeline.target().alphabet();
    out.pipeline.word_contract(w, cur.contains(name) ? std::optional<Symbol>{} : std::optional<Symbol>{name});
  }
  return out;
}

}  // namespace symdyn
