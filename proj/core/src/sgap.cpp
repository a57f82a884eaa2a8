#include "symdyn/sgap.hpp"

#include <algorithm>
#include <numeric>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool periodic_contains(const PeriodicGaps& s, Gap k) {
  if (s.R.count(k)) return true;
  return std::any_of(s.T.begin(), s.T.end(), [&](Gap t) { return k >= t && (k - t) % s.N == 0; });
}

Word gap_word(Gap k) {
  Word w{"1"};
  for (Gap i = 0; i < k; ++i) w.push_back("0");
  w.push_back("1");
  return w;
}

std::set<Gap> translate(const std::set<Gap>& s, Gap k) {
  std::set<Gap> out;
  for (Gap x : s) out.insert(x + k);
  return out;
}

// One past the largest element that breaks periodicity.
Gap periodic_threshold(const PeriodicGaps& s) {
  Gap m = 0;
  if (!s.R.empty()) m = std::max(m, *s.R.rbegin() + 1);
  if (!s.T.empty()) m = std::max(m, *s.T.rbegin() + 1);
  return m;
}

struct Profile {
  enum class Kind { Finite, Cofinite, Sofic, NonSofic };
  Kind kind = Kind::NonSofic;
  Gap size = 0;
  SoficTag tag;
  bool sampled = false;
};

SoficTag tag_of(const PeriodicGaps& minimal) {
  SoficTag tag;
  tag.k = static_cast<Gap>(minimal.T.size());
  tag.N = minimal.N;
  std::vector<Gap> base;
  for (Gap t : minimal.T) base.push_back(t % minimal.N);
  std::vector<Gap> best;
  for (Gap r = 0; r < minimal.N; ++r) {
    std::vector<Gap> cand;
    for (Gap t : base) cand.push_back((t + r) % minimal.N);
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  tag.residues = std::move(best);
  return tag;
}

Profile profile_exact(const SGapSet& s) {
  Profile p;
  if (auto f = std::get_if<FiniteGaps>(&s)) {
    p.kind = Profile::Kind::Finite;
    p.size = static_cast<Gap>(f->elements.size());
    return p;
  }
  PeriodicGaps m = minimal_form(std::get<PeriodicGaps>(s));
  if (m.N == 1) {
    p.kind = Profile::Kind::Cofinite;
  } else {
    p.kind = Profile::Kind::Sofic;
    p.tag = tag_of(m);
  }
  return p;
}

Profile profile(const SGapSet& s) {
  if (auto smp = std::get_if<SampledGaps>(&s)) {
    auto d = detect_eventual_periodicity(*smp);
    Profile p;
    if (d) p = profile_exact(*d);
    p.sampled = true;
    return p;
  }
  return profile_exact(s);
}

bool is_sampled(const SGapSet& s) { return std::holds_alternative<SampledGaps>(s); }

// Witness for translation r when both sets are known everywhere.
std::optional<Witness> exact_witness(const SGapSet& a, const SGapSet& b, Gap r) {
  auto threshold = [](const SGapSet& s) -> std::pair<Gap, Gap> {
    if (auto f = std::get_if<FiniteGaps>(&s)) return {f->elements.empty() ? 0 : *f->elements.rbegin() + 1, 1};
    const auto& p = std::get<PeriodicGaps>(s);
    return {periodic_threshold(p), p.N};
  };
  auto [ka, na] = threshold(a);
  auto [kb, nb] = threshold(b);
  Gap lo = std::max({ka, kb - r, -r, Gap{0}});
  Gap period = std::lcm(na, nb);
  for (Gap k = lo; k < lo + period; ++k)
    if (gap_contains(a, k) != gap_contains(b, k + r)) return std::nullopt;
  Gap n1 = 0, n2 = 0;
  for (Gap k = 0; k < lo; ++k)
    if (gap_contains(a, k) && (k + r < 0 || !gap_contains(b, k + r))) ++n1;
  for (Gap j = 0; j < lo + r; ++j)
    if (gap_contains(b, j) && (j - r < 0 || !gap_contains(a, j - r))) ++n2;
  if (n1 != n2) return std::nullopt;
  return Witness{n1, r};
}

// Witness for translation r checked on the common known window; unmatched
// elements must all sit in the lower half of that window.
std::optional<Witness> window_witness(const SGapSet& a, const SGapSet& b, Gap r) {
  auto ka = known_up_to(a);
  auto kb = known_up_to(b);
  Gap lo = std::max(Gap{0}, -r);
  Gap hi = 0;
  if (ka && kb) {
    hi = std::min(*ka, *kb - r);
  } else if (ka) {
    hi = *ka;
  } else {
    hi = *kb - r;
  }
  if (hi < lo) return std::nullopt;
  Gap mid = lo + (hi - lo) / 2;
  Gap n1 = 0, n2 = 0;
  for (Gap k = 0; k <= hi; ++k) {
    if (!gap_contains(a, k)) continue;
    if (k < lo) {
      ++n1;
    } else if (!gap_contains(b, k + r)) {
      if (k > mid) return std::nullopt;
      ++n1;
    }
  }
  for (Gap j = 0; j <= hi + r; ++j) {
    if (!gap_contains(b, j)) continue;
    if (j - r < lo) {
      ++n2;
    } else if (!gap_contains(a, j - r)) {
      if (j - r > mid) return std::nullopt;
      ++n2;
    }
  }
  if (n1 != n2) return std::nullopt;
  return Witness{n1, r};
}

std::optional<Witness> witness_for(const SGapSet& a, const SGapSet& b, Gap r) {
  if (!is_sampled(a) && !is_sampled(b)) return exact_witness(a, b, r);
  return window_witness(a, b, r);
}

std::optional<Witness> search_witness(const SGapSet& a, const SGapSet& b, Gap bound) {
  for (Gap d = 0; d <= bound; ++d)
    for (Gap r : {d, -d}) {
      if (d == 0 && r != 0) continue;
      if (auto w = witness_for(a, b, r); w && w->n <= bound) return w;
      if (d == 0) break;
    }
  return std::nullopt;
}

}  // namespace

void validate(const SGapSet& s) {
  auto nonneg = [](const std::set<Gap>& xs, const char* what) {
    if (!xs.empty() && *xs.begin() < 0) throw InputError(std::string(what) + " contains a negative element");
  };
  std::visit(Overloaded{
                 [&](const FiniteGaps& f) {
                   if (f.elements.empty()) throw InputError("finite gap set must be non-empty");
                   nonneg(f.elements, "elements");
                 },
                 [&](const PeriodicGaps& p) {
                   if (p.N < 1) throw InputError("period N must be at least 1");
                   if (p.T.empty()) throw InputError("T must be non-empty");
                   nonneg(p.R, "R");
                   nonneg(p.T, "T");
                 },
                 [&](const SampledGaps& smp) {
                   if (smp.bound < 0) throw InputError("bound must be nonnegative");
                   nonneg(smp.members, "members");
                   if (!smp.members.empty() && *smp.members.rbegin() > smp.bound) {
                     throw InputError("member " + std::to_string(*smp.members.rbegin()) + " exceeds the bound");
                   }
                 },
             },
             s);
}

bool gap_contains(const SGapSet& s, Gap k) {
  if (k < 0) return false;
  return std::visit(Overloaded{
                        [&](const FiniteGaps& f) { return f.elements.count(k) > 0; },
                        [&](const PeriodicGaps& p) { return periodic_contains(p, k); },
                        [&](const SampledGaps& smp) {
                          if (k > smp.bound) {
                            throw PreconditionError("membership of " + std::to_string(k) + " is beyond the sampled bound " +
                                                    std::to_string(smp.bound));
                          }
                          return smp.members.count(k) > 0;
                        },
                    },
                    s);
}

std::optional<Gap> known_up_to(const SGapSet& s) {
  if (auto smp = std::get_if<SampledGaps>(&s)) return smp->bound;
  return std::nullopt;
}

Gap min_element(const SGapSet& s) {
  return std::visit(Overloaded{
                        [](const FiniteGaps& f) { return *f.elements.begin(); },
                        [](const PeriodicGaps& p) {
                          Gap m = *p.T.begin();
                          if (!p.R.empty()) m = std::min(m, *p.R.begin());
                          return m;
                        },
                        [](const SampledGaps& smp) { return smp.members.empty() ? smp.bound + 1 : *smp.members.begin(); },
                    },
                    s);
}

std::set<Word> forbidden_words(const SGapSet& s, std::size_t max_len) {
  validate(s);
  std::set<Word> out;
  if (auto f = std::get_if<FiniteGaps>(&s)) {
    Gap m = *f->elements.rbegin();
    for (Gap k = 0; k < m; ++k)
      if (!f->elements.count(k)) out.insert(gap_word(k));
    Word zeros;
    for (Gap i = 0; i <= m; ++i) zeros.push_back("0");
    out.insert(zeros);
    return out;
  }
  if (auto smp = std::get_if<SampledGaps>(&s); smp && static_cast<Gap>(max_len) > smp->bound + 2) {
    throw InputError("max_len exceeds the sampled bound + 2");
  }
  for (Gap k = 0; k + 2 <= static_cast<Gap>(max_len); ++k)
    if (!gap_contains(s, k)) out.insert(gap_word(k));
  return out;
}

ForbiddenSetSFT sgap_sft(const SGapSet& s) {
  validate(s);
  Alphabet binary{"0", "1"};
  if (std::holds_alternative<FiniteGaps>(s)) return ForbiddenSetSFT(binary, forbidden_words(s, 0));
  if (auto p = std::get_if<PeriodicGaps>(&s)) {
    PeriodicGaps m = minimal_form(*p);
    if (m.N == 1) return ForbiddenSetSFT(binary, forbidden_words(s, static_cast<std::size_t>(*m.T.begin()) + 1));
  }
  throw PreconditionError("S-gap shift is not of finite type");
}

std::string to_string(ShiftType t) {
  switch (t) {
    case ShiftType::FiniteType:
      return "finite_type";
    case ShiftType::StrictlySofic:
      return "strictly_sofic";
    case ShiftType::NonSofic:
      return "non_sofic";
    case ShiftType::NotEventuallyPeriodicUpToBound:
      return "not_eventually_periodic_up_to_bound";
  }
  return {};
}

Classification classify_type(const SGapSet& s) {
  validate(s);
  if (std::holds_alternative<FiniteGaps>(s)) return {ShiftType::FiniteType, std::nullopt};
  if (auto p = std::get_if<PeriodicGaps>(&s)) {
    return {minimal_form(*p).N == 1 ? ShiftType::FiniteType : ShiftType::StrictlySofic, std::nullopt};
  }
  const auto& smp = std::get<SampledGaps>(s);
  auto d = detect_eventual_periodicity(smp);
  if (!d) return {ShiftType::NotEventuallyPeriodicUpToBound, smp.bound};
  return {classify_type(*d).type, smp.bound};
}

PeriodicGaps minimal_form(const PeriodicGaps& s) {
  validate(s);
  const Gap k0 = periodic_threshold(s);
  Gap d = s.N;
  for (Gap p = 1; p < s.N; ++p) {
    if (s.N % p != 0) continue;
    bool ok = true;
    for (Gap i = 0; i < s.N && ok; ++i) ok = periodic_contains(s, k0 + i) == periodic_contains(s, k0 + (i + p) % s.N);
    if (ok) {
      d = p;
      break;
    }
  }
  Gap start = 0;
  for (Gap k = k0 - 1; k >= 0; --k)
    if (periodic_contains(s, k) != periodic_contains(s, k + d)) {
      start = k + 1;
      break;
    }
  PeriodicGaps out;
  out.N = d;
  for (Gap k = 0; k < start; ++k)
    if (periodic_contains(s, k)) out.R.insert(k);
  for (Gap k = start; k < start + d; ++k)
    if (periodic_contains(s, k)) out.T.insert(k);
  return out;
}

SGapSet shift_set(const SGapSet& s, Gap k) {
  validate(s);
  if (min_element(s) + k < 0) throw InputError("translation makes an element negative");
  return std::visit(Overloaded{
                        [&](const FiniteGaps& f) -> SGapSet { return FiniteGaps{translate(f.elements, k)}; },
                        [&](const PeriodicGaps& p) -> SGapSet { return PeriodicGaps{translate(p.R, k), translate(p.T, k), p.N}; },
                        [&](const SampledGaps& smp) -> SGapSet {
                          if (smp.bound + k < 0) throw InputError("translation leaves no known window");
                          return SampledGaps{translate(smp.members, k), smp.bound + k};
                        },
                    },
                    s);
}

std::optional<SGapSet> detect_eventual_periodicity(const SampledGaps& s) {
  validate(s);
  const Gap b = s.bound;
  auto in = [&](Gap k) { return s.members.count(k) > 0; };
  for (Gap n = 1; 3 * n <= b; ++n) {
    Gap start = 0;
    for (Gap k = b - n; k >= 0; --k)
      if (in(k) != in(k + n)) {
        start = k + 1;
        break;
      }
    if (b + 1 - start < std::max(3 * n, (b + 3) / 3)) continue;
    PeriodicGaps p;
    p.N = n;
    for (Gap k = 0; k < start; ++k)
      if (in(k)) p.R.insert(k);
    for (Gap k = start; k < start + n; ++k)
      if (in(k)) p.T.insert(k);
    if (p.T.empty()) {
      if (p.R.empty()) return std::nullopt;
      return FiniteGaps{p.R};
    }
    return minimal_form(p);
  }
  return std::nullopt;
}

FEInvariant fe_invariant(const SGapSet& s) {
  validate(s);
  if (std::holds_alternative<SampledGaps>(s)) throw InputError("fe_invariant does not support sampled sets; use fe_equal");
  Profile p = profile_exact(s);
  switch (p.kind) {
    case Profile::Kind::Finite:
      return FullShiftTag{p.size};
    case Profile::Kind::Cofinite:
      return FullShiftTag{2};
    default:
      return p.tag;
  }
}

std::string to_string(const FEInvariant& tag) {
  if (auto f = std::get_if<FullShiftTag>(&tag)) return "FullShift(" + std::to_string(f->symbols) + ")";
  const auto& t = std::get<SoficTag>(tag);
  std::string out = "SoficTag(k=" + std::to_string(t.k) + ", N=" + std::to_string(t.N) + ", T={";
  for (std::size_t i = 0; i < t.residues.size(); ++i) out += (i ? "," : "") + std::to_string(t.residues[i]);
  return out + "})";
}

std::string to_string(FEVerdict::Outcome o) {
  switch (o) {
    case FEVerdict::Outcome::Equivalent:
      return "equivalent";
    case FEVerdict::Outcome::NotEquivalent:
      return "not_equivalent";
    case FEVerdict::Outcome::NotEquivalentUpTo:
      return "not_equivalent_up_to";
    case FEVerdict::Outcome::UnknownUpTo:
      return "unknown_up_to";
  }
  return {};
}

FEVerdict fe_equal(const SGapSet& a, const SGapSet& b, Gap search_bound) {
  if (search_bound < 1) throw InputError("search bound must be at least 1");
  validate(a);
  validate(b);
  using Kind = Profile::Kind;
  using Outcome = FEVerdict::Outcome;
  const Profile pa = profile(a), pb = profile(b);
  const bool bounded = pa.sampled || pb.sampled;
  auto equivalent = [](std::optional<Witness> w, std::string reason) {
    FEVerdict v;
    v.outcome = Outcome::Equivalent;
    v.witness = w;
    v.reason = std::move(reason);
    return v;
  };
  auto different = [&](std::string reason) {
    FEVerdict v;
    v.outcome = bounded ? Outcome::NotEquivalentUpTo : Outcome::NotEquivalent;
    v.reason = std::move(reason);
    if (bounded) v.bound = search_bound;
    return v;
  };
  auto unknown = [&](std::string reason) {
    FEVerdict v;
    v.outcome = Outcome::UnknownUpTo;
    v.reason = std::move(reason);
    v.bound = search_bound;
    return v;
  };
  auto full_shift_size = [](const Profile& p) { return p.kind == Kind::Finite ? p.size : Gap{2}; };
  const bool ft_a = pa.kind == Kind::Finite || pa.kind == Kind::Cofinite;
  const bool ft_b = pb.kind == Kind::Finite || pb.kind == Kind::Cofinite;

  if (!bounded) {
    if (ft_a && ft_b) {
      if (full_shift_size(pa) != full_shift_size(pb)) return different("flow equivalent to full shifts of different sizes");
      return equivalent(search_witness(a, b, search_bound),
                        "both flow equivalent to the full " + std::to_string(full_shift_size(pa)) + "-shift");
    }
    if (ft_a != ft_b) return different("exactly one of the shifts is of finite type");
    if (!(pa.tag == pb.tag)) return different("sofic invariants differ");
    if (auto w = search_witness(a, b, search_bound)) return equivalent(w, "cofinite subsets agree after translation");
    return unknown("sofic invariants agree but no translation witness was found");
  }

  if (auto w = search_witness(a, b, search_bound)) return equivalent(w, "cofinite subsets agree after translation on the known window");
  if (pa.kind != pb.kind && !(ft_a && ft_b)) return different("shift types differ on the known window");
  if (ft_a && ft_b && full_shift_size(pa) != full_shift_size(pb)) return different("full-shift sizes differ on the known window");
  if (pa.kind == Kind::Sofic && !(pa.tag == pb.tag)) return different("sofic invariants differ on the known window");
  if (pa.kind == Kind::NonSofic) return different("no cofinite translation match within the bound");
  return unknown("invariants agree on the known window but no witness was found");
}

bool check_witness(const SGapSet& a, const SGapSet& b, const Witness& w) {
  auto found = witness_for(a, b, w.r);
  return found && *found == w;
}

}  // namespace symdyn
