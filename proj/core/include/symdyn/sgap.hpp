#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "symdyn/sft.hpp"

namespace symdyn {

using Gap = std::int64_t;

struct FiniteGaps {
  std::set<Gap> elements;
  friend bool operator==(const FiniteGaps&, const FiniteGaps&) = default;
};

// R ∪ (T + N ℕ₀)
struct PeriodicGaps {
  std::set<Gap> R;
  std::set<Gap> T;
  Gap N = 1;
  friend bool operator==(const PeriodicGaps&, const PeriodicGaps&) = default;
};

// All members up to `bound`, nothing known beyond.
struct SampledGaps {
  std::set<Gap> members;
  Gap bound = 0;
  friend bool operator==(const SampledGaps&, const SampledGaps&) = default;
};

using SGapSet = std::variant<FiniteGaps, PeriodicGaps, SampledGaps>;

// Throws InputError on negative elements, empty finite sets, N < 1, empty T,
// or sampled members above the bound.
void validate(const SGapSet& s);

bool gap_contains(const SGapSet& s, Gap k);
// Largest index whose membership is known, if limited.
std::optional<Gap> known_up_to(const SGapSet& s);
Gap min_element(const SGapSet& s);

std::set<Word> forbidden_words(const SGapSet& s, std::size_t max_len);
// The S-gap shift over {0,1}; S must be finite or cofinite.
ForbiddenSetSFT sgap_sft(const SGapSet& s);

enum class ShiftType { FiniteType, StrictlySofic, NonSofic, NotEventuallyPeriodicUpToBound };
std::string to_string(ShiftType t);

struct Classification {
  ShiftType type = ShiftType::FiniteType;
  std::optional<Gap> bound;  // set when the verdict only covers [0, bound]
};
Classification classify_type(const SGapSet& s);

PeriodicGaps minimal_form(const PeriodicGaps& s);
SGapSet shift_set(const SGapSet& s, Gap k);

// EventuallyPeriodic (minimal form), or FiniteGaps when the observed tail is empty.
std::optional<SGapSet> detect_eventual_periodicity(const SampledGaps& s);

struct FullShiftTag {
  Gap symbols = 0;
  friend bool operator==(const FullShiftTag&, const FullShiftTag&) = default;
};
struct SoficTag {
  Gap k = 0;
  Gap N = 1;
  std::vector<Gap> residues;
  friend bool operator==(const SoficTag&, const SoficTag&) = default;
};
using FEInvariant = std::variant<FullShiftTag, SoficTag>;
FEInvariant fe_invariant(const SGapSet& s);
std::string to_string(const FEInvariant& tag);

struct Witness {
  Gap n = 0;  // elements removed from each set
  Gap r = 0;  // translation of the first set onto the second
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct FEVerdict {
  enum class Outcome { Equivalent, NotEquivalent, NotEquivalentUpTo, UnknownUpTo };
  Outcome outcome = Outcome::UnknownUpTo;
  std::optional<Witness> witness;
  std::string reason;
  std::optional<Gap> bound;
};
std::string to_string(FEVerdict::Outcome o);

FEVerdict fe_equal(const SGapSet& a, const SGapSet& b, Gap search_bound);

// Removing the unmatched elements of a and b and translating a by w.r makes
// them equal on the common known window, with n removals on each side.
bool check_witness(const SGapSet& a, const SGapSet& b, const Witness& w);

}  // namespace symdyn
