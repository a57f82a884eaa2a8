#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/int_matrix.hpp"
#include "symdyn/sft.hpp"

namespace symdyn {

// X^{a -> a◇}: forbidden set F^{a->a◇} ∪ {b◇ : b != a} ∪ {◇◇} ∪ {ab : b in A}.
struct Expansion {
  ForbiddenSetSFT sft;
  Symbol fresh;
};
Expansion symbol_expand(const ForbiddenSetSFT& sft, const Symbol& a, const std::optional<Symbol>& fresh = {});

// Removes d where "d follows a" holds in both directions. Throws with a witness otherwise.
ForbiddenSetSFT symbol_contract(const ForbiddenSetSFT& sft, const Symbol& a, const Symbol& d);
// Empty if d is removable after a, else a two-symbol witness.
std::optional<Word> contraction_witness(const ForbiddenSetSFT& sft, const Symbol& a, const Symbol& d);

bool is_nonoverlapping(const Word& w);
bool admits_nontrivial_overlaps(const ForbiddenSetSFT& sft, const Word& w);

// Shift image under a sliding block code whose image is again of finite type.
ForbiddenSetSFT recode_image(const ForbiddenSetSFT& sft, const BlockMap& phi, const Alphabet& target);

struct Move {
  enum class Kind { Expand, Contract, Recode };
  Kind kind = Kind::Expand;
  Symbol symbol;   // expand: a; contract: a
  Symbol other;    // expand: ◇ introduced; contract: d removed
  BlockMap map;    // recode
  std::string str() const;
};

// Requested operation; a word contraction expands into several primitive moves.
struct MoveSpec {
  enum class Kind { Expand, Contract, WordContract, Recode };
  Kind kind = Kind::Expand;
  Symbol symbol;
  Symbol other;
  Word word;
  BlockMap map;
  std::string str() const;
};

struct Stage {
  Move move;
  ForbiddenSetSFT result;
  std::size_t spec_index = 0;
};

// Functional representation: source shift and a checked list of moves with a
// snapshot of the shift after every primitive move.
class MovePipeline {
 public:
  explicit MovePipeline(ForbiddenSetSFT source);

  const ForbiddenSetSFT& source() const { return source_; }
  const ForbiddenSetSFT& target() const { return stages_.empty() ? source_ : stages_.back().result; }
  const std::vector<MoveSpec>& specs() const { return specs_; }
  const std::vector<Stage>& stages() const { return stages_; }

  Symbol expand(const Symbol& a);
  void contract(const Symbol& a, const Symbol& d);
  // Contracts w to a fresh symbol (or `name` if given); returns the symbol.
  Symbol word_contract(const Word& w, const std::optional<Symbol>& name = {});
  // Recode by an injective 1-block renaming.
  void rename(const BlockMap& map);
  void apply(const MoveSpec& spec);

 private:
  void push(Move move, ForbiddenSetSFT result);
  ForbiddenSetSFT source_;
  std::vector<MoveSpec> specs_;
  std::vector<Stage> stages_;
};

ForbiddenSetSFT word_contract(const ForbiddenSetSFT& sft, const Word& w);

// Image T(w); empty means w is not deciding.
Word pipeline_apply_word(const MovePipeline& p, const Word& w);
PeriodicOrbit pipeline_apply_periodic(const MovePipeline& p, const PeriodicOrbit& u);

// ((M+1) n + 1) 2^n with n primitive moves and M the largest recode window.
Integer deciding_length_bound(std::size_t move_count, std::size_t max_window);
Integer deciding_length_bound(const MovePipeline& p);

}  // namespace symdyn
