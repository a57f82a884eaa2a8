#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "symdyn/int_matrix.hpp"
#include "symdyn/word.hpp"

namespace symdyn {

// Partial deterministic automaton; every state accepts. Used to represent
// factor languages: a word is in the language iff it can be read from start.
class Automaton {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  Automaton() = default;
  explicit Automaton(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return delta_.size(); }
  bool empty() const { return delta_.empty(); }
  std::size_t start() const { return start_; }
  void set_start(std::size_t s) { start_ = s; }

  std::size_t add_state();
  void set(std::size_t state, std::size_t symbol, std::size_t target) { delta_[state][symbol] = target; }
  std::size_t next(std::size_t state, std::size_t symbol) const { return delta_[state][symbol]; }

  // kNone if some symbol cannot be read.
  std::size_t run(std::size_t state, const Word& w) const;
  bool accepts(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<std::size_t>> delta_;
  std::size_t start_ = 0;
};

// Merges states with equal future languages.
Automaton minimize(const Automaton& a);
// States reachable from start only.
Automaton trim_unreachable(const Automaton& a);

Integer count_words(const Automaton& a, std::size_t n);
std::set<Word> words_of_length(const Automaton& a, std::size_t n);
bool same_language(const Automaton& a, const Automaton& b);

// Partition of states into classes of equal future languages.
std::vector<std::size_t> future_classes(const std::vector<std::vector<std::size_t>>& delta);

}  // namespace symdyn
