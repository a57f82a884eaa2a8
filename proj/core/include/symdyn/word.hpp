#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symdyn {

using Symbol = std::string;

// Splits UTF-8 text into code points, one symbol each.
std::vector<Symbol> split_codepoints(std::string_view text);

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  // One symbol per code point.
  static Word from_codepoints(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  const Symbol& back() const { return symbols_.back(); }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  // 0-based factor of length len.
  Word factor(std::size_t pos, std::size_t len) const;
  // 1-based inclusive w[i..j].
  Word subword(std::size_t i, std::size_t j) const;
  Word prefix(std::size_t len) const { return factor(0, len); }
  Word suffix(std::size_t len) const { return factor(size() - len, len); }

  void push_back(Symbol s) { symbols_.push_back(std::move(s)); }
  Word& operator+=(const Word& other);
  friend Word operator+(Word a, const Word& b) { return a += b; }
  Word power(std::size_t k) const;

  bool is_prefix_of(const Word& other) const;
  bool occurs_in(const Word& other) const;
  std::size_t count(const Symbol& s) const;

  // True when w is not u^k for any k >= 2.
  bool is_primitive() const;
  Word primitive_root() const;
  // Lexicographically least rotation.
  Word least_rotation() const;

  // Concatenation of the symbol texts.
  std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Symbol> symbols);
  Alphabet(std::initializer_list<Symbol> symbols) : Alphabet(std::vector<Symbol>(symbols)) {}

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  bool contains(const Symbol& s) const;
  std::optional<std::size_t> index_of(const Symbol& s) const;
  bool all_single_codepoint() const;

  // A symbol "◇k" not yet present, with k the smallest unused counter.
  Symbol fresh_symbol() const;
  Alphabet with(const Symbol& s) const;
  Alphabet without(const Symbol& s) const;

  // Parses text against this alphabet by greedy longest match.
  Word parse(std::string_view text) const;
  // Throws InputError if w uses a symbol outside the alphabet.
  void check(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<Symbol> symbols_;
};

// A periodic point u^inf, stored as the least rotation of a primitive cycle.
class PeriodicOrbit {
 public:
  explicit PeriodicOrbit(const Word& cycle);
  const Word& cycle() const { return cycle_; }
  std::size_t period() const { return cycle_.size(); }
  // Rotation of the cycle starting at offset, i.e. the orbit point shifted offset times.
  Word point(std::size_t offset) const;
  friend auto operator<=>(const PeriodicOrbit&, const PeriodicOrbit&) = default;
  friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;

 private:
  Word cycle_;
};

std::string to_string(const std::vector<Word>& words);

}  // namespace symdyn
