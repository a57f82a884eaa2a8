#include "symdyn/word.hpp"

#include <algorithm>
#include <set>

#include "symdyn/error.hpp"

namespace symdyn {

std::vector<Symbol> split_codepoints(std::string_view text) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (lead >= 0xF0) {
      len = 4;
    } else if (lead >= 0xE0) {
      len = 3;
    } else if (lead >= 0xC0) {
      len = 2;
    } else if (lead >= 0x80) {
      throw InputError("invalid UTF-8 lead byte in \"" + std::string(text) + "\"");
    }
    if (i + len > text.size()) throw InputError("truncated UTF-8 sequence in \"" + std::string(text) + "\"");
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Word Word::from_codepoints(std::string_view text) { return Word(split_codepoints(text)); }

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos + len > symbols_.size()) throw PreconditionError("factor out of range");
  return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::subword(std::size_t i, std::size_t j) const {
  if (i < 1 || i > j || j > size()) {
    throw PreconditionError("subword indices must satisfy 1 <= i <= j <= |w|");
  }
  return factor(i - 1, j - i + 1);
}

Word& Word::operator+=(const Word& other) {
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

Word Word::power(std::size_t k) const {
  Word out;
  out.symbols_.reserve(size() * k);
  for (std::size_t i = 0; i < k; ++i) out += *this;
  return out;
}

bool Word::is_prefix_of(const Word& other) const {
  return size() <= other.size() && std::equal(begin(), end(), other.begin());
}

bool Word::occurs_in(const Word& other) const {
  return std::search(other.begin(), other.end(), begin(), end()) != other.end();
}

std::size_t Word::count(const Symbol& s) const {
  return static_cast<std::size_t>(std::count(begin(), end(), s));
}

bool Word::is_primitive() const { return primitive_root().size() == size(); }

Word Word::primitive_root() const {
  const std::size_t n = size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = symbols_[i] == symbols_[i - p];
    if (ok) return prefix(p);
  }
  return *this;
}

Word Word::least_rotation() const {
  Word best = *this;
  for (std::size_t r = 1; r < size(); ++r) {
    Word rot = factor(r, size() - r) + prefix(r);
    if (rot < best) best = std::move(rot);
  }
  return best;
}

std::string Word::str() const {
  std::string out;
  for (const auto& s : symbols_) out += s;
  return out;
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::set<Symbol> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw InputError("alphabet symbols must be non-empty");
    if (!seen.insert(s).second) throw InputError("duplicate alphabet symbol \"" + s + "\"");
  }
}

bool Alphabet::contains(const Symbol& s) const { return index_of(s).has_value(); }

std::optional<std::size_t> Alphabet::index_of(const Symbol& s) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

bool Alphabet::all_single_codepoint() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const Symbol& s) { return split_codepoints(s).size() == 1; });
}

Symbol Alphabet::fresh_symbol() const {
  for (std::size_t k = 1;; ++k) {
    Symbol candidate = "◇" + std::to_string(k);
    if (!contains(candidate)) return candidate;
  }
}

Alphabet Alphabet::with(const Symbol& s) const {
  if (contains(s)) return *this;
  auto syms = symbols_;
  syms.push_back(s);
  return Alphabet(std::move(syms));
}

Alphabet Alphabet::without(const Symbol& s) const {
  auto syms = symbols_;
  std::erase(syms, s);
  return Alphabet(std::move(syms));
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t best = 0;
    for (const auto& s : symbols_) {
      if (s.size() > best && text.substr(i, s.size()) == s) best = s.size();
    }
    if (best == 0) {
      throw InputError("cannot parse \"" + std::string(text) + "\" at byte " + std::to_string(i) +
                       ": no alphabet symbol matches");
    }
    out.push_back(Symbol(text.substr(i, best)));
    i += best;
  }
  return out;
}

void Alphabet::check(const Word& w) const {
  for (const auto& s : w) {
    if (!contains(s)) throw InputError("symbol \"" + s + "\" is not in the alphabet");
  }
}

PeriodicOrbit::PeriodicOrbit(const Word& cycle) {
  if (cycle.empty()) throw InputError("periodic orbit needs a non-empty cycle");
  cycle_ = cycle.primitive_root().least_rotation();
}

Word PeriodicOrbit::point(std::size_t offset) const {
  offset %= cycle_.size();
  return cycle_.factor(offset, cycle_.size() - offset) + cycle_.prefix(offset);
}

std::string to_string(const std::vector<Word>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += words[i].str();
  }
  return out + "}";
}

}  // namespace symdyn
