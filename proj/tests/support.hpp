#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "symdyn/sft.hpp"
#include "symdyn/word.hpp"

namespace testing_support {

inline symdyn::Word W(const std::string& text) { return symdyn::Word::from_codepoints(text); }

inline std::set<symdyn::Word> words(std::initializer_list<std::string> texts) {
  std::set<symdyn::Word> out;
  for (const auto& t : texts) out.insert(W(t));
  return out;
}

inline symdyn::ForbiddenSetSFT sft(std::vector<std::string> alphabet, std::initializer_list<std::string> forbidden) {
  return symdyn::ForbiddenSetSFT(symdyn::Alphabet(std::move(alphabet)), words(forbidden));
}

inline symdyn::ForbiddenSetSFT golden_mean() { return sft({"0", "1"}, {"11"}); }
inline symdyn::ForbiddenSetSFT full_shift(std::vector<std::string> alphabet) { return sft(std::move(alphabet), {}); }

// Random forbidden set over `alphabet`: `count` words of length 1..max_len.
inline symdyn::ForbiddenSetSFT random_sft(std::mt19937& rng, const std::vector<std::string>& alphabet,
                                          std::size_t count, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, alphabet.size() - 1);
  std::set<symdyn::Word> f;
  for (std::size_t i = 0; i < count; ++i) {
    symdyn::Word w;
    for (std::size_t j = len(rng); j > 0; --j) w.push_back(alphabet[sym(rng)]);
    f.insert(w);
  }
  return symdyn::ForbiddenSetSFT(symdyn::Alphabet(alphabet), f);
}

}  // namespace testing_support
