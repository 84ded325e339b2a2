#include "stallings/words.hpp"

#include <cctype>

#include "stallings/rng.hpp"

namespace stallings {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::span<const Letter> letters, Alphabet alphabet)
    : alphabet_(alphabet) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.index < 1 || l.index > alphabet.rank()) {
      throw RankError("letter index " + std::to_string(l.index) +
                      " out of range for alphabet of rank " +
                      std::to_string(alphabet.rank()));
    }
    if (l.sign != 1 && l.sign != -1) {
      throw ParseError("letter sign must be +1 or -1");
    }
    push_reduced(letters_, l);
  }
}

Word parse(const std::string& text, Alphabet alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      letters.push_back({c - 'a' + 1, 1});
    } else if (c >= 'A' && c <= 'Z') {
      letters.push_back({c - 'A' + 1, -1});
    } else {
      throw ParseError(std::string("invalid character '") + c +
                       "' in word text");
    }
  }
  return Word(letters, alphabet);
}

Word reduce(std::span<const Letter> letters, Alphabet alphabet) {
  return Word(letters, alphabet);
}

Word invert(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return Word(letters, w.alphabet());
}

Word concat(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) {
    throw AlphabetMismatchError("cannot concatenate words over alphabets of rank " +
                                std::to_string(u.alphabet().rank()) + " and " +
                                std::to_string(v.alphabet().rank()));
  }
  std::vector<Letter> letters = u.letters();
  for (const Letter& l : v.letters()) {
    push_reduced(letters, l);
  }
  return Word(letters, u.alphabet());
}

Word random_reduced_word(std::size_t length, Alphabet alphabet,
                         SplitMix64& rng) {
  const int r = alphabet.rank();
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (letters.empty()) {
      auto k = rng.below(2 * static_cast<std::uint64_t>(r));
      letters.push_back({static_cast<int>(k / 2) + 1, k % 2 == 0 ? 1 : -1});
      continue;
    }
    // sample over the 2r signed letters minus the cancelling one by
    // remapping the forbidden slot onto the unused final slot
    const Letter forbidden = letters.back().inverse();
    auto k = rng.below(2 * static_cast<std::uint64_t>(r) - 1);
    Letter l{static_cast<int>(k / 2) + 1, k % 2 == 0 ? 1 : -1};
    if (l == forbidden) {
      l = {r, -1};
    }
    letters.push_back(l);
  }
  return Word(letters, alphabet);
}

Word random_reduced_word(std::size_t length, Alphabet alphabet,
                         std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_reduced_word(length, alphabet, rng);
}

std::string to_text(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) {
    out.push_back(l.symbol());
  }
  return out;
}

std::string display(const Word& w) {
  return w.empty() ? "1" : to_text(w);
}

}  // namespace stallings
