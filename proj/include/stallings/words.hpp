#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stallings/errors.hpp"
#include "stallings/rng.hpp"

namespace stallings {

/// Alphabet of a finitely generated free group. Generators are indexed
/// 1..rank and written as the lowercase ASCII letters a..z, their inverses
/// as the matching uppercase letters.
class Alphabet {
 public:
  static constexpr int kMaxRank = 26;

  explicit Alphabet(int rank) : rank_(rank) {
    if (rank < 1 || rank > kMaxRank) {
      throw RankError("alphabet rank must be in 1.." +
                      std::to_string(kMaxRank) + ", got " +
                      std::to_string(rank));
    }
  }

  int rank() const { return rank_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int rank_;
};

/// A signed generator: index in 1..rank, sign +1 for the generator itself
/// and -1 for its inverse.
struct Letter {
  int index;
  int sign;

  Letter inverse() const { return {index, -sign}; }
  char symbol() const {
    return static_cast<char>((sign > 0 ? 'a' : 'A') + index - 1);
  }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over a fixed alphabet. The empty word is the
/// identity. Instances are immutable; every constructor reduces.
class Word {
 public:
  /// Identity word.
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}

  /// Reduces the letter sequence. Throws RankError if a letter index
  /// exceeds the alphabet rank.
  Word(std::span<const Letter> letters, Alphabet alphabet);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Alphabet alphabet() const { return alphabet_; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Parses lowercase/uppercase ASCII into a reduced word ("abA" -> a b a^-1).
/// Throws ParseError on non-alphabetic characters and RankError when a
/// letter lies beyond the alphabet.
Word parse(const std::string& text, Alphabet alphabet);

/// Free reduction of an arbitrary letter sequence.
Word reduce(std::span<const Letter> letters, Alphabet alphabet);

Word invert(const Word& w);

/// Reduced product u * v. Throws AlphabetMismatchError if the alphabets
/// differ.
Word concat(const Word& u, const Word& v);

/// Uniformly random reduced word of exactly the requested length: the first
/// letter is uniform over 2*rank choices, every later letter uniform over
/// the 2*rank - 1 non-cancelling ones. Deterministic for a fixed seed.
Word random_reduced_word(std::size_t length, Alphabet alphabet,
                         std::uint64_t seed);

/// Same distribution, drawing from an existing stream.
Word random_reduced_word(std::size_t length, Alphabet alphabet,
                         SplitMix64& rng);

/// Round-trippable text form; the identity becomes the empty string.
std::string to_text(const Word& w);

/// Human-readable form; the identity prints as "1".
std::string display(const Word& w);

}  // namespace stallings
