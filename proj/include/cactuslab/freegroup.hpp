#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cactuslab {

// Reduced words in the free group on x1..x_rank.  A letter is a nonzero
// int: +i means x_i, -i means x_i^-1.  Words are reduced on construction
// and stay reduced, so equality is plain letter-by-letter comparison.
class Word {
 public:
  Word() = default;
  explicit Word(int rank);
  static Word from_letters(int rank, const std::vector<int>& letters);
  static Word generator(int rank, int i, int sign = +1);

  // text form: letters separated by single spaces, "x2^-1" for inverses,
  // "e" for the empty word
  static Word parse(int rank, const std::string& text);
  std::string str() const;

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

Word multiply(const Word& a, const Word& b);
Word invert(const Word& a);
long exponent_sum(const Word& w, int i);

// writes w as conj * core * conj^-1 with core cyclically reduced;
// returns (core, conj)
std::pair<Word, Word> cyclic_reduce(const Word& w);
bool is_conjugate_to_generator(const Word& w, int i);

// Endomorphism of the free group, given by the images of the generators.
class Endomorphism {
 public:
  Endomorphism() = default;
  Endomorphism(int rank, std::vector<Word> images);
  static Endomorphism identity(int rank);

  int rank() const { return rank_; }
  const Word& image(int i) const;  // image of x_i, 1-based
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) = default;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

// (e after f): compose(e, f).apply(w) == e.apply(f.apply(w))
Endomorphism compose(const Endomorphism& e, const Endomorphism& f);

}  // namespace cactuslab
