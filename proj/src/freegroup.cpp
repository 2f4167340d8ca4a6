#include "cactuslab/freegroup.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cactuslab {

static void check_rank(int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
}

static void check_letter(int rank, int letter) {
  int i = std::abs(letter);
  if (letter == 0 || i > rank)
    throw std::invalid_argument("letter out of range for rank " + std::to_string(rank));
}

static void push_cancel(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word Word::from_letters(int rank, const std::vector<int>& letters) {
  Word w(rank);
  w.letters_.reserve(letters.size());
  for (int l : letters) {
    check_letter(rank, l);
    push_cancel(w.letters_, l);
  }
  return w;
}

Word Word::generator(int rank, int i, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  return from_letters(rank, {sign * i});
}

Word Word::parse(int rank, const std::string& text) {
  check_rank(rank);
  std::istringstream in(text);
  std::string tok;
  std::vector<int> letters;
  bool saw_e = false, saw_letter = false;
  while (in >> tok) {
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    if (tok.size() < 2 || tok[0] != 'x')
      throw std::invalid_argument("bad word token '" + tok + "'");
    std::size_t caret = tok.find('^');
    std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    long power = 1;
    if (caret != std::string::npos) {
      std::string p = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        power = std::stol(p, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in token '" + tok + "'");
      }
      if (used != p.size()) throw std::invalid_argument("bad exponent in token '" + tok + "'");
    }
    std::size_t used = 0;
    int i = 0;
    try {
      i = std::stoi(idx, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator index in token '" + tok + "'");
    }
    if (used != idx.size() || i < 1)
      throw std::invalid_argument("bad generator index in token '" + tok + "'");
    check_letter(rank, i);
    saw_letter = true;
    int sign = power < 0 ? -1 : 1;
    for (long k = 0; k < std::labs(power); ++k) letters.push_back(sign * i);
  }
  if (saw_e && saw_letter)
    throw std::invalid_argument("'e' mixed with letters in word text");
  return from_letters(rank, letters);
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    int l = letters_[k];
    out += 'x';
    out += std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

static void require_same_rank(int a, int b) {
  if (a != b) throw std::invalid_argument("rank mismatch");
}

Word multiply(const Word& a, const Word& b) {
  require_same_rank(a.rank(), b.rank());
  std::vector<int> out = a.letters();
  for (int l : b.letters()) push_cancel(out, l);
  return Word::from_letters(a.rank(), out);
}

Word invert(const Word& a) {
  std::vector<int> out;
  out.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) out.push_back(-*it);
  return Word::from_letters(a.rank(), out);
}

long exponent_sum(const Word& w, int i) {
  check_letter(w.rank(), i);
  long s = 0;
  for (int l : w.letters()) {
    if (l == i) ++s;
    if (l == -i) --s;
  }
  return s;
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  const std::vector<int>& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<int> core(ls.begin() + lo, ls.begin() + hi);
  std::vector<int> conj(ls.begin(), ls.begin() + lo);
  return {Word::from_letters(w.rank(), core), Word::from_letters(w.rank(), conj)};
}

bool is_conjugate_to_generator(const Word& w, int i) {
  check_letter(w.rank(), i);
  return cyclic_reduce(w).first == Word::generator(w.rank(), i);
}

Endomorphism::Endomorphism(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  check_rank(rank);
  if (static_cast<int>(images_.size()) != rank)
    throw std::invalid_argument("endomorphism needs one image per generator");
  for (const Word& w : images_) require_same_rank(w.rank(), rank);
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return Endomorphism(rank, std::move(images));
}

const Word& Endomorphism::image(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("generator index out of range");
  return images_[static_cast<std::size_t>(i) - 1];
}

Word Endomorphism::apply(const Word& w) const {
  require_same_rank(w.rank(), rank_);
  std::vector<int> out;
  for (int l : w.letters()) {
    const Word& im = images_[static_cast<std::size_t>(std::abs(l)) - 1];
    if (l > 0) {
      for (int m : im.letters()) push_cancel(out, m);
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) push_cancel(out, -*it);
    }
  }
  return Word::from_letters(rank_, out);
}

Endomorphism compose(const Endomorphism& e, const Endomorphism& f) {
  require_same_rank(e.rank(), f.rank());
  std::vector<Word> images;
  images.reserve(f.rank());
  for (int i = 1; i <= f.rank(); ++i) images.push_back(e.apply(f.image(i)));
  return Endomorphism(f.rank(), std::move(images));
}

}  // namespace cactuslab
