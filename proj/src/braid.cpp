#include "cactuslab/braid.hpp"

#include <cstdlib>
#include <utility>
#include <sstream>
#include <stdexcept>

namespace cactuslab {

BraidAut::BraidAut(Endomorphism forward, Endomorphism backward, bool check)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  if (forward_.rank() != backward_.rank())
    throw std::invalid_argument("rank mismatch between automorphism and inverse");
  if (check) {
    Endomorphism id = Endomorphism::identity(forward_.rank());
    if (compose(forward_, backward_) != id || compose(backward_, forward_) != id)
      throw std::invalid_argument("claimed inverse does not invert the automorphism");
  }
}

BraidAut BraidAut::identity(int rank) {
  Endomorphism id = Endomorphism::identity(rank);
  return BraidAut(id, id, false);
}

BraidAut sigma_generator(int i, int n) {
  if (i < 1 || i + 1 > n)
    throw std::invalid_argument("sigma index out of range");
  std::vector<Word> fwd, bwd;
  for (int k = 1; k <= n; ++k) {
    Word xk = Word::generator(n, k);
    if (k == i) {
      fwd.push_back(Word::from_letters(n, {i, i + 1, -i}));
      bwd.push_back(Word::generator(n, i + 1));
    } else if (k == i + 1) {
      fwd.push_back(Word::generator(n, i));
      bwd.push_back(Word::from_letters(n, {-(i + 1), i, i + 1}));
    } else {
      fwd.push_back(xk);
      bwd.push_back(xk);
    }
  }
  return BraidAut(Endomorphism(n, fwd), Endomorphism(n, bwd), false);
}

BraidAut multiply(const BraidAut& a, const BraidAut& b) {
  return BraidAut(compose(a.forward(), b.forward()), compose(b.backward(), a.backward()), false);
}

BraidAut inverse(const BraidAut& a) {
  return BraidAut(a.backward(), a.forward(), false);
}

BraidAut alpha_generator(int i, int j, int n) {
  if (i < 1 || i >= j || j > n)
    throw std::invalid_argument("alpha indices need 1 <= i < j <= n");
  BraidAut b = BraidAut::identity(n);
  for (int k = j - 1; k > i; --k) b = multiply(b, sigma_generator(k, n));
  BraidAut si = sigma_generator(i, n);
  b = multiply(b, multiply(si, si));
  for (int k = i + 1; k <= j - 1; ++k) b = multiply(b, inverse(sigma_generator(k, n)));
  return b;
}

bool is_pure(const BraidAut& b) {
  int n = b.rank();
  std::vector<int> prod;
  for (int k = 1; k <= n; ++k) {
    if (!is_conjugate_to_generator(b.forward().image(k), k)) return false;
    prod.push_back(k);
  }
  Word full = Word::from_letters(n, prod);
  return b.forward().apply(full) == full;
}

WElement WElement::identity(int n) {
  WElement w;
  w.rank_ = n;
  w.words_.assign(static_cast<std::size_t>(n), Word(n));
  w.cert_ = BraidAut::identity(n);
  return w;
}

WElement WElement::zeta(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("zeta index out of range");
  WElement w = identity(n);
  w.words_[static_cast<std::size_t>(i) - 1] = Word::generator(n, i);
  // conjugation by x_i fixes x_i, so alpha(zeta_i) is still the identity
  return w;
}

static Endomorphism conjugation_endo(int n, const std::vector<Word>& words) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Word& wi = words[static_cast<std::size_t>(i) - 1];
    images.push_back(multiply(multiply(wi, Word::generator(n, i)), invert(wi)));
  }
  return Endomorphism(n, images);
}

WElement WElement::from_words(int n, std::vector<Word> words) {
  if (static_cast<int>(words.size()) != n)
    throw std::invalid_argument("tuple needs exactly n entries");
  for (const Word& w : words)
    if (w.rank() != n) throw std::invalid_argument("tuple entry has wrong rank");
  WElement w;
  w.rank_ = n;
  w.words_ = std::move(words);
  if (conjugation_endo(n, w.words_) == Endomorphism::identity(n))
    w.cert_ = BraidAut::identity(n);
  return w;
}

WElement WElement::from_words_with_inverse(int n, std::vector<Word> words,
                                           std::vector<Word> inverse_images) {
  WElement w = from_words(n, std::move(words));
  // BraidAut's constructor check is the verification
  w.cert_ = BraidAut(conjugation_endo(n, w.words_), Endomorphism(n, std::move(inverse_images)));
  return w;
}

const Word& WElement::word(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("tuple index out of range");
  return words_[static_cast<std::size_t>(i) - 1];
}

Endomorphism WElement::conjugation() const {
  return conjugation_endo(rank_, words_);
}

const BraidAut& WElement::certificate() const {
  if (!cert_) throw std::invalid_argument("raw tuple has no inverse certificate");
  return *cert_;
}

bool w_is_valid(const WElement& w, std::string* why) {
  int n = w.rank();
  std::vector<int> prod_letters;
  for (int k = 1; k <= n; ++k) prod_letters.push_back(k);
  Word full = Word::from_letters(n, prod_letters);
  if (w.conjugation().apply(full) != full) {
    if (why) *why = "conjugation action moves the product x1...xn";
    return false;
  }
  // each alpha(w)(x_i) = w_i x_i w_i^-1 is conjugate to x_i by construction,
  // so the product condition is the only thing that can fail for a tuple
  return true;
}

WElement w_multiply(const WElement& v, const WElement& w) {
  if (v.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
  Endomorphism av = v.conjugation();
  std::vector<Word> words;
  words.reserve(v.words_.size());
  for (int i = 1; i <= v.rank(); ++i)
    words.push_back(multiply(av.apply(w.word(i)), v.word(i)));
  WElement out;
  out.rank_ = v.rank();
  out.words_ = std::move(words);
  if (v.cert_ && w.cert_) out.cert_ = multiply(*v.cert_, *w.cert_);
  return out;
}

WElement w_invert(const WElement& w) {
  const BraidAut& cert = w.certificate();
  std::vector<Word> words;
  words.reserve(w.words_.size());
  for (int i = 1; i <= w.rank(); ++i)
    words.push_back(cert.backward().apply(invert(w.word(i))));
  WElement out;
  out.rank_ = w.rank();
  out.words_ = std::move(words);
  out.cert_ = inverse(cert);
  return out;
}

PRBElement::PRBElement(BraidAut b, std::vector<long> t) : braid(std::move(b)), twists(std::move(t)) {
  if (static_cast<int>(twists.size()) != braid.rank())
    throw std::invalid_argument("twist vector length must match rank");
  if (!is_pure(braid))
    throw std::invalid_argument("braid part of a pure ribbon element must be pure");
}

PRBElement PRBElement::identity(int n) {
  return PRBElement(BraidAut::identity(n), std::vector<long>(static_cast<std::size_t>(n), 0));
}

PRBElement multiply(const PRBElement& a, const PRBElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<long> t = a.twists;
  for (std::size_t k = 0; k < t.size(); ++k) t[k] += b.twists[k];
  return PRBElement(multiply(a.braid, b.braid), std::move(t));
}

PRBElement inverse(const PRBElement& a) {
  std::vector<long> t;
  t.reserve(a.twists.size());
  for (long m : a.twists) t.push_back(-m);
  return PRBElement(inverse(a.braid), std::move(t));
}

PRBElement lambda(const WElement& w) {
  const BraidAut& cert = w.certificate();
  std::vector<long> twists;
  twists.reserve(static_cast<std::size_t>(w.rank()));
  for (int i = 1; i <= w.rank(); ++i) twists.push_back(exponent_sum(w.word(i), i));
  return PRBElement(cert, std::move(twists));
}

WElement lambda_inverse(const PRBElement& p) {
  int n = p.rank();
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    // image is u x_i u^-1; cyclic reduction recovers the shortest conjugator
    auto [core, conj] = cyclic_reduce(p.braid.forward().image(i));
    if (core != Word::generator(n, i))
      throw std::invalid_argument("braid part is not pure");
    long have = exponent_sum(conj, i);
    long want = p.twists[static_cast<std::size_t>(i) - 1];
    std::vector<int> letters = conj.letters();
    for (long k = 0; k < std::labs(want - have); ++k)
      letters.push_back(want > have ? i : -i);
    words.push_back(Word::from_letters(n, letters));
  }
  WElement out;
  out.rank_ = n;
  out.words_ = std::move(words);
  out.cert_ = p.braid;
  return out;
}

WElement prb_act(const PRBElement& gamma, const PRBElement& delta, const WElement& phi) {
  return w_multiply(lambda_inverse(delta), w_multiply(phi, w_invert(lambda_inverse(gamma))));
}

namespace {

long parse_power(const std::string& tok, std::size_t caret) {
  if (caret == std::string::npos) return 1;
  std::string p = tok.substr(caret + 1);
  std::size_t used = 0;
  long power = 0;
  try {
    power = std::stol(p, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad exponent in braid token '" + tok + "'");
  }
  if (used != p.size()) throw std::invalid_argument("bad exponent in braid token '" + tok + "'");
  return power;
}

int parse_index(const std::string& tok, const std::string& digits) {
  std::size_t used = 0;
  int i = 0;
  try {
    i = std::stoi(digits, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad index in braid token '" + tok + "'");
  }
  if (used != digits.size() || i < 1)
    throw std::invalid_argument("bad index in braid token '" + tok + "'");
  return i;
}

}  // namespace

BraidWord parse_braid_word(int n, const std::string& text) {
  if (n < 1) throw std::invalid_argument("strand count must be positive");
  BraidWord out{BraidAut::identity(n), std::vector<long>(static_cast<std::size_t>(n), 0)};
  // twists recorded so far live at the current bottom of the diagram, so
  // each later crossing carries them along strand-wise
  std::vector<long> pending(static_cast<std::size_t>(n), 0);

  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t caret = tok.find('^');
    std::string head = caret == std::string::npos ? tok : tok.substr(0, caret);
    long power = parse_power(tok, caret);
    if (head.size() < 2)
      throw std::invalid_argument("bad braid token '" + tok + "'");
    char kind = head[0];
    std::string digits = head.substr(1);
    if (kind == 's') {
      int i = parse_index(tok, digits);
      if (i + 1 > n) throw std::invalid_argument("sigma index out of range in '" + tok + "'");
      BraidAut g = sigma_generator(i, n);
      if (power < 0) g = inverse(g);
      for (long k = 0; k < std::labs(power); ++k) {
        out.aut = multiply(out.aut, g);
        std::swap(pending[static_cast<std::size_t>(i) - 1], pending[static_cast<std::size_t>(i)]);
      }
    } else if (kind == 'a') {
      std::size_t comma = digits.find(',');
      int i, j;
      if (comma != std::string::npos) {
        i = parse_index(tok, digits.substr(0, comma));
        j = parse_index(tok, digits.substr(comma + 1));
      } else if (digits.size() == 2) {
        i = parse_index(tok, digits.substr(0, 1));
        j = parse_index(tok, digits.substr(1, 1));
      } else {
        throw std::invalid_argument("alpha token needs two indices, e.g. a13 or a2,11");
      }
      BraidAut g = alpha_generator(i, j, n);
      if (power < 0) g = inverse(g);
      for (long k = 0; k < std::labs(power); ++k) out.aut = multiply(out.aut, g);
      // pure generators do not move strands, twists stay put
    } else if (kind == 'z') {
      int i = parse_index(tok, digits);
      if (i > n) throw std::invalid_argument("twist index out of range in '" + tok + "'");
      pending[static_cast<std::size_t>(i) - 1] += power;
    } else {
      throw std::invalid_argument("bad braid token '" + tok + "'");
    }
  }
  out.twists = std::move(pending);
  return out;
}

}  // namespace cactuslab
