#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cactuslab/freegroup.hpp"

namespace cactuslab {

// Braid-type automorphism of a free group, stored together with a
// certified inverse so the group structure never needs word-problem
// solving.  The constructor can verify that the two endomorphisms
// really are mutually inverse (exact check on generators).
class BraidAut {
 public:
  BraidAut() = default;
  BraidAut(Endomorphism forward, Endomorphism backward, bool check = true);
  static BraidAut identity(int rank);

  int rank() const { return forward_.rank(); }
  const Endomorphism& forward() const { return forward_; }
  const Endomorphism& backward() const { return backward_; }

  // equal automorphisms have equal inverses, so forward comparison decides
  friend bool operator==(const BraidAut& a, const BraidAut& b) {
    return a.forward_ == b.forward_;
  }

 private:
  Endomorphism forward_, backward_;
};

// Artin generator sigma_i on n strands:
//   x_i |-> x_i x_{i+1} x_i^-1,   x_{i+1} |-> x_i,   others fixed
BraidAut sigma_generator(int i, int n);

// product ab acts by a after b: (ab)(w) = a(b(w))
BraidAut multiply(const BraidAut& a, const BraidAut& b);
BraidAut inverse(const BraidAut& a);

// standard pure braid generator
//   alpha_{ij} = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1
// for 1 <= i < j <= n
BraidAut alpha_generator(int i, int j, int n);

// pure braids send each x_k to a conjugate of x_k and fix x_1...x_n
bool is_pure(const BraidAut& b);

// Tuple model of the pure ribbon braid group: w = (w_1,...,w_n) with the
// conjugation action alpha(w): x_i |-> w_i x_i w_i^-1 required to fix the
// product x_1...x_n.  Tuples built from the generators carry a certificate
// (alpha(w) with its inverse); raw tuples from user input may not, and the
// operations that need the inverse reject them.
class WElement {
 public:
  WElement() = default;
  static WElement identity(int n);
  // the i-th twist generator: w_i = x_i, all other entries empty
  static WElement zeta(int n, int i);
  // raw tuple; certified automatically only in the trivial case where
  // the conjugation action is the identity
  static WElement from_words(int n, std::vector<Word> words);
  // raw tuple plus claimed inverse images for alpha(w); the claim is
  // verified exactly and a failing certificate is rejected
  static WElement from_words_with_inverse(int n, std::vector<Word> words,
                                          std::vector<Word> inverse_images);

  int rank() const { return rank_; }
  const std::vector<Word>& words() const { return words_; }
  const Word& word(int i) const;  // 1-based
  bool generated() const { return cert_.has_value(); }

  // alpha(w) as an endomorphism
  Endomorphism conjugation() const;
  // inverse automorphism from the certificate; throws on raw tuples
  const BraidAut& certificate() const;

  friend bool operator==(const WElement& a, const WElement& b) {
    return a.rank_ == b.rank_ && a.words_ == b.words_;
  }

 private:
  int rank_ = 0;
  std::vector<Word> words_;
  std::optional<BraidAut> cert_;
  friend WElement w_multiply(const WElement&, const WElement&);
  friend WElement w_invert(const WElement&);
  friend WElement lambda_inverse(const struct PRBElement&);
};

// does the tuple satisfy the defining conditions (each entry conjugates,
// product of generators fixed)?  fills *why on failure when given
bool w_is_valid(const WElement& w, std::string* why = nullptr);

// (v w)_i = alpha(v)(w_i) v_i ; certified when both factors are
WElement w_multiply(const WElement& v, const WElement& w);
// needs the certificate: entry i is alpha(w)^-1 applied to w_i^-1
WElement w_invert(const WElement& w);

// Pure ribbon braid element: pure braid automorphism plus one integer
// twist per strand.
struct PRBElement {
  BraidAut braid;
  std::vector<long> twists;

  PRBElement() = default;
  PRBElement(BraidAut b, std::vector<long> t);
  static PRBElement identity(int n);
  int rank() const { return braid.rank(); }

  friend bool operator==(const PRBElement& a, const PRBElement& b) = default;
};

PRBElement multiply(const PRBElement& a, const PRBElement& b);
PRBElement inverse(const PRBElement& a);

// the isomorphism W_n -> PRB_n: braid part alpha(w), twist part the
// exponent sums of x_i in w_i
PRBElement lambda(const WElement& w);
// its inverse: conjugators extracted by cyclic reduction, then powers of
// x_i adjust the exponent sums to the requested twists
WElement lambda_inverse(const PRBElement& p);

// fibre action (gamma, delta) . phi = delta phi gamma^-1, computed in the
// tuple model
WElement prb_act(const PRBElement& gamma, const PRBElement& delta, const WElement& phi);

// Braid words for the command line: whitespace-separated tokens
//   sI   Artin generator          (sI^-1, sI^k allowed)
//   aIJ  pure generator alpha_IJ  (two digits, or aI,J for wide indices)
//   zI   twist on strand I        (zI^k allowed)
// Twists are carried through later crossings strand-wise, so the result
// is the normal form (automorphism, twists-at-the-bottom).
struct BraidWord {
  BraidAut aut;
  std::vector<long> twists;
};
BraidWord parse_braid_word(int n, const std::string& text);

}  // namespace cactuslab
