#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace cactuslab {

// Permutation of {0..n-1}.  Configurations carry a right action
// (x . s)_i = x_{s(i)}, and with compose(s,t)(i) = s(t(i)) that action
// satisfies (x . s) . t = x . compose(s,t).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  static Perm identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return Perm(std::move(inv));
  }

  friend bool operator==(const Perm& a, const Perm& b) = default;

 private:
  std::vector<int> img_;
};

inline Perm compose(const Perm& s, const Perm& t) {
  if (s.size() != t.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img(static_cast<std::size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) img[static_cast<std::size_t>(i)] = s(t(i));
  return Perm(std::move(img));
}

// s applied to blocks: input slot (i, j) with block sizes m goes to block
// s(i) of the output list, which is ordered so that output block k has
// size m[s^-1(k)].  This is the permutation appearing in the operadic
// equivariance law
//   gamma(x . s; y_1..y_n) = gamma(x; y_{s^-1(1)}..y_{s^-1(n)}) . block_permutation(s, m)
// with m_i the arity of y_i.
inline Perm block_permutation(const Perm& s, const std::vector<int>& m) {
  if (s.size() != static_cast<int>(m.size()))
    throw std::invalid_argument("block size list does not match permutation");
  Perm sinv = s.inverse();
  int n = s.size();
  std::vector<int> offA(static_cast<std::size_t>(n) + 1, 0), offB(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    offA[static_cast<std::size_t>(i) + 1] = offA[static_cast<std::size_t>(i)] + m[static_cast<std::size_t>(i)];
    offB[static_cast<std::size_t>(i) + 1] =
        offB[static_cast<std::size_t>(i)] + m[static_cast<std::size_t>(sinv(i))];
  }
  std::vector<int> img(static_cast<std::size_t>(offA[static_cast<std::size_t>(n)]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m[static_cast<std::size_t>(i)]; ++j)
      img[static_cast<std::size_t>(offA[static_cast<std::size_t>(i)] + j)] =
          offB[static_cast<std::size_t>(s(i))] + j;
  return Perm(std::move(img));
}

// t_1 + ... + t_n acting block-diagonally
inline Perm direct_sum(const std::vector<Perm>& ts) {
  std::vector<int> img;
  int off = 0;
  for (const Perm& t : ts) {
    for (int j = 0; j < t.size(); ++j) img.push_back(off + t(j));
    off += t.size();
  }
  return Perm(std::move(img));
}

}  // namespace cactuslab
