#include "cactuslab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cactuslab {

std::string rat_str(const Rat& r) {
  return r.get_str();
}

static bool looks_like_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[i] == '-') ++i;
  if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  if (i == s.size()) return false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return i == s.size();
}

Rat parse_rat(const std::string& text, bool strict) {
  if (!looks_like_rational(text))
    throw std::invalid_argument("not a rational: '" + text + "'");
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  if (strict && r.get_str() != text)
    throw std::invalid_argument("rational not in canonical form: '" + text + "'");
  return r;
}

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Rat rat_mod1(const Rat& r) {
  Rat f = r - Rat(rat_floor(r));
  f.canonicalize();
  return f;
}

}  // namespace cactuslab
