#include "qbrauer/rational.hpp"

#include <cctype>
#include <ostream>

namespace qbrauer {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(s)) throw DomainError("Rational: cannot parse '" + s + "'");
    return Rational(Int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den) || den[0] == '-')
    throw DomainError("Rational: cannot parse '" + s + "'");
  return Rational(Int(num), Int(den));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw DomainError("Rational: negative power of zero");
    return Rational(0);
  }
  const Rational base = (e > 0) ? *this : inverse();
  unsigned long n = (e > 0) ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-(e + 1)) + 1ul;
  Rational acc(1);
  Rational sq = base;
  while (n > 0) {
    if (n & 1ul) acc *= sq;
    sq *= sq;
    n >>= 1;
  }
  return acc;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational gen_binom(const Rational& m, unsigned long k) {
  Rational acc(1);
  for (unsigned long j = 0; j < k; ++j) acc *= m - Rational(static_cast<long>(j));
  return acc / Rational(factorial(k));
}

Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace qbrauer
