#include "wreathfock/rational.hpp"

#include "wreathfock/errors.hpp"

namespace wreathfock {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace wreathfock
