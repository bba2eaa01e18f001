#include "jacstrat/rational.hpp"

namespace jacstrat {

std::string rational_to_string(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt rational_floor(const Rational& q) {
  BigInt num = numerator(q);
  const BigInt den = denominator(q);  // always positive
  if (num >= 0) return num / den;
  // round toward minus infinity
  BigInt quot = num / den;
  if (quot * den != num) quot -= 1;
  return quot;
}

Rational fractional_part(const Rational& q) { return q - Rational(rational_floor(q)); }

}  // namespace jacstrat
