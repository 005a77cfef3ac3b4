#include "doctest.h"
#include "tilingaf/certify.hpp"
#include "tilingaf/cyclotomic.hpp"
#include "tilingaf/errors.hpp"
#include "tilingaf/rational.hpp"

using namespace tilingaf;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("0.9") == Rational(9, 10));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational(" 6/8 ") == Rational(3, 4));
  CHECK(rational_str(Rational(3, 4)) == "3/4");
  CHECK(rational_str(Rational(-5)) == "-5");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK(rational_floor(Rational(20, 9)) == 2);
  CHECK(rational_floor(Rational(-1, 2)) == -1);
}

TEST_CASE("cyclotomic field basics in Q(zeta_10)") {
  const auto& F = CyclotomicField::of(10);
  CHECK(F.degree() == 4);  // Phi_10 = x^4 - x^3 + x^2 - x + 1

  auto z = F.zeta_power(1);
  // root-of-unity identity: zeta^5 = -1
  CHECK(z.pow(5) == -F.one());
  CHECK(z.pow(10) == F.one());

  // phi = zeta + zeta^-1 satisfies phi^2 - phi - 1 = 0 exactly
  auto phi = z + z.pow(-1);
  CHECK((phi * phi - phi - F.one()).is_zero());
  CHECK(phi.is_real());

  // phi in the power basis is 1 + zeta^2 - zeta^3
  auto phi2 = F.one() + F.zeta_power(2) - F.zeta_power(3);
  CHECK(phi == phi2);

  // field laws on a few elements
  auto a = F.from_coeffs({Rational(1, 2), Rational(-2), Rational(0), Rational(3, 7)});
  auto b = F.zeta_power(3) - F.from_rational(Rational(5, 3));
  CHECK((a * b) == (b * a));
  CHECK(((a + b) * phi) == (a * phi + b * phi));
  CHECK((a / b) * b == a);
  CHECK(a.conj().conj() == a);
  CHECK((a * b).conj() == a.conj() * b.conj());
  CHECK_THROWS_AS(a / F.zero(), InputError);
}

TEST_CASE("certified signs") {
  const auto& F = CyclotomicField::of(10);
  auto z = F.zeta_power(1);
  auto phi = z + z.pow(-1);

  // sign(phi - 8/5) is positive (phi = 1.618..., decided by refinement)
  CHECK(sign_real(phi - F.from_rational(Rational(8, 5))) == 1);
  CHECK(sign_real(phi - F.from_rational(Rational(13, 8))) == -1);
  CHECK(sign_real(phi * phi - phi - F.one()) == 0);

  CHECK(sign_im(z) == 1);
  CHECK(sign_im(z.pow(9)) == -1);
  CHECK(sign_im(phi) == 0);
  CHECK(sign_re(z.pow(3)) == -1);

  // Re(zeta) = cos 36 = phi/2 exactly
  auto diff = (z + z.conj()) - phi;
  CHECK(diff.is_zero());

  auto [lo, hi] = real_interval(phi, Rational(1, 1000000));
  CHECK(lo <= hi);
  CHECK(hi - lo <= Rational(1, 1000000));
  CHECK(lo < Rational(1618034, 1000000));
  CHECK(hi > Rational(1618033, 1000000));
}

TEST_CASE("odd or tiny cyclotomic orders are rejected") {
  CHECK_THROWS_AS(CyclotomicField::of(5), InputError);
  CHECK_THROWS_AS(CyclotomicField::of(2), InputError);
  CHECK_NOTHROW(CyclotomicField::of(4));
  CHECK_NOTHROW(CyclotomicField::of(12));
}

TEST_CASE("decimal formatting is deterministic and correctly rounded") {
  const auto& F = CyclotomicField::of(10);
  auto z = F.zeta_power(1);
  auto phi = z + z.pow(-1);
  CHECK(decimal_re(phi, 6) == "1.618034");
  CHECK(decimal_re(phi, 3) == "1.618");
  CHECK(decimal_im(z, 6) == "0.587785");
  CHECK(decimal_re(F.zero(), 4) == "0.0000");
  CHECK(decimal_of_rational(Rational(1, 3), 5) == "0.33333");
  CHECK(decimal_of_rational(Rational(-1, 2), 2) == "-0.50");
}
