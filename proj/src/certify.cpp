#include "tilingaf/certify.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <map>
#include <vector>

#include "tilingaf/errors.hpp"

namespace tilingaf {

namespace {

long g_budget = 0;

long default_budget() {
  if (const char* env = std::getenv("TILINGAF_PRECISION_BITS")) {
    long v = std::atol(env);
    if (v >= 64) return v;
  }
  return 4096;
}

// Minimal RAII mpfr scalar.
struct MF {
  mpfr_t v;
  explicit MF(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  MF(const MF& o) {
    mpfr_init2(v, mpfr_get_prec(o.v));
    mpfr_set(v, o.v, MPFR_RNDN);
  }
  MF& operator=(const MF& o) {
    if (this != &o) {
      mpfr_set_prec(v, mpfr_get_prec(o.v));
      mpfr_set(v, o.v, MPFR_RNDN);
    }
    return *this;
  }
  ~MF() { mpfr_clear(v); }
};

// Closed interval with outward-rounded endpoints.
struct IV {
  MF lo, hi;
  explicit IV(mpfr_prec_t prec) : lo(prec), hi(prec) {}

  static IV of_rational(const Rational& q, mpfr_prec_t prec) {
    IV r(prec);
    mpfr_set_q(r.lo.v, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi.v, q.get_mpq_t(), MPFR_RNDU);
    return r;
  }
  static IV zero(mpfr_prec_t prec) {
    IV r(prec);
    mpfr_set_zero(r.lo.v, 0);
    mpfr_set_zero(r.hi.v, 0);
    return r;
  }
  void add(const IV& o) {
    mpfr_add(lo.v, lo.v, o.lo.v, MPFR_RNDD);
    mpfr_add(hi.v, hi.v, o.hi.v, MPFR_RNDU);
  }
  // this += q * o, q rational of either sign
  void add_scaled(const Rational& q, const IV& o, mpfr_prec_t prec) {
    if (q == 0) return;
    MF a(prec), b(prec);
    if (q > 0) {
      mpfr_mul_q(a.v, o.lo.v, q.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(b.v, o.hi.v, q.get_mpq_t(), MPFR_RNDU);
    } else {
      mpfr_mul_q(a.v, o.hi.v, q.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(b.v, o.lo.v, q.get_mpq_t(), MPFR_RNDU);
    }
    mpfr_add(lo.v, lo.v, a.v, MPFR_RNDD);
    mpfr_add(hi.v, hi.v, b.v, MPFR_RNDU);
  }
  int sign() const {
    if (mpfr_sgn(lo.v) > 0) return 1;
    if (mpfr_sgn(hi.v) < 0) return -1;
    return 0;  // undecided
  }
};

// Enclosures of cos/sin(2*pi*k/n) for k = 0..n-1 at a given precision.
struct RootTable {
  std::vector<IV> re, im;
};

const RootTable& root_table(int n, mpfr_prec_t prec) {
  static std::map<std::pair<int, long>, RootTable> cache;
  auto key = std::make_pair(n, static_cast<long>(prec));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  RootTable t;
  MF pi_lo(prec), pi_hi(prec), theta_lo(prec), theta_hi(prec);
  MF c1(prec), c2(prec), s1(prec), s2(prec), w(prec);
  mpfr_const_pi(pi_lo.v, MPFR_RNDD);
  mpfr_const_pi(pi_hi.v, MPFR_RNDU);
  for (int k = 0; k < n; ++k) {
    Rational f(2 * k, n);
    f.canonicalize();
    // theta = 2*pi*k/n enclosed
    mpfr_mul_q(theta_lo.v, pi_lo.v, f.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(theta_hi.v, pi_hi.v, f.get_mpq_t(), MPFR_RNDU);
    mpfr_sub(w.v, theta_hi.v, theta_lo.v, MPFR_RNDU);  // interval width
    // cos/sin are 1-Lipschitz: evaluate at both ends, widen by the width.
    IV re(prec), im(prec);
    mpfr_cos(c1.v, theta_lo.v, MPFR_RNDD);
    mpfr_cos(c2.v, theta_hi.v, MPFR_RNDD);
    mpfr_min(re.lo.v, c1.v, c2.v, MPFR_RNDD);
    mpfr_sub(re.lo.v, re.lo.v, w.v, MPFR_RNDD);
    mpfr_cos(c1.v, theta_lo.v, MPFR_RNDU);
    mpfr_cos(c2.v, theta_hi.v, MPFR_RNDU);
    mpfr_max(re.hi.v, c1.v, c2.v, MPFR_RNDU);
    mpfr_add(re.hi.v, re.hi.v, w.v, MPFR_RNDU);
    mpfr_sin(s1.v, theta_lo.v, MPFR_RNDD);
    mpfr_sin(s2.v, theta_hi.v, MPFR_RNDD);
    mpfr_min(im.lo.v, s1.v, s2.v, MPFR_RNDD);
    mpfr_sub(im.lo.v, im.lo.v, w.v, MPFR_RNDD);
    mpfr_sin(s1.v, theta_lo.v, MPFR_RNDU);
    mpfr_sin(s2.v, theta_hi.v, MPFR_RNDU);
    mpfr_max(im.hi.v, s1.v, s2.v, MPFR_RNDU);
    mpfr_add(im.hi.v, im.hi.v, w.v, MPFR_RNDU);
    t.re.push_back(re);
    t.im.push_back(im);
  }
  return cache.emplace(key, std::move(t)).first->second;
}

// Evaluate Re/Im enclosures of z at the given precision.
std::pair<IV, IV> embed_iv(const FieldElement& z, mpfr_prec_t prec) {
  const CyclotomicField& F = z.field();
  const RootTable& t = root_table(F.order(), prec);
  IV re = IV::zero(prec), im = IV::zero(prec);
  const auto& c = z.coeffs();
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    re.add_scaled(c[k], t.re[k], prec);
    im.add_scaled(c[k], t.im[k], prec);
  }
  return {re, im};
}

enum class Part { Re, Im };

int certified_sign(const FieldElement& z, Part part) {
  // Exact zero test first: Re(z) = 0 iff z + conj(z) = 0, Im likewise.
  FieldElement zc = z.conj();
  if (part == Part::Re ? (z + zc).is_zero() : (z - zc).is_zero()) return 0;
  const long budget = precision_budget();
  for (long prec = 64; prec <= budget; prec *= 2) {
    auto [re, im] = embed_iv(z, prec);
    int s = (part == Part::Re ? re : im).sign();
    if (s != 0) return s;
  }
  throw ResourceError("undecidable comparison: sign of " +
                      std::string(part == Part::Re ? "Re(" : "Im(") + z.str() +
                      ") not resolved within " + std::to_string(budget) + " bits");
}

}  // namespace

void set_precision_budget(long bits) {
  if (bits < 64) throw InputError("precision budget must be >= 64 bits");
  g_budget = bits;
}

long precision_budget() {
  if (g_budget == 0) g_budget = default_budget();
  return g_budget;
}

std::pair<DBox, DBox> embed_box(const FieldElement& z) {
  auto [re, im] = embed_iv(z, 64);
  DBox r{mpfr_get_d(re.lo.v, MPFR_RNDD), mpfr_get_d(re.hi.v, MPFR_RNDU)};
  DBox i{mpfr_get_d(im.lo.v, MPFR_RNDD), mpfr_get_d(im.hi.v, MPFR_RNDU)};
  return {r, i};
}

int sign_re(const FieldElement& z) { return certified_sign(z, Part::Re); }
int sign_im(const FieldElement& z) { return certified_sign(z, Part::Im); }

int sign_real(const FieldElement& z) {
  if (!z.is_real())
    throw Error("sign_real on a non-real element: " + z.str());
  if (z.is_zero()) return 0;
  return certified_sign(z, Part::Re);
}

int point_compare(const FieldElement& a, const FieldElement& b) {
  if (a == b) return 0;
  FieldElement d = a - b;
  int s = sign_re(d);
  if (s != 0) return s;
  return sign_im(d);
}

std::pair<Rational, Rational> real_interval(const FieldElement& z, const Rational& width_bound) {
  if (width_bound <= 0) throw InputError("interval width bound must be positive");
  const long budget = precision_budget();
  for (long prec = 64; prec <= budget; prec *= 2) {
    auto [re, im] = embed_iv(z, prec);
    (void)im;
    mpq_class lo, hi;
    mpfr_get_q(lo.get_mpq_t(), re.lo.v);
    mpfr_get_q(hi.get_mpq_t(), re.hi.v);
    if (hi - lo <= width_bound) return {Rational(lo), Rational(hi)};
  }
  throw ResourceError("interval refinement exceeded the precision budget");
}

std::pair<Rational, Rational> sqrt_interval(const Rational& q, const Rational& width_bound) {
  if (q < 0) throw InputError("sqrt of a negative rational");
  if (width_bound <= 0) throw InputError("interval width bound must be positive");
  const long budget = precision_budget();
  for (long prec = 64; prec <= budget; prec *= 2) {
    MF x(prec), r(prec);
    mpfr_set_q(x.v, q.get_mpq_t(), MPFR_RNDD);
    mpfr_sqrt(r.v, x.v, MPFR_RNDD);
    mpq_class lo;
    mpfr_get_q(lo.get_mpq_t(), r.v);
    mpfr_set_q(x.v, q.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(r.v, x.v, MPFR_RNDU);
    mpq_class hi;
    mpfr_get_q(hi.get_mpq_t(), r.v);
    if (lo < 0) lo = 0;
    if (hi - lo <= width_bound) return {Rational(lo), Rational(hi)};
  }
  throw ResourceError("sqrt interval refinement exceeded the precision budget");
}

std::pair<Rational, Rational> sqrt_interval(const FieldElement& z, const Rational& width_bound) {
  auto [lo, hi] = real_interval(z, width_bound / 4);
  if (lo < 0) lo = 0;
  if (hi < 0) hi = 0;
  auto a = sqrt_interval(lo, width_bound / 4);
  auto b = sqrt_interval(hi, width_bound / 4);
  return {a.first, b.second};
}

Rational sqrt_upper_bound(const Rational& q) {
  auto [lo, hi] = sqrt_interval(q, Rational(1, 1024));
  (void)lo;
  return hi;
}

namespace {

std::string round_decimal(const IV& iv, int digits, mpfr_prec_t prec) {
  MF mid(prec);
  mpfr_add(mid.v, iv.lo.v, iv.hi.v, MPFR_RNDN);
  mpfr_div_ui(mid.v, mid.v, 2, MPFR_RNDN);
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rf", digits, mid.v);
  std::string s(buf);
  if (s == "-0" || s.rfind("-0.", 0) == 0) {
    bool all_zero = true;
    for (char c : s)
      if (c != '-' && c != '0' && c != '.') all_zero = false;
    if (all_zero) s = s.substr(1);
  }
  return s;
}

std::string decimal_part(const FieldElement& z, int digits, Part part) {
  // width well below half an ulp of the requested precision keeps the
  // rounded string stable
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(64 + 4 * digits);
  auto [re, im] = embed_iv(z, prec);
  return round_decimal(part == Part::Re ? re : im, digits, prec);
}

}  // namespace

std::string decimal_re(const FieldElement& z, int digits) { return decimal_part(z, digits, Part::Re); }
std::string decimal_im(const FieldElement& z, int digits) { return decimal_part(z, digits, Part::Im); }

std::string decimal_of_rational(const Rational& q, int digits) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(64 + 4 * digits);
  IV iv = IV::of_rational(q, prec);
  return round_decimal(iv, digits, prec);
}

}  // namespace tilingaf
