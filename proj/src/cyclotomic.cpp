#include "tilingaf/cyclotomic.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "tilingaf/errors.hpp"

namespace tilingaf {

namespace {

// Dense integer polynomials, lowest degree first, used only to build Phi_n.
using IPoly = std::vector<Integer>;

void trim(IPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division q = a / b for monic b (remainder must vanish).
IPoly divide_monic(IPoly a, const IPoly& b) {
  IPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Integer(0));
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    trim(a);
    if (a.size() < b.size()) break;
    Integer lead = a.back();
    size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= lead * b[i];
    trim(a);
    if (a.size() == 1 && a[0] == 0) break;
  }
  trim(a);
  if (!(a.size() == 1 && a[0] == 0)) throw Error("cyclotomic division left a remainder");
  trim(q);
  return q;
}

IPoly cyclotomic_poly(int n) {
  // x^n - 1 divided by the product of Phi_d over proper divisors d.
  IPoly p(n + 1, Integer(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = divide_monic(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

}  // namespace

const CyclotomicField& CyclotomicField::of(int order) {
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  auto it = registry.find(order);
  if (it == registry.end()) {
    if (order < 4 || order % 2 != 0)
      throw InputError("cyclotomic_order must be even and >= 4 (got " +
                       std::to_string(order) + "); for odd n use 2n, the field is the same");
    it = registry.emplace(order, std::unique_ptr<CyclotomicField>(new CyclotomicField(order))).first;
  }
  return *it->second;
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
  IPoly phi = cyclotomic_poly(order);
  degree_ = static_cast<int>(phi.size()) - 1;
  modulus_ = phi;

  // x^d = -(c_0 + ... + c_{d-1} x^{d-1}); fold_[m] represents x^{d+m}.
  std::vector<Rational> xd(degree_);
  for (int i = 0; i < degree_; ++i) xd[i] = Rational(-phi[i]);
  fold_.push_back(xd);
  for (int m = 1; m <= degree_ - 2; ++m) {
    const std::vector<Rational>& prev = fold_.back();
    std::vector<Rational> next(degree_, Rational(0));
    // multiply prev by x and reduce the overflow term
    for (int i = 0; i + 1 < degree_; ++i) next[i + 1] = prev[i];
    const Rational& top = prev[degree_ - 1];
    if (top != 0)
      for (int i = 0; i < degree_; ++i) next[i] += top * xd[i];
    fold_.push_back(std::move(next));
  }

  powers_.resize(order_);
  std::vector<Rational> cur(degree_, Rational(0));
  cur[0] = 1;
  powers_[0] = cur;
  for (int k = 1; k < order_; ++k) {
    std::vector<Rational> next(degree_, Rational(0));
    for (int i = 0; i + 1 < degree_; ++i) next[i + 1] = cur[i];
    const Rational& top = cur[degree_ - 1];
    if (top != 0)
      for (int i = 0; i < degree_; ++i) next[i] += top * xd[i];
    powers_[k] = next;
    cur = std::move(next);
  }
}

FieldElement CyclotomicField::zero() const {
  return FieldElement(this, std::vector<Rational>(degree_, Rational(0)));
}

FieldElement CyclotomicField::one() const { return from_rational(Rational(1)); }

FieldElement CyclotomicField::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree_, Rational(0));
  c[0] = q;
  return FieldElement(this, std::move(c));
}

FieldElement CyclotomicField::from_coeffs(std::vector<Rational> coeffs) const {
  if (static_cast<int>(coeffs.size()) > degree_) {
    // fold high coefficients down
    std::vector<Rational> c(degree_, Rational(0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (static_cast<int>(i) < degree_) {
        c[i] += coeffs[i];
      } else {
        int m = static_cast<int>(i) - degree_;
        if (m >= static_cast<int>(fold_.size()))
          throw Error("coefficient list too long to fold");
        for (int j = 0; j < degree_; ++j) c[j] += coeffs[i] * fold_[m][j];
      }
    }
    return FieldElement(this, std::move(c));
  }
  coeffs.resize(degree_, Rational(0));
  return FieldElement(this, std::move(coeffs));
}

FieldElement CyclotomicField::zeta_power(long k) const {
  long r = k % order_;
  if (r < 0) r += order_;
  return FieldElement(this, powers_[static_cast<int>(r)]);
}

const CyclotomicField& FieldElement::field() const {
  if (!field_) throw Error("use of uninitialized field element");
  return *field_;
}

bool FieldElement::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational FieldElement::to_rational() const {
  if (!is_rational()) throw Error("field element is not rational: " + str());
  return c_[0];
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const int d = field().degree_;
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rational> c(prod.begin(), prod.begin() + d);
  for (int m = 0; m <= d - 2; ++m) {
    const Rational& top = prod[d + m];
    if (top == 0) continue;
    const auto& row = field_->fold_[m];
    for (int i = 0; i < d; ++i) c[i] += top * row[i];
  }
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const Rational& q) const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * q;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator/(const Rational& q) const {
  if (q == 0) throw InputError("division by zero rational");
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] / q;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const { return c_ == o.c_; }

FieldElement FieldElement::conj() const {
  const int n = field().order_;
  const int d = field_->degree_;
  std::vector<Rational> c(d, Rational(0));
  for (int k = 0; k < d; ++k) {
    if (c_[k] == 0) continue;
    const auto& row = field_->powers_[(n - k) % n];
    for (int i = 0; i < d; ++i) c[i] += c_[k] * row[i];
  }
  return FieldElement(field_, std::move(c));
}

bool FieldElement::is_real() const { return *this == conj(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InputError("division by zero field element");
  const int d = field().degree_;
  // Extended Euclid over Q[x] between this and Phi_n.
  using QPoly = std::vector<Rational>;
  auto deg = [](const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1;
  };
  QPoly r0(d + 1, Rational(0));
  for (int i = 0; i <= d; ++i) r0[i] = Rational(field_->modulus_[i]);
  QPoly r1(c_.begin(), c_.end());
  r1.resize(d + 1, Rational(0));
  QPoly s0(d + 1, Rational(0)), s1(d + 1, Rational(0));
  s1[0] = 1;  // invariant: s_k * this == r_k (mod Phi)
  while (true) {
    int d1 = deg(r1);
    if (d1 < 0) throw Error("inverse of zero divisor (modulus not squarefree?)");
    if (d1 == 0) {
      std::vector<Rational> c(d, Rational(0));
      for (int i = 0; i < d && i < static_cast<int>(s1.size()); ++i) c[i] = s1[i] / r1[0];
      return FieldElement(field_, std::move(c));
    }
    int d0 = deg(r0);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    Rational f = r0[d0] / r1[d1];
    int shift = d0 - d1;
    for (int i = 0; i <= d1; ++i) r0[i + shift] -= f * r1[i];
    for (int i = 0; i + shift <= d; ++i) s0[i + shift] -= f * s1[i];
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
}

FieldElement FieldElement::pow(long k) const {
  const CyclotomicField& F = field();
  if (k == 0) return F.one();
  FieldElement base = k > 0 ? *this : inverse();
  unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
  FieldElement acc = F.one();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

int FieldElement::coeff_compare(const FieldElement& a, const FieldElement& b) {
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string FieldElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << rational_str(c_[i]);
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::string> FieldElement::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& q : c_) out.push_back(rational_str(q));
  return out;
}

}  // namespace tilingaf
