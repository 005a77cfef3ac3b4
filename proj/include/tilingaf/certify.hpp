#pragma once

#include <string>
#include <utility>

#include "tilingaf/cyclotomic.hpp"
#include "tilingaf/rational.hpp"

namespace tilingaf {

// Precision budget (bits) for interval refinement when deciding signs of
// nonzero algebraic numbers.  Exceeding it raises ResourceError; it never
// silently misclassifies.  Minimum accepted is 64.
void set_precision_budget(long bits);
long precision_budget();

// Double enclosure of a real quantity, endpoints rounded outward.
struct DBox {
  double lo, hi;
};

// Certified double enclosures of Re and Im of the standard embedding.
// Safe for use as a sort accelerator; never as a decider on its own.
std::pair<DBox, DBox> embed_box(const FieldElement& z);

// Sign of Re(z) / Im(z) under the embedding: exact zero test first
// (against the conjugate), then interval refinement up to the budget.
int sign_re(const FieldElement& z);
int sign_im(const FieldElement& z);

// Sign of an element known to be fixed by conjugation (asserted).
int sign_real(const FieldElement& z);

// Total order on points: by Re, then Im, exact.  Returns -1/0/+1.
int point_compare(const FieldElement& a, const FieldElement& b);

// Rational interval [lo, hi] containing Re(z), of width <= width_bound.
std::pair<Rational, Rational> real_interval(const FieldElement& z, const Rational& width_bound);

// Rational interval containing sqrt(q) for q >= 0, width <= width_bound.
std::pair<Rational, Rational> sqrt_interval(const Rational& q, const Rational& width_bound);
// Rational interval containing sqrt(Re(z)) for real z >= 0.
std::pair<Rational, Rational> sqrt_interval(const FieldElement& z, const Rational& width_bound);

// A rational upper bound on sqrt(q), q >= 0 (used for diameter rounding).
Rational sqrt_upper_bound(const Rational& q);

// Correctly-rounded fixed-point decimal of Re(z)/Im(z), deterministic.
std::string decimal_re(const FieldElement& z, int digits);
std::string decimal_im(const FieldElement& z, int digits);
std::string decimal_of_rational(const Rational& q, int digits);

}  // namespace tilingaf
