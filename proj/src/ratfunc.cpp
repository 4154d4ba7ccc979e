#include "seminormal/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace seminormal {

RationalFunction::RationalFunction(long shift, Poly num, Poly den)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = Poly::one();
    return;
  }
  // Move trailing q-powers of num and den into the shift.
  auto strip = [](Poly& p, long& sh, int sign) {
    int k = 0;
    while (p.coeffs[k] == 0) ++k;
    if (k > 0) {
      p.coeffs.erase(p.coeffs.begin(), p.coeffs.begin() + k);
      sh += sign * k;
    }
  };
  strip(num_, shift_, +1);
  strip(den_, shift_, -1);
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_div_exact(num_, g);
    den_ = poly_div_exact(den_, g);
  }
  Int cn = poly_content(num_);
  Int cd = poly_content(den_);
  Int gc = int_gcd(cn, cd);
  if (gc > 1) {
    for (auto& x : num_.coeffs) x /= gc;
    for (auto& x : den_.coeffs) x /= gc;
  }
  if (den_.coeffs.back() < 0) {
    for (auto& x : num_.coeffs) x = -x;
    for (auto& x : den_.coeffs) x = -x;
  }
}

RationalFunction RationalFunction::from_int(const Int& c) {
  return RationalFunction(0, Poly::constant(c), Poly::one());
}

RationalFunction RationalFunction::from_rat(const Rat& c) {
  return RationalFunction(0, Poly::constant(c.get_num()), Poly::constant(c.get_den()));
}

RationalFunction RationalFunction::q_power(long k) {
  return RationalFunction(k, Poly::one(), Poly::one());
}

RationalFunction RationalFunction::from_laurent(const LaurentPoly& p) {
  long sh;
  Poly q;
  laurent_split(p, sh, q);
  return RationalFunction(sh, std::move(q), Poly::one());
}

RationalFunction RationalFunction::from_poly(const Poly& p, long shift) {
  return RationalFunction(shift, p, Poly::one());
}

bool RationalFunction::is_one() const {
  return shift_ == 0 && num_.degree() == 0 && num_.coeff(0) == 1 && den_.degree() == 0 &&
         den_.coeff(0) == 1;
}

LaurentPoly RationalFunction::as_laurent() const {
  if (!is_laurent()) throw std::logic_error("as_laurent: value not in Z[q,q^-1]");
  return poly_to_laurent(num_, shift_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  for (auto& x : r.num_.coeffs) x = -x;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long s = std::min(shift_, o.shift_);
  Poly a = num_;
  Poly b = o.num_;
  // Lift the shift difference into the numerators.
  if (shift_ > s) a = poly_mul(a, Poly::monomial(static_cast<int>(shift_ - s)));
  if (o.shift_ > s) b = poly_mul(b, Poly::monomial(static_cast<int>(o.shift_ - s)));
  if (den_ == o.den_) return RationalFunction(s, poly_add(a, b), den_);
  Poly n = poly_add(poly_mul(a, o.den_), poly_mul(b, den_));
  return RationalFunction(s, std::move(n), poly_mul(den_, o.den_));
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return zero();
  return RationalFunction(shift_ + o.shift_, poly_mul(num_, o.num_), poly_mul(den_, o.den_));
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(-shift_, den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  return *this * o.inverse();
}

Rat RationalFunction::eval(const Rat& x) const {
  if (x == 0) throw std::invalid_argument("eval at 0");
  Rat d = poly_eval(den_, x);
  if (d == 0) throw std::domain_error("eval: denominator vanishes");
  Rat v = poly_eval(num_, x) / d;
  long k = shift_ >= 0 ? shift_ : -shift_;
  Rat base = shift_ >= 0 ? x : Rat(1) / x;
  for (long i = 0; i < k; ++i) v *= base;
  return v;
}

std::string RationalFunction::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool denom_is_one = den_.degree() == 0 && den_.coeff(0) == 1;
  if (shift_ == 0 && denom_is_one) return poly_str(num_);
  os << "(" << poly_str(num_) << ")";
  if (!denom_is_one) os << "/(" << poly_str(den_) << ")";
  if (shift_ != 0) os << " * q^" << shift_;
  return os.str();
}

RatFunc quantum_int(long k) {
  if (k == 0) return RatFunc::zero();
  if (k > 0) {
    Poly p;
    p.coeffs.assign(k, Int(1));
    return RatFunc::from_poly(p);
  }
  // [k]_q = -q^k [-k]_q for k < 0.
  return -(RatFunc::q_power(k) * quantum_int(-k));
}

RatFunc quantum_factorial(long k) {
  if (k < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  RatFunc r = RatFunc::one();
  for (long j = 2; j <= k; ++j) r *= quantum_int(j);
  return r;
}

}  // namespace seminormal
