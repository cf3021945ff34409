#include "subrank/exactnum/eps_rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "subrank/errors.hpp"

namespace subrank::exactnum {

EpsRational::EpsRational(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("EpsRational with zero denominator");
  reduce();
}

EpsRational EpsRational::monomial(const Rat& c, long e) {
  EpsRational f;
  if (c.is_zero()) return f;
  if (e >= 0) {
    f.num_ = Poly::monomial(c, static_cast<unsigned>(e));
  } else {
    f.num_ = Poly(c);
    f.den_ = Poly::monomial(Rat(1), static_cast<unsigned>(-e));
  }
  return f;
}

void EpsRational::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  int s = std::min(num_.low_degree(), den_.low_degree());
  if (s > 0) {
    num_ = num_.shifted_down(s);
    den_ = den_.shifted_down(s);
  }
  if (den_.is_monomial()) {
    if (!den_.lead().is_one()) {
      num_ = num_.scaled(den_.lead().inverse());
      den_ = Poly::monomial(Rat(1), den_.degree());
    }
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  if (!den_.lead().is_one()) {
    Rat inv = den_.lead().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

long EpsRational::valuation() const {
  if (num_.is_zero()) return kInfiniteValuation;
  return static_cast<long>(num_.low_degree()) - den_.low_degree();
}

Rat EpsRational::limit() const {
  long v = valuation();
  if (v == kInfiniteValuation || v > 0) return Rat(0);
  if (v < 0) throw PoleAtZero("limit at eps=0 diverges: " + str());
  return num_.coeff(num_.low_degree()) / den_.coeff(den_.low_degree());
}

Rat EpsRational::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("EpsRational evaluated at a pole");
  return num_.eval(x) / d;
}

double EpsRational::eval(double x) const { return num_.eval(x) / den_.eval(x); }

EpsRational EpsRational::operator-() const {
  EpsRational f = *this;
  f.num_ = -f.num_;
  return f;
}

EpsRational EpsRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero EpsRational");
  EpsRational f;
  f.num_ = den_;
  f.den_ = num_;
  f.reduce();
  return f;
}

EpsRational& EpsRational::operator+=(const EpsRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_is_eps_power() && o.den_is_eps_power()) {
    int m = den_.degree(), n = o.den_.degree();
    int top = std::max(m, n);
    num_ = num_.shifted_up(top - m) + o.num_.shifted_up(top - n);
    den_ = Poly::monomial(Rat(1), top);
  } else if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

EpsRational& EpsRational::operator-=(const EpsRational& o) { return *this += -o; }

EpsRational& EpsRational::operator*=(const EpsRational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = EpsRational();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

EpsRational& EpsRational::operator/=(const EpsRational& o) { return *this *= o.inverse(); }

std::string EpsRational::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace subrank::exactnum
