#pragma once

#include <limits>
#include <string>
#include <vector>

#include "subrank/exactnum/rat.hpp"

namespace subrank::exactnum {

// Dense univariate polynomial in eps; c[i] is the coefficient of eps^i.
// No trailing zero coefficients; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(const Rat& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
  static Poly monomial(const Rat& c, unsigned degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int low_degree() const;  // lowest degree with nonzero coefficient; -1 for zero
  bool is_monomial() const { return !c_.empty() && low_degree() == degree(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lead() const { return c_.back(); }
  Rat coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Poly shifted_down(unsigned k) const;  // divide by eps^k, exact
  Poly shifted_up(unsigned k) const;
  Poly scaled(const Rat& s) const;
  Rat eval(const Rat& x) const;
  double eval(double x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const { return scaled(Rat(-1)); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; divisor nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
  static Poly gcd(Poly a, Poly b);  // monic, or zero
  Poly monic() const;

  std::string str(const char* var = "e") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace subrank::exactnum
