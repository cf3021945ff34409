#pragma once

#include <limits>
#include <string>

#include "subrank/exactnum/poly.hpp"

namespace subrank::exactnum {

inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

// num/den in Q(eps), gcd(num, den) = 1 and den monic.
class EpsRational {
 public:
  EpsRational() : den_(Rat(1)) {}
  EpsRational(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT
  EpsRational(long c) : EpsRational(Rat(c)) {}          // NOLINT
  EpsRational(Poly num, Poly den);

  // c * eps^e for any integer e.
  static EpsRational monomial(const Rat& c, long e);
  static EpsRational eps() { return monomial(Rat(1), 1); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  long valuation() const;
  Rat limit() const;  // throws PoleAtZero
  Rat eval(const Rat& x) const;
  double eval(double x) const;

  EpsRational operator-() const;
  EpsRational inverse() const;
  EpsRational& operator+=(const EpsRational& o);
  EpsRational& operator-=(const EpsRational& o);
  EpsRational& operator*=(const EpsRational& o);
  EpsRational& operator/=(const EpsRational& o);
  friend EpsRational operator+(EpsRational a, const EpsRational& b) { return a += b; }
  friend EpsRational operator-(EpsRational a, const EpsRational& b) { return a -= b; }
  friend EpsRational operator*(EpsRational a, const EpsRational& b) { return a *= b; }
  friend EpsRational operator/(EpsRational a, const EpsRational& b) { return a /= b; }
  friend bool operator==(const EpsRational& a, const EpsRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  void reduce();
  bool den_is_eps_power() const { return den_.is_monomial(); }
  Poly num_;
  Poly den_;
};

inline bool is_zero(const EpsRational& f) { return f.is_zero(); }
inline long valuation(const EpsRational& f) { return f.valuation(); }
inline Rat eps_limit(const EpsRational& f) { return f.limit(); }

}  // namespace subrank::exactnum
