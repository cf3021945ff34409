#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "subrank/exactnum/rat.hpp"

namespace subrank::exactnum {

using Exponent = std::vector<std::uint8_t>;

// Sparse multivariate polynomial over Q in a fixed number of variables.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Rat& c);
  static MPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  bool is_homogeneous() const;

  void add_term(const Exponent& e, const Rat& c);
  Rat coeff(const Exponent& e) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rat& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MPoly derivative(std::size_t var) const;
  std::string str() const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Rat> terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

Rat mpoly_eval(const MPoly& p, const std::vector<Rat>& point);

}  // namespace subrank::exactnum
