#include "subrank/exactnum/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace subrank::exactnum {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, unsigned degree) {
  Poly p;
  if (c.is_zero()) return p;
  p.c_.assign(degree + 1, Rat(0));
  p.c_[degree] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::low_degree() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Poly Poly::shifted_down(unsigned k) const {
  Poly p;
  if (k >= c_.size()) return p;
  p.c_.assign(c_.begin() + k, c_.end());
  return p;
}

Poly Poly::shifted_up(unsigned k) const {
  Poly p;
  if (c_.empty()) return p;
  p.c_.assign(k, Rat(0));
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

Poly Poly::scaled(const Rat& s) const {
  if (s.is_zero()) return Poly();
  Poly p = *this;
  for (auto& x : p.c_) x *= s;
  return p;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      p.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  p.trim();
  return p;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  rem = a;
  quot = Poly();
  if (rem.degree() < b.degree()) return;
  quot.c_.assign(rem.degree() - b.degree() + 1, Rat(0));
  Rat inv_lead = b.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rat f = rem.lead() * inv_lead;
    quot.c_[shift] = f;
    for (size_t j = 0; j < b.c_.size(); ++j) rem.c_[shift + j] -= f * b.c_[j];
    rem.trim();
  }
  quot.trim();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (!c_[i].is_one()) os << c_[i] << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace subrank::exactnum
