#include "subrank/exactnum/mpoly.hpp"

#include <sstream>

#include "subrank/errors.hpp"

namespace subrank::exactnum {

MPoly MPoly::constant(std::size_t nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  MPoly p(nvars);
  Exponent e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, Rat(1));
  return p;
}

int MPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

bool MPoly::is_homogeneous() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += x;
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

void MPoly::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != nvars_) throw ShapeMismatch("exponent length does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw ShapeMismatch("MPoly variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw ShapeMismatch("MPoly variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw ShapeMismatch("MPoly variable count mismatch");
  MPoly p(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    p.add_term(f, c * Rat(static_cast<long>(e[var])));
  }
  return p;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i;
      if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
    }
  }
  return os.str();
}

Rat mpoly_eval(const MPoly& p, const std::vector<Rat>& point) {
  if (point.size() != p.nvars())
    throw ShapeMismatch("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                        std::to_string(p.nvars()));
  // power cache per variable, grown lazily
  std::vector<std::vector<Rat>> powers(point.size());
  auto power = [&](std::size_t v, unsigned k) -> const Rat& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Rat(1));
    while (pw.size() <= k) pw.push_back(pw.back() * point[v]);
    return pw[k];
  };
  mpq_class acc = 0, term;
  for (const auto& [e, c] : p.terms()) {
    term = c.q();
    for (std::size_t v = 0; v < e.size() && sgn(term) != 0; ++v)
      if (e[v]) term *= power(v, e[v]).q();
    acc += term;
  }
  return Rat(acc);
}

}  // namespace subrank::exactnum
