#include <mutex>
#include <sstream>

#include "subrank/errors.hpp"
#include "subrank/invariants/invariants.hpp"

namespace subrank::invariants {

using exactnum::Exponent;
using tensor::Matrix;

namespace {

void require_shape(const RatTensor& t, const Shape& s, const char* what) {
  if (!(t.shape() == s)) throw ShapeMismatch(std::string(what) + " needs shape " + s.str() + ", got " + t.shape().str());
}

RatTensor unit_tensor(std::size_t order, std::size_t r) { return tensor::build_unit(order, r); }

MPoly linear(std::size_t nvars, const std::vector<Rat>& coef) {
  MPoly p(nvars);
  for (std::size_t i = 0; i < coef.size(); ++i)
    if (!coef[i].is_zero()) p += MPoly::variable(nvars, i) * coef[i];
  return p;
}

template <class R>
R det3(const std::array<std::array<R, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Cayley hyperdeterminant of a 2x2x2 array.
template <class R, class A>
R cayley(const A& a) {
  auto sq = [](const R& x) { return x * x; };
  R pos = sq(a(0, 0, 0)) * sq(a(1, 1, 1)) + sq(a(0, 0, 1)) * sq(a(1, 1, 0)) + sq(a(0, 1, 0)) * sq(a(1, 0, 1)) +
          sq(a(1, 0, 0)) * sq(a(0, 1, 1));
  R mixed = a(0, 0, 0) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 1) + a(0, 0, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 1) +
            a(0, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0) +
            a(0, 0, 1) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 0) + a(0, 1, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 0, 1);
  R quad = a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0) * a(1, 1, 1);
  return pos - mixed * Rat(2) + quad * Rat(4);
}

const MPoly& single(const std::vector<MPoly>& basis, const char* what) {
  if (basis.size() != 1)
    throw ValidationError(std::string(what) + ": expected a one-dimensional invariant space, found " +
                          std::to_string(basis.size()));
  return basis[0];
}

Rat flattening_det(const RatTensor& t, std::array<std::size_t, 2> rows) {
  require_shape(t, Shape({2, 2, 2, 2}), "flattening determinant");
  std::array<std::size_t, 2> cols{};
  std::size_t c = 0;
  for (std::size_t m = 0; m < 4; ++m)
    if (m != rows[0] && m != rows[1]) cols[c++] = m;
  Matrix<Rat> mat(4, 4);
  for (const auto& [lin, v] : t.entries()) {
    auto idx = t.index_of(lin);
    mat(idx[rows[0]] * 2 + idx[rows[1]], idx[cols[0]] * 2 + idx[cols[1]]) = v;
  }
  return tensor::determinant(mat);
}

}  // namespace

TernaryCubic cubic_from_terms(const std::vector<std::pair<std::array<unsigned, 3>, Rat>>& terms) {
  TernaryCubic c;
  for (const auto& [e, v] : terms) c.c[TernaryCubic::index(e[0], e[1], e[2])] += v;
  return c;
}

TernaryCubic phi_cubic(const RatTensor& t) {
  require_shape(t, Shape({3, 3, 3}), "phi_cubic");
  std::array<std::array<MPoly, 3>, 3> m;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k) {
      std::vector<Rat> coef(3);
      for (std::size_t i = 0; i < 3; ++i) coef[i] = t.at({i, j, k});
      m[j][k] = linear(3, coef);
    }
  MPoly d = det3(m);
  TernaryCubic out;
  for (const auto& [e, v] : d.terms()) out.c[TernaryCubic::index(e[0], e[1], e[2])] = v;
  return out;
}

const MPoly& aronhold_polynomial() {
  static const MPoly p = [] {
    MPoly a = single(invariant_kernel(ternary_cubic_representation(), 4), "Aronhold");
    TernaryCubic xyz;
    xyz.c[TernaryCubic::index(1, 1, 1)] = Rat(1);
    std::vector<Rat> pt(xyz.c.begin(), xyz.c.end());
    if (exactnum::mpoly_eval(a, pt).sign() < 0) a = a * Rat(-1);
    return a;
  }();
  return p;
}

Rat aronhold(const TernaryCubic& c) {
  return exactnum::mpoly_eval(aronhold_polynomial(), std::vector<Rat>(c.c.begin(), c.c.end()));
}

namespace {

struct Normalized {
  MPoly poly;
  Rat scale;  // 1 / value at the reference tensor
};

const Normalized& f6_333_poly() {
  static const Normalized n = [] {
    MPoly p = single(invariant_space(Shape({3, 3, 3}), 6).basis, "F6 on 3x3x3");
    Rat v = evaluate(p, unit_tensor(3, 3));
    return Normalized{p, v.inverse()};
  }();
  return n;
}

const Normalized& f2_2222_poly() {
  static const Normalized n = [] {
    MPoly p = single(invariant_space(Shape({2, 2, 2, 2}), 2).basis, "F2 on 2x2x2x2");
    Rat v = evaluate(p, unit_tensor(4, 2));
    return Normalized{p, v.inverse()};
  }();
  return n;
}

}  // namespace

Rat f6_333(const RatTensor& t) {
  require_shape(t, Shape({3, 3, 3}), "F6");
  const auto& n = f6_333_poly();
  return evaluate(n.poly, t) * n.scale;
}

Rat f12_333(const RatTensor& t) {
  static const Rat ref = aronhold(phi_cubic(unit_tensor(3, 3)));
  return aronhold(phi_cubic(t)) / ref;
}

Rat f2_2222(const RatTensor& t) {
  require_shape(t, Shape({2, 2, 2, 2}), "F2");
  const auto& n = f2_2222_poly();
  return evaluate(n.poly, t) * n.scale;
}

Rat f4_2222(const RatTensor& t) { return flattening_det(t, {0, 1}); }
Rat f4p_2222(const RatTensor& t) { return flattening_det(t, {0, 2}); }

Rat f6_2222_pairing(const RatTensor& t, std::array<std::size_t, 2> vars) {
  require_shape(t, Shape({2, 2, 2, 2}), "F6");
  if (vars[0] == vars[1] || vars[0] > 3 || vars[1] > 3) throw InputError("F6 needs two distinct modes");
  std::array<std::size_t, 2> rest{};
  std::size_t c = 0;
  for (std::size_t m = 0; m < 4; ++m)
    if (m != vars[0] && m != vars[1]) rest[c++] = m;
  // 2x2 matrix of bilinear forms in x (vars 0,1) and y (vars 2,3)
  std::array<std::array<MPoly, 2>, 2> m;
  for (auto& row : m)
    for (auto& e : row) e = MPoly(4);
  for (const auto& [lin, v] : t.entries()) {
    auto idx = t.index_of(lin);
    m[idx[rest[0]]][idx[rest[1]]] +=
        MPoly::variable(4, idx[vars[0]]) * MPoly::variable(4, 2 + idx[vars[1]]) * v;
  }
  MPoly d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Matrix<Rat> b(3, 3);
  for (const auto& [e, v] : d.terms()) b(e[1], e[3]) = v;  // x0^{2-a} x1^a y0^{2-c} y1^c
  return tensor::determinant(b);
}

Rat f6_2222(const RatTensor& t) { return f6_2222_pairing(t, {0, 2}); }

Rat cayley_222(const RatTensor& t) {
  require_shape(t, Shape({2, 2, 2}), "Cayley hyperdeterminant");
  auto a = [&](std::size_t i, std::size_t j, std::size_t k) { return t.at({i, j, k}); };
  return cayley<Rat>(a);
}

Rat quartic_discriminant(const std::array<Rat, 5>& q) {
  const Rat &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4];
  auto p = [](const Rat& x, unsigned n) { return exactnum::pow(x, n); };
  return Rat(256) * p(a, 3) * p(e, 3) - Rat(192) * p(a, 2) * b * d * p(e, 2) - Rat(128) * p(a, 2) * p(c, 2) * p(e, 2) +
         Rat(144) * p(a, 2) * c * p(d, 2) * e - Rat(27) * p(a, 2) * p(d, 4) + Rat(144) * a * p(b, 2) * c * p(e, 2) -
         Rat(6) * a * p(b, 2) * p(d, 2) * e - Rat(80) * a * b * p(c, 2) * d * e + Rat(18) * a * b * c * p(d, 3) +
         Rat(16) * a * p(c, 4) * e - Rat(4) * a * p(c, 3) * p(d, 2) - Rat(27) * p(b, 4) * p(e, 2) +
         Rat(18) * p(b, 3) * c * d * e - Rat(4) * p(b, 3) * p(d, 3) - Rat(4) * p(b, 2) * p(c, 3) * e +
         p(b, 2) * p(c, 2) * p(d, 2);
}

Rat hyperdet_2222(const RatTensor& t, std::size_t mode) {
  require_shape(t, Shape({2, 2, 2, 2}), "hyperdeterminant");
  if (mode > 3) throw InputError("mode out of range");
  std::array<std::size_t, 3> rest{};
  std::size_t c = 0;
  for (std::size_t m = 0; m < 4; ++m)
    if (m != mode) rest[c++] = m;
  std::array<MPoly, 8> arr;
  for (auto& e : arr) e = MPoly(2);
  for (const auto& [lin, v] : t.entries()) {
    auto idx = t.index_of(lin);
    arr[idx[rest[0]] * 4 + idx[rest[1]] * 2 + idx[rest[2]]] += MPoly::variable(2, idx[mode]) * v;
  }
  auto a = [&](std::size_t i, std::size_t j, std::size_t k) { return arr[i * 4 + j * 2 + k]; };
  MPoly q = cayley<MPoly>(a);
  std::array<Rat, 5> coef;
  for (unsigned i = 0; i <= 4; ++i) coef[i] = q.coeff(Exponent{static_cast<std::uint8_t>(4 - i), static_cast<std::uint8_t>(i)});
  return quartic_discriminant(coef);
}

Evaluator evaluator(const std::string& expr) {
  auto base = [](const std::string& name) -> std::function<Rat(const RatTensor&)> {
    if (name == "F2") return f2_2222;
    if (name == "F4") return f4_2222;
    if (name == "F4'" || name == "F4p") return f4p_2222;
    if (name == "F12") return f12_333;
    if (name == "HD") return [](const RatTensor& t) { return hyperdet_2222(t); };
    if (name == "Cayley") return cayley_222;
    if (name == "F6")
      return [](const RatTensor& t) { return t.order() == 3 ? f6_333(t) : f6_2222(t); };
    throw InputError("unknown invariant '" + name + "'");
  };
  std::vector<std::pair<std::function<Rat(const RatTensor&)>, unsigned>> factors;
  std::stringstream ss(expr);
  std::string part;
  while (std::getline(ss, part, '*')) {
    unsigned power = 1;
    auto caret = part.find('^');
    if (caret != std::string::npos) {
      const std::string p = part.substr(caret + 1);
      if (p.empty() || p.size() > 2 || p.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad exponent in '" + expr + "'");
      power = static_cast<unsigned>(std::stoul(p));
      part = part.substr(0, caret);
    }
    factors.emplace_back(base(part), power);
  }
  if (factors.empty()) throw InputError("empty invariant expression");
  return {expr, [factors](const RatTensor& t) {
            Rat v(1);
            for (const auto& [f, p] : factors) v *= exactnum::pow(f(t), p);
            return v;
          }};
}

std::vector<Rat> separating_combination(const std::vector<Evaluator>& evals, const std::vector<RatTensor>& samples,
                                        const RatTensor& witness) {
  if (evals.empty()) throw InputError("no evaluators");
  if (samples.size() < 2 * evals.size())
    throw InputError("need at least " + std::to_string(2 * evals.size()) + " samples");
  Matrix<Rat> m(samples.size(), evals.size());
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < evals.size(); ++j) m(i, j) = evals[j].eval(samples[i]);
  auto ker = tensor::kernel(m);
  if (ker.empty()) throw NoSeparator("no combination vanishes on all samples");
  if (ker.size() > 1)
    throw AmbiguousSeparator(std::to_string(ker.size()) + "-dimensional space of vanishing combinations");
  std::vector<Rat> c = ker[0];
  // coprime integers, first nonzero positive
  mpz_class l = 1, g = 0;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  for (auto& x : c) {
    x *= Rat(mpq_class(l, 1));
    mpz_class n = x.num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  for (auto& x : c) x *= Rat(mpq_class(1, g));
  for (const auto& x : c)
    if (!x.is_zero()) {
      if (x.sign() < 0)
        for (auto& y : c) y = -y;
      break;
    }
  Rat w;
  for (std::size_t j = 0; j < evals.size(); ++j) w += c[j] * evals[j].eval(witness);
  if (w.is_zero()) throw WitnessVanishes("the vanishing combination also vanishes on the witness");
  return c;
}

}  // namespace subrank::invariants
