#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "subrank/exactnum/mpoly.hpp"
#include "subrank/tensor/tensor.hpp"

namespace subrank::invariants {

using exactnum::MPoly;
using exactnum::Rat;
using tensor::RatTensor;
using tensor::Shape;

// A linear representation given by torus weights of the coordinate variables and raising operators.
// Operator entries (v, w, c) mean (X T)_v += c T_w.
struct Representation {
  std::size_t nvars = 0;
  // weight vectors are concatenations of blocks; every variable has the same total in each block
  std::vector<std::size_t> blocks;
  std::vector<std::vector<int>> weights;  // per variable
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rat>>> raising;
};
Representation tensor_representation(const Shape& s);
// S^3 C^3 with coefficients c_{abc} of x^a y^b z^c, ordered as in TernaryCubic.
Representation ternary_cubic_representation();

struct InvariantBasis {
  Shape shape;
  std::size_t degree = 0;
  std::vector<MPoly> basis;
};

// Degree-d invariants: weight-zero monomials, kernel of all raising operators. Elements are scaled to
// coprime integers with the lexicographically first monomial positive.
std::vector<MPoly> invariant_kernel(const Representation& rep, std::size_t degree,
                                    std::size_t budget = 200'000);
InvariantBasis invariant_space(const Shape& s, std::size_t degree, std::size_t budget = 200'000);

// Apply a raising-operator derivation to a polynomial.
MPoly apply_derivation(const std::vector<std::tuple<std::size_t, std::size_t, Rat>>& op, const MPoly& f);

std::vector<Rat> dense_entries(const RatTensor& t);
Rat evaluate(const MPoly& f, const RatTensor& t);

// x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3
struct TernaryCubic {
  std::array<Rat, 10> c{};
  static std::size_t index(unsigned a, unsigned b, unsigned c);
  friend bool operator==(const TernaryCubic&, const TernaryCubic&) = default;
};
TernaryCubic cubic_from_terms(const std::vector<std::pair<std::array<unsigned, 3>, Rat>>& terms);

TernaryCubic phi_cubic(const RatTensor& t);
Rat aronhold(const TernaryCubic& c);
const MPoly& aronhold_polynomial();

Rat f6_333(const RatTensor& t);
Rat f12_333(const RatTensor& t);
Rat f2_2222(const RatTensor& t);
Rat f4_2222(const RatTensor& t);
Rat f4p_2222(const RatTensor& t);
// Biquadratic construction with the two modes in `vars` as the variables of the 2 x 2 matrix of forms.
Rat f6_2222(const RatTensor& t);
Rat f6_2222_pairing(const RatTensor& t, std::array<std::size_t, 2> vars);

Rat cayley_222(const RatTensor& t);
// a x0^4 + b x0^3 x1 + c x0^2 x1^2 + d x0 x1^3 + e x1^4, given as {a, b, c, d, e}
Rat quartic_discriminant(const std::array<Rat, 5>& q);
// Discriminant of the Cayley quartic of the contraction along `mode`.
Rat hyperdet_2222(const RatTensor& t, std::size_t mode = 0);

struct Evaluator {
  std::string name;
  std::function<Rat(const RatTensor&)> eval;
};
// Named evaluators: F2, F4, F4' (or F4p), F6 (by order), F12, HD (2x2x2x2 hyperdeterminant), Cayley,
// and products written like "F6^2", "F2*F4".
Evaluator evaluator(const std::string& expr);

// Unique (up to scale) combination of the evaluators vanishing on all samples and not on the witness.
std::vector<Rat> separating_combination(const std::vector<Evaluator>& evals, const std::vector<RatTensor>& samples,
                                        const RatTensor& witness);

}  // namespace subrank::invariants
