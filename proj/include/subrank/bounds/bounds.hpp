#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "subrank/algebras/algebra.hpp"
#include "subrank/exactnum/eps_rational.hpp"
#include "subrank/tensor/tensor.hpp"

namespace subrank::bounds {

using exactnum::Rat;
using tensor::RatTensor;

// min sum_{j,i} x_{j,i} subject to sum_j x_{j,i_j} >= 1 on every support point, x >= 0.
struct LPProblem {
  std::vector<std::size_t> dims;                  // variables x_{j,i}, i < dims[j]
  std::vector<std::vector<std::size_t>> support;  // one covering constraint per point
  std::size_t num_vars() const;
};
LPProblem support_lp(const RatTensor& t);

// General exact LP: max c.y subject to A y <= b, y >= 0, with b >= 0. Bland's rule.
struct SimplexResult {
  Rat value;
  std::vector<Rat> y;
  std::size_t pivots = 0;
};
SimplexResult simplex_max(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                          const std::vector<Rat>& c);

// Optimum of the covering LP (solved through its packing dual).
Rat gstable_lp(const RatTensor& t);
Rat solve_lp(const LPProblem& p);

// Closed-form weight bound for T^(k) of R_d.
Rat gstable_trd_bound(std::size_t k, std::size_t d);
// Same, after asserting gstable_lp(T^(k)_{R_d}) <= bound (ValidationError otherwise).
Rat gstable_trd_bound_checked(std::size_t k, std::size_t d);

// Closed-form geometric rank; family tags as in the certificate library. RangeError outside the table.
std::size_t gr_closed_form(const std::string& family, std::size_t n, std::size_t k);

struct Composition {
  std::vector<std::size_t> parts;  // weak composition: zeros allowed when n < k
  std::size_t total() const;
};
Rat h2(const Composition& p);
std::pair<Composition, Rat> h2_min_composition(std::size_t n, std::size_t k);
std::pair<Composition, Rat> h2_min_bruteforce(std::size_t n, std::size_t k);

// p_{ij} = p_j + ... + p_i for i >= j, zero above the diagonal. Validates the partial-sum recurrence.
std::vector<std::vector<long>> kernel_matrix(const Composition& p);

struct FFResult {
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> counts;  // |Z_k(A)(F_p)|
  std::vector<long> slopes;           // rounded log-ratio estimate per consecutive prime pair
  long dimension = 0;
  bool consistent = true;
};
// Point counts of {(a_1..a_k) : a_1 ... a_k = 0}; heuristic dimension estimate.
FFResult ff_dimension_oracle(const algebras::Algebra& a, std::size_t k, const std::vector<std::uint64_t>& primes,
                             std::uint64_t budget = 10'000'000);

// Largest k-average-free subset of {0..q}: exhaustive for q <= 12, greedy beyond.
std::set<std::size_t> average_free_max(std::size_t q, std::size_t k);

// ||T_eps||^2 / sigma_s(T_eps)^2 minimized over flattenings, at the last (smallest) eps.
double spectral_ratio_probe(const std::vector<double>& eps_values);
double spectral_ratio_at(double eps);
// ||T_eps||^2 as an exact function of eps.
exactnum::EpsRational spectral_frobenius_symbolic();
// sum over i_0 + ... + i_k = d - 1 of e_{i_0..i_k}; T^(k)_{R_d} with mode 0 reversed.
RatTensor bud_tensor(std::size_t d, std::size_t k);

}  // namespace subrank::bounds
