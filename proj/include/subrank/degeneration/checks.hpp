#pragma once

#include <optional>

#include "subrank/algebras/algebra.hpp"
#include "subrank/degeneration/certificate.hpp"
#include "subrank/rng.hpp"

namespace subrank::degeneration {

// Integer matrix (target x source) with entries uniform in [-5, 5].
Matrix<Rat> random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng);
// One random map per mode down to `target` dimensions; with unit_column set, column 0 of every
// input mode is forced to e_0 (the X_p(1*) = e_0 normalization).
std::vector<Matrix<Rat>> random_restriction(const tensor::Shape& s, std::size_t target, SplitMix64& rng,
                                            bool unit_column = false);
RatTensor restrict(const RatTensor& t, const std::vector<Matrix<Rat>>& maps);
// `count` seeded random restrictions to target^(order); sample i uses derive_seed(seed, i).
std::vector<RatTensor> sample_restrictions(const RatTensor& t, std::size_t target, std::uint64_t seed,
                                           std::size_t count);

struct InstabilityWitness {
  std::vector<ModeMap<Rat>> restriction;
  std::vector<std::vector<long>> subgroup_weights;
};

struct InstabilityResult {
  bool unstable = true;
  std::size_t samples = 0;
  std::size_t target = 0;  // q + 1
  std::optional<InstabilityWitness> violation;
  std::string detail;
};

// Sample-based check of the socle instability argument; A local commutative with unit at index 0.
// Throws RangeError when k is below the applicable range.
InstabilityResult instability_run(const algebras::Algebra& a, std::size_t k, std::uint64_t seed,
                                  std::size_t samples = 20);
bool instability_check(const algebras::Algebra& a, std::size_t k, std::uint64_t seed, std::size_t samples = 20);

// C^d with idempotent basis.
algebras::Algebra build_split(std::size_t d);
// V[i][j] = (i eps)^j.
EpsMatrix vandermonde_matrix(std::size_t d);

// lim (g (x) (g^-T)^(x)k) T^(k)_{A(eps)} == T^(k)_B for k = 2..k_max. Throws PoleAtZero.
bool lift_symmetric_check(const EpsMatrix& g, const algebras::AlgebraFamily& a, const algebras::Algebra& b,
                          std::size_t k_max);

struct LedgerRow {
  std::size_t k = 0;
  std::size_t q = 0;  // verified certificate size
  std::string certificate;
};
// Best verified certificate per k; throws ValidationError if the sizes increase with k.
std::vector<LedgerRow> monotonicity_ledger(const std::string& family, std::size_t n, std::size_t k_min,
                                           std::size_t k_max);

}  // namespace subrank::degeneration
