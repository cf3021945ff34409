#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "subrank/exactnum/eps_rational.hpp"
#include "subrank/tensor/tensor.hpp"

namespace subrank::degeneration {

using exactnum::EpsRational;
using exactnum::Rat;
using tensor::EpsTensor;
using tensor::Matrix;
using tensor::ModeMap;
using tensor::RatTensor;

using EpsMatrix = Matrix<EpsRational>;
using Params = std::map<std::string, std::vector<std::int64_t>>;

// One map per mode (restriction composed with a curve) and the unit size it claims.
struct Certificate {
  std::string family_tag;
  Params params;
  std::vector<ModeMap<EpsRational>> mode_maps;
  std::size_t claimed_unit = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Lift T to Q(eps), apply the mode maps, take eps -> 0 entrywise.
RatTensor apply_and_limit(const RatTensor& t, const Certificate& cert);
// The eps-dependent image before the limit.
EpsTensor apply_certificate(const RatTensor& t, const Certificate& cert);

// Throws LimitNotUnit / ClaimMismatch; returns the verified size.
std::size_t verify_unit_certificate(const RatTensor& t, const Certificate& cert);

// Empty when t is monomial-diagonal, otherwise a description of the first repeated index.
std::string unit_violation(const RatTensor& t);

EpsMatrix to_eps(const Matrix<Rat>& m);
EpsRational eps_pow(long e);

}  // namespace subrank::degeneration
