#pragma once

#include "subrank/algebras/algebra.hpp"
#include "subrank/degeneration/certificate.hpp"

namespace subrank::degeneration {

// Family tags: trd (R_d, n = d), tri (T_n), null (N_n), cw (Q_n), mamu (Mat_n), sl (sl_n), sl2 (h,a,b basis; n ignored).
const std::vector<std::string>& family_tags();
algebras::Algebra family_algebra(const std::string& family, std::size_t n);
RatTensor family_tensor(const std::string& family, std::size_t n, std::size_t k);

// Largest library certificate for T^(k) of the family member.
Certificate best_certificate(const std::string& family, std::size_t n, std::size_t k);

}  // namespace subrank::degeneration
