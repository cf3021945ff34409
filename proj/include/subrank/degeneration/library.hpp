#pragma once

#include <set>

#include "subrank/algebras/algebra.hpp"
#include "subrank/degeneration/certificate.hpp"

namespace subrank::degeneration {

// Identity maps; claims the unit size of t itself (k = 1 tensors are identities).
Certificate cert_identity(const RatTensor& t, const std::string& tag);
// Size-1 restriction onto the first nonzero entry.
Certificate cert_point(const RatTensor& t, const std::string& tag);

// T^(k) of R_d; claims floor((d-1)/k) + 1.
Certificate cert_trd(std::size_t k, std::size_t d);
// T^(k) of T_n; claims (q+1)(2n-qk)/2 with q = floor(n/k).
Certificate cert_triangular(std::size_t k, std::size_t n);
std::size_t triangular_claim(std::size_t k, std::size_t n);

// MaMu_(n,...,n) with k inputs, k >= 2. For k >= 3 the cycle representation with
// q = floor((n-1)/(k-1)); for k = 2 all vectors equal 1 and h = floor(3(n-1)/2).
Certificate cert_mamu(std::size_t k, std::size_t n);
std::size_t mamu_claim(std::size_t k, std::size_t n);

bool is_average_free(const std::set<std::size_t>& d, std::size_t k);
// Pure restriction of T^(k) of T_n keyed to an average-free set; claims sum (n - k d).
Certificate cert_triangular_restriction(std::size_t k, std::size_t n, const std::set<std::size_t>& d);

// T^(2) of Q_n (n >= 3) onto u_3(3); T^(3) of Q_n (n >= 2) onto u_4(2). Padded by zeros beyond 3 / 2.
Certificate cert_cw_k2(std::size_t n = 3);
Certificate cert_cw_k3(std::size_t n = 2);
// T^(2) of Q_n onto u_3(2), any n >= 1.
Certificate cert_cw_small(std::size_t n);
// T^(2) of N_n onto u_3(2), n >= 2.
Certificate cert_null_k2(std::size_t n);

// T^(2) of sl_n (standard basis) onto u_3(n) through sl2/sl3 blocks.
Certificate cert_sl_block(std::size_t n);
// T^(k) of sl_2 in the h,a,b basis onto u_{k+1}(2), k >= 2; identity for k = 1.
Certificate cert_sl2(std::size_t k);

}  // namespace subrank::degeneration
