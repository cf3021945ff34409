#include <algorithm>
#include <functional>

#include "doctest.h"
#include "subrank/degeneration/checks.hpp"
#include "subrank/degeneration/families.hpp"
#include "subrank/degeneration/library.hpp"

using namespace subrank;
using namespace subrank::degeneration;
using algebras::structure_tensor;

namespace {

EpsMatrix diag(std::vector<EpsRational> d) {
  EpsMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Certificate cert_of(std::vector<EpsMatrix> maps, std::size_t claim) {
  Certificate c;
  for (std::size_t m = 0; m < maps.size(); ++m) c.mode_maps.push_back({m, maps[m]});
  c.claimed_unit = claim;
  return c;
}

std::size_t verify(const std::string& f, std::size_t n, std::size_t k, const Certificate& c) {
  return verify_unit_certificate(family_tensor(f, n, k), c);
}

// For certificates whose maps have at most one nonzero per column: the eps-valuation of every surviving
// term is >= 0, and 0 exactly when `on_diagonal` holds for the source index.
void check_exponents(const RatTensor& t, const Certificate& c,
                     const std::function<bool(const tensor::Index&)>& on_diagonal) {
  for (const auto& [lin, v] : t.entries()) {
    auto idx = t.index_of(lin);
    long val = 0;
    bool dead = false;
    for (std::size_t m = 0; m < idx.size() && !dead; ++m) {
      const auto& x = c.mode_maps[m].matrix;
      std::size_t hits = 0;
      for (std::size_t r = 0; r < x.rows(); ++r)
        if (!x(r, idx[m]).is_zero()) {
          ++hits;
          val += x(r, idx[m]).valuation();
        }
      REQUIRE(hits <= 1);
      dead = hits == 0;
    }
    if (dead) continue;
    CHECK(val >= 0);
    CHECK((val == 0) == on_diagonal(idx));
  }
}

long mamu_formula(long n, long k) {
  long q = (n - 1) / (k - 1), r = (n - 1) - q * (k - 1);
  return n + q * (n - k + r + 2);
}

bool has_3ap(const std::set<std::size_t>& d) {
  for (auto a : d)
    for (auto b : d)
      if (a < b && (a + b) % 2 == 0 && d.count((a + b) / 2)) return true;
  return false;
}

}  // namespace

TEST_SUITE("degeneration") {
  TEST_CASE("apply_and_limit on small examples") {
    RatTensor u = tensor::build_unit(3, 2);
    EpsMatrix d = diag({EpsRational::eps(), EpsRational(1)});
    RatTensor lim = apply_and_limit(u, cert_of({d, d, d}, 1));
    RatTensor e111{u.shape()};
    e111.add({1, 1, 1}, Rat(1));
    CHECK(lim == e111);

    RatTensor e000{tensor::Shape({2, 2, 2})};
    e000.add({0, 0, 0}, Rat(1));
    EpsMatrix pole = diag({eps_pow(-1), EpsRational(1)}), id = to_eps(Matrix<Rat>::identity(2));
    CHECK_THROWS_AS(apply_and_limit(e000, cert_of({pole, id, id}, 1)), PoleAtZero);
    CHECK_THROWS_AS(apply_and_limit(e000, cert_of({id, id}, 1)), ShapeMismatch);
  }

  TEST_CASE("verify_unit_certificate reports failures") {
    for (std::size_t k = 1; k <= 4; ++k)
      for (std::size_t r = 1; r <= 3; ++r) {
        RatTensor u = tensor::build_unit(k + 1, r);
        CHECK(verify_unit_certificate(u, cert_identity(u, "unit")) == r);
      }
    Certificate c = cert_trd(2, 5);
    c.claimed_unit = 4;
    CHECK_THROWS_AS(verify(std::string("trd"), 5, 2, c), ClaimMismatch);
    // identity on a non-unit tensor
    RatTensor t = family_tensor("trd", 3, 2);
    CHECK_THROWS_AS(verify_unit_certificate(t, cert_identity(t, "trd")), LimitNotUnit);
  }

  TEST_CASE("truncated polynomial certificates") {
    CHECK(verify("trd", 5, 2, cert_trd(2, 5)) == 3);
    CHECK(verify("trd", 3, 3, cert_trd(3, 3)) == 1);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(verify("trd", k + 1, k, cert_trd(k, k + 1)) == 2);
    for (std::size_t k = 1; k <= 4; ++k)
      for (std::size_t d = 1; d <= 8; ++d) {
        Certificate c = cert_trd(k, d);
        CHECK(c.claimed_unit == (d - 1) / k + 1);
        CHECK(verify("trd", d, k, c) == c.claimed_unit);
        // AM-GM equality: all inputs the same power
        check_exponents(family_tensor("trd", d, k), c, [](const tensor::Index& i) {
          return std::all_of(i.begin() + 1, i.end(), [&](std::size_t v) { return v == i[1]; });
        });
      }
  }

  TEST_CASE("triangular certificates") {
    CHECK(verify("tri", 4, 3, cert_triangular(3, 4)) == 5);
    CHECK(verify("tri", 4, 2, cert_triangular(2, 4)) == 6);
    CHECK(verify("tri", 5, 2, cert_triangular(2, 5)) == 9);
    for (std::size_t n = 1; n <= 5; ++n)
      for (std::size_t k = n; k <= n + 1; ++k) CHECK(verify("tri", n, k, cert_triangular(k, n)) == n);
    for (std::size_t k = 1; k <= 4; ++k)
      for (std::size_t n = 1; n <= 6; ++n) {
        Certificate c = cert_triangular(k, n);
        // sum over differences d <= (n-1)/k of (n - k d)
        std::size_t expect = 0;
        for (std::size_t d = 0; k * d <= n - 1; ++d) expect += n - k * d;
        CHECK(c.claimed_unit == expect);
        CHECK(verify("tri", n, k, c) == expect);
        // Cauchy-Schwarz equality: a chain with equal steps
        std::vector<std::pair<std::size_t, std::size_t>> ends(n * (n + 1) / 2);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = a; b < n; ++b) ends[algebras::triangular_index(n, a, b)] = {a, b};
        check_exponents(family_tensor("tri", n, k), c, [&](const tensor::Index& i) {
          std::size_t step = ends[i[1]].second - ends[i[1]].first;
          for (std::size_t p = 2; p < i.size(); ++p)
            if (ends[i[p]].second - ends[i[p]].first != step) return false;
          return true;
        });
      }
  }

  TEST_CASE("matrix multiplication certificates") {
    CHECK(verify("mamu", 4, 3, cert_mamu(3, 4)) == 8);
    CHECK(8 * 2 >= 4 * 4);
    CHECK(verify("mamu", 2, 3, cert_mamu(3, 2)) == 2);
    // q = floor((n-1)/(k-1)) gives 9 here
    CHECK(verify("mamu", 5, 4, cert_mamu(4, 5)) == 9);
    for (std::size_t k = 3; k <= 5; ++k)
      for (std::size_t n = 1; n <= 4; ++n) {
        if (k == 5 && n == 4) continue;
        CHECK(verify("mamu", n, k, cert_mamu(k, n)) == static_cast<std::size_t>(mamu_formula(n, k)));
      }
    for (long k = 3; k <= 6; ++k)
      for (long n = 2; n <= 8; ++n) {
        long m = static_cast<long>(mamu_claim(k, n));
        CHECK(m == mamu_formula(n, k));
        CHECK(m * (k - 1) >= n * n);
      }
    // k = 2: ceil(3 n^2 / 4)
    for (std::size_t n = 1; n <= 4; ++n) CHECK(verify("mamu", n, 2, cert_mamu(2, n)) == (3 * n * n + 3) / 4);
  }

  TEST_CASE("average-free sets and triangular restrictions") {
    CHECK(verify("tri", 5, 3, cert_triangular_restriction(3, 5, {0, 1})) == 7);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(verify("tri", n, 2, cert_triangular_restriction(2, n, {0})) == n);
    CHECK_FALSE(is_average_free({0, 1, 2}, 3));
    CHECK_THROWS_AS(cert_triangular_restriction(3, 7, {0, 1, 2}), RangeError);
    CHECK_THROWS_AS(cert_triangular_restriction(2, 4, {2}), RangeError);
    // k = 2 means no three-term progression
    for (unsigned mask = 0; mask < 256; ++mask) {
      std::set<std::size_t> d;
      for (std::size_t i = 0; i < 8; ++i)
        if (mask >> i & 1) d.insert(i);
      CHECK(is_average_free(d, 2) == !has_3ap(d));
      CHECK(is_average_free(d, 1));
    }
    std::set<std::size_t> d{0, 1, 3};
    REQUIRE(is_average_free(d, 2));
    CHECK(verify("tri", 7, 2, cert_triangular_restriction(2, 7, d)) == 7 + 5 + 1);
  }

  TEST_CASE("apolar and null restrictions") {
    CHECK(verify("cw", 3, 2, cert_cw_k2()) == 3);
    CHECK(verify("cw", 2, 3, cert_cw_k3()) == 2);
    CHECK(verify("cw", 4, 2, cert_cw_k2(4)) == 3);
    CHECK(verify("cw", 4, 3, cert_cw_k3(4)) == 2);
    for (std::size_t n = 1; n <= 3; ++n) CHECK(verify("cw", n, 2, cert_cw_small(n)) == 2);
    for (std::size_t n = 2; n <= 4; ++n) CHECK(verify("null", n, 2, cert_null_k2(n)) == 2);
  }

  TEST_CASE("sl certificates") {
    for (std::size_t n : {2, 3, 4, 5, 7}) CHECK(verify("sl", n, 2, cert_sl_block(n)) == n);
    for (std::size_t k : {1, 2, 3, 4, 5, 6, 8}) CHECK(verify("sl2", 2, k, cert_sl2(k)) == (k == 1 ? 3u : 2u));
  }

  TEST_CASE("instability checks") {
    CHECK(instability_check(algebras::build_null(2), 3, 7));
    CHECK(instability_check(algebras::build_apolar_quadric(2), 5, 7));
    CHECK(instability_check(algebras::build_truncated_poly(3), 4, 7));
    CHECK(instability_check(algebras::build_apolar_quadric(3), 4, 11));
    CHECK(instability_check(algebras::build_null(3), 2, 3));
    auto res = instability_run(algebras::build_null(2), 3, 1);
    CHECK(res.samples == 20);
    CHECK(res.target == 2);
    CHECK(instability_run(algebras::build_null(3), 2, 1).target == 3);
    CHECK_THROWS_AS(instability_check(algebras::build_truncated_poly(3), 3, 1), RangeError);
    CHECK_THROWS_AS(instability_check(algebras::build_matrix(2), 5, 1), NotLocalForm);
  }

  TEST_CASE("symmetric lifts") {
    for (std::size_t d : {3, 4}) {
      EpsMatrix g = tensor::inverse(vandermonde_matrix(d));
      CHECK(lift_symmetric_check(g, algebras::constant_family(build_split(d)), algebras::build_truncated_poly(d), 4));
      // the same limit computed directly from the interpolating family
      CHECK(tensor::eps_limit(structure_tensor(algebras::vandermonde_family(d), 3)) ==
            structure_tensor(algebras::build_truncated_poly(d), 3));
    }
    algebras::Algebra r3 = algebras::build_truncated_poly(3);
    CHECK(lift_symmetric_check(to_eps(Matrix<Rat>::identity(3)), algebras::constant_family(r3), r3, 4));
    CHECK_FALSE(lift_symmetric_check(to_eps(Matrix<Rat>::identity(3)), algebras::constant_family(build_split(3)), r3, 2));
    EpsMatrix pole = diag({EpsRational::eps(), EpsRational(1), EpsRational(1)});
    CHECK_THROWS_AS(lift_symmetric_check(pole, algebras::constant_family(build_split(3)), r3, 2), PoleAtZero);
  }

  TEST_CASE("monotonicity ledger") {
    auto sizes = [](const std::vector<LedgerRow>& rows) {
      std::vector<std::size_t> v;
      for (const auto& r : rows) v.push_back(r.q);
      return v;
    };
    CHECK(sizes(monotonicity_ledger("trd", 5, 1, 4)) == std::vector<std::size_t>{5, 3, 2, 2});
    CHECK(sizes(monotonicity_ledger("tri", 4, 2, 4)) == std::vector<std::size_t>{6, 5, 4});
    CHECK(sizes(monotonicity_ledger("cw", 2, 2, 4)) == std::vector<std::size_t>{2, 2, 1});
    for (const auto& f : family_tags()) {
      std::size_t n = f == "sl" ? 2 : 3;
      std::size_t kmax = f == "mamu" ? 5 : 6;
      CHECK_NOTHROW(monotonicity_ledger(f, n, 1, kmax));
    }
  }
}
