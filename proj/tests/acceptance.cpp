// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <iostream>
#include <sstream>

#include "subrank/bounds/bounds.hpp"
#include "subrank/cli/report.hpp"
#include "subrank/degeneration/checks.hpp"
#include "subrank/degeneration/families.hpp"
#include "subrank/degeneration/library.hpp"
#include "subrank/errors.hpp"
#include "subrank/invariants/invariants.hpp"
#include "subrank/rng.hpp"

using namespace subrank;
using exactnum::EpsRational;
using exactnum::Rat;
using tensor::Matrix;
using tensor::RatTensor;
using tensor::Shape;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr std::size_t kSamples = 20;
constexpr double kTrdCertBudget = 5.0;    // seconds, criterion 1
constexpr double kTrdLpBudget = 30.0;     // seconds, criterion 2
constexpr double kSpectralTolerance = 0.01;  // relative, criterion 12

// Criteria that cannot hold as written; each must FAIL, and the reason is printed.
const std::map<int, std::string> kUnattainable{
    {3, "T^(3)_{R_3} restrictions make both 4x4 flattenings singular, so F4 = F4' = 0 on every sample and the "
        "kernel over {F2^3, F2F4, F2F4', F6} is 3-dimensional for any admissible F4, F4'"}};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      else detail.str("");
      ok = false;
      detail << what;
    }
  }
};

RatTensor border_rank_three(bool minus) {
  RatTensor w(Shape({2, 2, 2, 2}));
  w.add({0, 0, 0, 0}, Rat(1));
  w.add({1, 1, 1, 1}, Rat(1));
  for (std::uint64_t l = 0; l < 16; ++l) w.add_linear(l, Rat(minus && w.shape().coord(l, 3) == 1 ? -1 : 1));
  return w;
}

std::vector<invariants::Evaluator> evals(std::initializer_list<const char*> names) {
  std::vector<invariants::Evaluator> out;
  for (const char* n : names) out.push_back(invariants::evaluator(n));
  return out;
}

std::string coeffs(const std::vector<Rat>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].str();
  return s + ")";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void c1(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t n = 0;
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t d = 2; d <= 9; ++d, ++n) {
      auto r = degeneration::verify_unit_certificate(degeneration::family_tensor("trd", d, k), degeneration::cert_trd(k, d));
      o.require(r == (d - 1) / k + 1, "k=" + std::to_string(k) + " d=" + std::to_string(d) + " gives " + std::to_string(r));
    }
  double s = seconds_since(t0);
  o.require(s <= kTrdCertBudget, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail << n << " certificates, " << s << " s";
}

void c2(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t tight = 0;
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t d = 2; d <= 9; ++d) {
      Rat lp = bounds::gstable_lp(degeneration::family_tensor("trd", d, k));
      Rat bound = bounds::gstable_trd_bound(k, d);
      o.require(lp <= bound, "k=" + std::to_string(k) + " d=" + std::to_string(d) + ": LP " + lp.str() + " > " + bound.str());
      tight += lp == bound;
    }
  Rat r4 = bounds::gstable_lp(degeneration::family_tensor("trd", 4, 2));
  o.require(r4 == Rat(3), "gstable_lp(T^(2)_{R_4}) = " + r4.str());
  double s = seconds_since(t0);
  o.require(s <= kTrdLpBudget, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail << "40 LPs within the bound (" << tight << " equal), R_4 k=2 gives 3, " << s << " s";
}

void c3(Outcome& o) {
  auto u33 = tensor::build_unit(3, 3), u42 = tensor::build_unit(4, 2);
  auto r4 = degeneration::sample_restrictions(degeneration::family_tensor("trd", 4, 2), 3, kSeed, kSamples);
  auto r3 = degeneration::sample_restrictions(degeneration::family_tensor("trd", 3, 3), 2, kSeed, kSamples);
  std::ostringstream info;
  try {
    auto c = invariants::separating_combination(evals({"F6^2", "F12"}), r4, u33);
    std::size_t lower = degeneration::verify_unit_certificate(degeneration::family_tensor("trd", 4, 2),
                                                              degeneration::cert_trd(2, 4));
    o.require(lower == 2, "(2,4) lower bound " + std::to_string(lower));
    info << "(2,4): unique separator " << coeffs(c) << " over (F6^2, F12), concluded 2";
  } catch (const std::exception& e) {
    o.require(false, std::string("(2,4): ") + e.what());
  }
  try {
    auto c = invariants::separating_combination(evals({"F2^3", "F2*F4", "F2*F4'", "F6"}), r3, u42);
    info << "; (3,3): unique separator " << coeffs(c);
  } catch (const std::exception& e) {
    o.require(false, std::string("(3,3) over {F2^3, F2F4, F2F4', F6}: ") + e.what());
    try {
      auto c = invariants::separating_combination(evals({"F2^3", "F6"}), r3, u42);
      info << "; (3,3) over (F2^3, F6): unique separator " << coeffs(c) << ", concluded 1";
    } catch (const std::exception& e2) {
      info << "; (3,3) over (F2^3, F6): " << e2.what();
    }
  }
  if (o.ok) o.detail << info.str();
  else o.detail << " [" << info.str() << "]";
}

void c4(Outcome& o) {
  std::size_t n_checked = 0;
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t k = 1; k <= 6; ++k, ++n_checked) {
      std::size_t q = n / k, want = (q + 1) * (2 * n - q * k) / 2;
      auto r = degeneration::verify_unit_certificate(degeneration::family_tensor("tri", n, k),
                                                     degeneration::cert_triangular(k, n));
      o.require(r == want && bounds::gr_closed_form("tri", n, k) == want,
                "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": certificate " + std::to_string(r));
    }
  std::size_t restr = 0;
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t k = (n + 1) / 2; k <= n - 1; ++k) {
      if (k < 2) continue;
      auto c = degeneration::cert_triangular_restriction(k, n, {0, 1});
      auto r = degeneration::verify_unit_certificate(degeneration::family_tensor("tri", n, k), c);
      o.require(r == 2 * n - k, "restriction n=" + std::to_string(n) + " k=" + std::to_string(k) + " gives " +
                                    std::to_string(r));
      ++restr;
    }
  if (o.ok) o.detail << n_checked << " certificates equal GR; " << restr << " average-free restrictions give 2n-k";
}

void c5(Outcome& o) {
  for (std::size_t k = 3; k <= 5; ++k)
    for (std::size_t n = 2; n <= 6; ++n) {
      std::size_t q = (n - 1) / (k - 1), r = (n - 1) - q * (k - 1);
      std::size_t m = n + q * (n - k + r + 2);
      auto v = degeneration::verify_unit_certificate(degeneration::family_tensor("mamu", n, k),
                                                     degeneration::cert_mamu(k, n));
      o.require(v == m, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " certificate " + std::to_string(v));
      o.require(m * (k - 1) >= n * n, "M(" + std::to_string(n) + "," + std::to_string(k) + ") < n^2/(k-1)");
    }
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 1; k <= 6; ++k) {
      std::size_t q = n / k, r = n - q * k;
      std::size_t closed = (n * n + n * q + r * (q + 1)) / 2;
      o.require(bounds::gr_closed_form("mamu", n, k) == closed, "closed form mismatch");
      o.require(bounds::h2_min_bruteforce(n, k).second == Rat(static_cast<long>(closed)),
                "h2 brute force n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  auto ff = bounds::ff_dimension_oracle(algebras::build_matrix(2), 2, {5, 7, 11});
  long gr = 2 * 4 - ff.dimension;
  o.require(ff.consistent && gr == 3, "finite-field GR of Mat_2 is " + std::to_string(gr));
  if (o.ok) o.detail << "15 MaMu certificates; GR = h2 minimum for n<=10, k<=6; Mat_2 finite-field GR 3";
}

void c6(Outcome& o) {
  auto smp = degeneration::sample_restrictions(algebras::build_mamu({2, 2, 2, 2}), 2, kSeed, kSamples);
  std::size_t zeros = 0;
  for (const auto& s : smp) zeros += invariants::f6_2222(s).is_zero();
  Rat w = invariants::f6_2222(border_rank_three(false));
  o.require(zeros == kSamples, std::to_string(zeros) + "/20 samples vanish");
  o.require(!w.is_zero(), "F6 vanishes on the witness");
  auto lower = degeneration::verify_unit_certificate(degeneration::family_tensor("mamu", 2, 3),
                                                     degeneration::cert_mamu(3, 2));
  o.require(lower == 2, "lower bound " + std::to_string(lower));
  if (o.ok) o.detail << "F6 = 0 on 20/20 samples, F6(witness) = " << w << ", concluded 2";
}

void c7(Outcome& o) {
  o.require(tensor::recognize_unit(degeneration::apply_and_limit(degeneration::family_tensor("cw", 3, 2),
                                                                 degeneration::cert_cw_k2(3))) == 3u,
            "cert_cw_k2 limit is not u_3(3)");
  o.require(degeneration::apply_and_limit(degeneration::family_tensor("cw", 2, 3), degeneration::cert_cw_k3(2)) ==
                tensor::build_unit(4, 2),
            "cert_cw_k3 limit is not u_4(2)");
  for (std::size_t n : {2, 3}) {
    std::size_t zeros = 0;
    for (const auto& s : degeneration::sample_restrictions(degeneration::family_tensor("cw", n, 3), 2, kSeed, kSamples))
      zeros += invariants::hyperdet_2222(s).is_zero();
    o.require(zeros == kSamples, "Q_" + std::to_string(n) + ": hyperdeterminant vanishes on " + std::to_string(zeros) + "/20");
  }
  o.require(!invariants::hyperdet_2222(border_rank_three(true)).is_zero(), "hyperdeterminant vanishes on the witness");
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 4; k <= 6; ++k)
      o.require(degeneration::instability_check(algebras::build_apolar_quadric(n), k, kSeed),
                "instability Q_" + std::to_string(n) + " k=" + std::to_string(k));
  for (std::size_t d = 2; d <= 5; ++d)  // (k, r) = (2s, 1) for R_d
    o.require(degeneration::instability_check(algebras::build_truncated_poly(d), 2 * (d - 1), kSeed),
              "instability R_" + std::to_string(d) + " k=" + std::to_string(2 * (d - 1)));
  cli::ReportOptions opt;
  opt.seed = kSeed;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 2; k <= 6; ++k) {
      std::size_t want = k >= 4 || (k == 3 && n == 1) ? 1 : (k == 3 || n <= 2) ? 2 : 3;
      auto row = cli::compute_row({"cw", n, k}, opt);
      o.require(row.concluded == want, "report row Q_" + std::to_string(n) + " k=" + std::to_string(k) + " " + row.status);
    }
  if (o.ok) o.detail << "certificates exact; hyperdeterminant 0 on 40 samples, nonzero on witness; 16 instability checks; "
                        "20 report rows match the case table";
}

void c8(Outcome& o) {
  for (std::size_t k : {2, 3}) {
    auto ff = bounds::ff_dimension_oracle(algebras::build_null(2), k, {5, 7, 11});
    long gr = static_cast<long>(3 * k) - ff.dimension;
    o.require(ff.consistent && gr == 2 && bounds::gr_closed_form("null", 2, k) == 2,
              "N_2 k=" + std::to_string(k) + ": finite-field GR " + std::to_string(gr));
  }
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 3; k <= 5; ++k)
      o.require(degeneration::instability_check(algebras::build_null(n), k, kSeed),
                "instability N_" + std::to_string(n) + " k=" + std::to_string(k));
  if (o.ok) o.detail << "GR 2 confirmed for k=2,3; 12 instability checks";
}

void c9(Outcome& o) {
  for (std::size_t n = 2; n <= 7; ++n) {
    auto r = degeneration::verify_unit_certificate(degeneration::family_tensor("sl", n, 2), degeneration::cert_sl_block(n));
    o.require(r == n, "sl_" + std::to_string(n) + " gives " + std::to_string(r));
  }
  for (std::size_t k = 2; k <= 8; ++k) {
    auto r = degeneration::verify_unit_certificate(degeneration::family_tensor("sl2", 2, k), degeneration::cert_sl2(k));
    o.require(r == 2, "sl2 k=" + std::to_string(k) + " gives " + std::to_string(r));
  }
  auto ff = bounds::ff_dimension_oracle(algebras::build_sl(2), 2, {5, 7, 11});
  o.require(ff.consistent && ff.dimension == 4, "commuting variety dimension " + std::to_string(ff.dimension));
  o.require(bounds::gr_closed_form("sl", 2, 2) == 2 && 6 - ff.dimension == 2, "GR of sl_2 is not 2");
  if (o.ok) o.detail << "sl_n blocks n<=7; sl2 k=2..8 give 2; commuting variety dim 4 of 6";
}

void c10(Outcome& o) {
  for (std::size_t d : {3, 4}) {
    auto g = tensor::inverse(degeneration::vandermonde_matrix(d));
    o.require(degeneration::lift_symmetric_check(g, algebras::constant_family(degeneration::build_split(d)),
                                                 algebras::build_truncated_poly(d), 4),
              "Vandermonde lift d=" + std::to_string(d));
  }
  std::size_t ledgers = 0;
  for (const auto& f : degeneration::family_tags()) {
    std::size_t n = f == "sl" || f == "sl2" || f == "mamu" ? 2 : 3;
    auto rows = degeneration::monotonicity_ledger(f, n, 1, 6);  // throws on an increase
    o.require(rows.size() == 6, f + " ledger incomplete");
    ++ledgers;
  }
  for (const auto& f : degeneration::family_tags())
    for (std::size_t n = 2; n <= 6; ++n) {
      std::optional<std::size_t> prev;
      for (std::size_t k = 1; k <= 6; ++k) {
        std::size_t g;
        try {
          g = bounds::gr_closed_form(f, n, k);
        } catch (const RangeError&) {
          break;
        }
        o.require(!prev || g <= *prev, "GR increases for " + f + " n=" + std::to_string(n) + " at k=" + std::to_string(k));
        prev = g;
      }
    }
  if (o.ok) o.detail << "lifts for d=3,4 up to k=4; " << ledgers << " ledgers non-increasing to k=6; GR non-increasing";
}

void c11(Outcome& o) {
  std::size_t d333 = invariants::invariant_space(Shape({3, 3, 3}), 6).basis.size();
  std::size_t d2 = invariants::invariant_space(Shape({2, 2, 2, 2}), 2).basis.size();
  std::size_t d4 = invariants::invariant_space(Shape({2, 2, 2, 2}), 4).basis.size();
  std::size_t dc = invariants::invariant_kernel(invariants::ternary_cubic_representation(), 4).size();
  o.require(d333 == 1 && d2 == 1 && d4 == 3 && dc == 1, "dimensions " + std::to_string(d333) + "," +
                                                            std::to_string(d2) + "," + std::to_string(d4) + "," +
                                                            std::to_string(dc));
  std::size_t evals = 0;
  for (auto [shape, deg] : {std::pair{Shape({3, 3, 3}), std::size_t{6}}, {Shape({2, 2, 2, 2}), 2}, {Shape({2, 2, 2, 2}), 4}}) {
    auto basis = invariants::invariant_space(shape, deg).basis;
    for (std::uint64_t s = 0; s < 10; ++s) {
      SplitMix64 rng(derive_seed(kSeed, s));
      RatTensor t(shape);
      for (std::uint64_t l = 0; l < shape.volume(); ++l) t.add_linear(l, Rat(rng.uniform(-4, 4)));
      std::vector<Matrix<Rat>> g;
      for (auto n : shape.dims()) {
        // unit lower times unit upper times diag(a, 1/a, 1, ...)
        Matrix<Rat> l = Matrix<Rat>::identity(n), u = Matrix<Rat>::identity(n), dg = Matrix<Rat>::identity(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = Rat(rng.uniform(-3, 3), rng.uniform(1, 3));
            u(j, i) = Rat(rng.uniform(-3, 3), rng.uniform(1, 3));
          }
        Rat a(rng.uniform(1, 4));
        dg(0, 0) = a;
        dg(1, 1) = Rat(1) / a;
        g.push_back(l * u * dg);
        o.require(tensor::determinant(g.back()) == Rat(1), "random map has determinant != 1");
      }
      auto gt = degeneration::restrict(t, g);
      for (const auto& f : basis) {
        o.require(invariants::evaluate(f, gt) == invariants::evaluate(f, t), "invariance fails");
        ++evals;
      }
    }
  }
  auto u33 = tensor::build_unit(3, 3);
  o.require(invariants::f6_333(u33) == Rat(1) && invariants::f12_333(u33) == Rat(1) &&
                invariants::f2_2222(tensor::build_unit(4, 2)) == Rat(1),
            "normalizations");
  if (o.ok) o.detail << "dimensions 1,1,3,1; " << evals << " invariance checks exact; F6 = F12 = F2 = 1 at units";
}

void c12(Outcome& o) {
  double r = bounds::spectral_ratio_probe({1e-1, 1e-2, 1e-3});
  o.require(std::abs(r - 3.0) <= kSpectralTolerance * 3.0, "ratio " + std::to_string(r));
  EpsRational expect = EpsRational::monomial(Rat(6), 2) + EpsRational::monomial(Rat(3), 4) + EpsRational::monomial(Rat(1), 6);
  o.require(bounds::spectral_frobenius_symbolic() == expect, "Frobenius norm is " + bounds::spectral_frobenius_symbolic().str());
  if (o.ok) o.detail << "ratio " << r << " at eps = 1e-3; Frobenius norm squared 6e^2 + 3e^4 + e^6";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"TRd degenerations", c1},      {"TRd G-stable", c2},          {"TRd concluded values", c3},
      {"triangular", c4},             {"MaMu", c5},                   {"MaMu 2222", c6},
      {"CW family", c7},              {"null algebras", c8},          {"sl", c9},
      {"propagation", c10},           {"invariant infrastructure", c11}, {"numeric probe", c12}};
  auto start = std::chrono::steady_clock::now();
  int unexpected = 0, passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    const bool expected_fail = kUnattainable.count(id) > 0;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << " (" << std::fixed
              << std::setprecision(1) << s << " s): " << o.detail.str();
    if (!o.ok && expected_fail) std::cout << " [unattainable as stated: " << kUnattainable.at(id) << "]";
    std::cout << "\n";
    passed += o.ok;
    if (o.ok == expected_fail) ++unexpected;
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass, " << kUnattainable.size()
            << " documented as unattainable, " << unexpected << " unexpected outcome(s), total "
            << seconds_since(start) << " s\n";
  return unexpected == 0 ? 0 : 1;
}
