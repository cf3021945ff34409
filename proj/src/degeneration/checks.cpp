#include "subrank/degeneration/checks.hpp"

#include <sstream>

#include "subrank/degeneration/families.hpp"
#include "subrank/errors.hpp"

namespace subrank::degeneration {

Matrix<Rat> random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
  Matrix<Rat> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(rng.uniform(-5, 5));
  return m;
}

std::vector<Matrix<Rat>> random_restriction(const tensor::Shape& s, std::size_t target, SplitMix64& rng,
                                            bool unit_column) {
  std::vector<Matrix<Rat>> maps;
  for (std::size_t m = 0; m < s.order(); ++m) {
    Matrix<Rat> x = random_matrix(target, s[m], rng);
    if (unit_column && m > 0)
      for (std::size_t i = 0; i < target; ++i) x(i, 0) = Rat(i == 0 ? 1 : 0);
    maps.push_back(std::move(x));
  }
  return maps;
}

RatTensor restrict(const RatTensor& t, const std::vector<Matrix<Rat>>& maps) {
  return tensor::apply_mode_maps(t, maps);
}

std::vector<RatTensor> sample_restrictions(const RatTensor& t, std::size_t target, std::uint64_t seed,
                                           std::size_t count) {
  std::vector<RatTensor> out;
  for (std::size_t i = 0; i < count; ++i) {
    SplitMix64 rng(derive_seed(seed, i));
    out.push_back(restrict(t, random_restriction(t.shape(), target, rng)));
  }
  return out;
}

namespace {

// Row-reduce x0 so that every vector of `top` lands in <e_0>. False if row 0 annihilates one of them.
bool normalize_socle(Matrix<Rat>& x0, const std::vector<std::vector<Rat>>& top) {
  for (const auto& v : top) {
    std::vector<Rat> img(x0.rows());
    for (std::size_t i = 0; i < x0.rows(); ++i)
      for (std::size_t j = 0; j < x0.cols(); ++j) img[i] += x0(i, j) * v[j];
    if (img[0].is_zero()) return false;
    for (std::size_t i = 1; i < x0.rows(); ++i) {
      if (img[i].is_zero()) continue;
      Rat f = img[i] / img[0];
      for (std::size_t j = 0; j < x0.cols(); ++j) x0(i, j) -= f * x0(0, j);
    }
  }
  return true;
}

}  // namespace

InstabilityResult instability_run(const algebras::Algebra& a, std::size_t k, std::uint64_t seed,
                                  std::size_t samples) {
  if (!a.commutative) throw NotLocalForm(a.name + " is not commutative");
  algebras::SocleInfo soc = algebras::socle_degree(a);
  const std::size_t s = soc.s;
  if (s == 0) throw RangeError(a.name + " has zero maximal ideal");
  std::vector<long> in_w, out_w;
  bool socle_mode0 = false;
  if (k >= 2 * s + 1) {
    in_w = {1, -1};
    out_w = {0, 0};
  } else if (k == 2 * s && soc.r >= 2) {
    in_w = {2, -1, -1};
    out_w = {0, 0, 0};
  } else if (k == 2 * s) {
    in_w = out_w = {1, -1};
    socle_mode0 = true;
  } else {
    throw RangeError("k = " + std::to_string(k) + " is below the instability range for socle degree " +
                     std::to_string(s));
  }
  const std::size_t target = in_w.size();
  RatTensor t = algebras::structure_tensor(a, k);
  InstabilityResult res;
  res.target = target;
  std::vector<std::vector<long>> weights{out_w};
  for (std::size_t p = 1; p <= k; ++p) weights.push_back(in_w);

  for (std::size_t smp = 0; smp < samples; ++smp) {
    SplitMix64 rng(derive_seed(seed, smp));
    std::vector<Matrix<Rat>> maps;
    do maps = random_restriction(t.shape(), target, rng, true);
    while (socle_mode0 && !normalize_socle(maps[0], soc.top));
    RatTensor r = restrict(t, maps);
    // one-parameter subgroup, then the limit must vanish
    std::vector<EpsMatrix> g;
    for (const auto& w : weights) {
      EpsMatrix d(target, target);
      for (std::size_t i = 0; i < target; ++i) d(i, i) = eps_pow(w[i]);
      g.push_back(d);
    }
    EpsTensor img = tensor::apply_mode_maps(tensor::lift(r), g);
    ++res.samples;
    for (const auto& [lin, v] : img.entries()) {
      if (v.valuation() > 0) continue;
      res.unstable = false;
      InstabilityWitness w;
      for (std::size_t m = 0; m < maps.size(); ++m) w.restriction.push_back({m, maps[m]});
      w.subgroup_weights = weights;
      res.violation = std::move(w);
      res.detail = "sample " + std::to_string(smp) + ": entry " + tensor::describe_entry(img.shape(), lin) +
                   " = " + v.str() + " does not vanish";
      return res;
    }
  }
  return res;
}

bool instability_check(const algebras::Algebra& a, std::size_t k, std::uint64_t seed, std::size_t samples) {
  return instability_run(a, k, seed, samples).unstable;
}

algebras::Algebra build_split(std::size_t d) {
  if (d == 0) throw InputError("split algebra needs d >= 1");
  algebras::Algebra a("C^" + std::to_string(d), d);
  for (std::size_t i = 0; i < d; ++i) a.c(i, i, i) = Rat(1);
  a.unit = std::vector<Rat>(d, Rat(1));
  a.associative = a.commutative = true;
  for (std::size_t i = 0; i < d; ++i) a.basis_labels.push_back("e" + std::to_string(i));
  return a;
}

EpsMatrix vandermonde_matrix(std::size_t d) {
  EpsMatrix v(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      long c = 1;
      for (std::size_t t = 0; t < j; ++t) c *= static_cast<long>(i);
      v(i, j) = j == 0 ? EpsRational(1) : EpsRational::monomial(Rat(c), static_cast<long>(j));
    }
  return v;
}

bool lift_symmetric_check(const EpsMatrix& g, const algebras::AlgebraFamily& a, const algebras::Algebra& b,
                          std::size_t k_max) {
  if (g.rows() != a.dim || g.cols() != a.dim || b.dim != a.dim) throw ShapeMismatch("dimension mismatch");
  EpsMatrix git;
  try {
    git = tensor::inverse(g).transpose();
  } catch (const std::domain_error&) {
    throw InputError("g is not invertible over Q(eps)");
  }
  for (std::size_t k = 2; k <= k_max; ++k) {
    std::vector<EpsMatrix> maps{g};
    for (std::size_t p = 1; p <= k; ++p) maps.push_back(git);
    EpsTensor img = tensor::apply_mode_maps(algebras::structure_tensor(a, k), maps);
    if (tensor::eps_limit(img) != algebras::structure_tensor(b, k)) return false;
  }
  return true;
}

std::vector<LedgerRow> monotonicity_ledger(const std::string& family, std::size_t n, std::size_t k_min,
                                           std::size_t k_max) {
  std::vector<LedgerRow> rows;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    Certificate c = best_certificate(family, n, k);
    std::size_t q = verify_unit_certificate(family_tensor(family, n, k), c);
    if (!rows.empty() && q > rows.back().q) {
      std::ostringstream os;
      os << family << " n=" << n << ": size " << q << " at k=" << k << " exceeds " << rows.back().q << " at k=" << k - 1;
      throw ValidationError(os.str());
    }
    rows.push_back({k, q, c.family_tag});
  }
  return rows;
}

}  // namespace subrank::degeneration
