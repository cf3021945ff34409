#include "subrank/bounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "subrank/errors.hpp"

namespace subrank::bounds {

std::size_t LPProblem::num_vars() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

LPProblem support_lp(const RatTensor& t) {
  if (t.is_zero()) throw InputError("G-stable LP needs a nonzero tensor");
  LPProblem p;
  p.dims = t.shape().dims();
  for (const auto& [lin, v] : t.entries()) p.support.push_back(t.index_of(lin));
  return p;
}

SimplexResult simplex_max(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                          const std::vector<Rat>& c) {
  const std::size_t m = a.size(), n = c.size(), w = n + m + 1;
  for (const auto& bi : b)
    if (bi.sign() < 0) throw InputError("simplex needs b >= 0");
  // tableau rows: [A | I | b]; objective row holds reduced costs and -value
  std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(w));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
    tab[i][n + i] = Rat(1);
    tab[i][w - 1] = b[i];
    basis[i] = n + i;
  }
  std::vector<Rat> obj(w);
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
  SimplexResult res;
  while (true) {
    std::size_t enter = w;
    for (std::size_t j = 0; j + 1 < w; ++j)
      if (obj[j].sign() > 0) {
        enter = j;
        break;
      }
    if (enter == w) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter].sign() <= 0) continue;
      Rat ratio = tab[i][w - 1] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw InputError("LP is unbounded");
    auto& pr = tab[leave];
    Rat inv = pr[enter].inverse();
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < w; ++j)
      if (!pr[j].is_zero()) {
        pr[j] *= inv;
        nz.push_back(j);
      }
    auto eliminate = [&](std::vector<Rat>& row) {
      if (row[enter].is_zero()) return;
      Rat f = row[enter];
      for (std::size_t j : nz) row[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < m; ++i)
      if (i != leave) eliminate(tab[i]);
    eliminate(obj);
    basis[leave] = enter;
    ++res.pivots;
  }
  res.value = -obj[w - 1];
  res.y.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.y[basis[i]] = tab[i][w - 1];
  return res;
}

Rat solve_lp(const LPProblem& p) {
  // dual packing: max sum_P y_P with sum_{P : P_j = i} y_P <= 1 for every variable x_{j,i}
  std::vector<std::size_t> offset(p.dims.size());
  for (std::size_t j = 1; j < p.dims.size(); ++j) offset[j] = offset[j - 1] + p.dims[j - 1];
  const std::size_t rows = p.num_vars(), cols = p.support.size();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t j = 0; j < p.dims.size(); ++j) a[offset[j] + p.support[c][j]][c] = Rat(1);
  return simplex_max(a, std::vector<Rat>(rows, Rat(1)), std::vector<Rat>(cols, Rat(1))).value;
}

Rat gstable_lp(const RatTensor& t) { return solve_lp(support_lp(t)); }

Rat gstable_trd_bound(std::size_t k, std::size_t d) {
  if (k == 0 || d == 0) throw RangeError("gstable_trd_bound needs k, d >= 1");
  const long kk = static_cast<long>(k), m = 2 * static_cast<long>(d - 1);
  const long q = m / (kk + 1), r = m - q * (kk + 1);
  return Rat((kk + 1) * (q + 1) * (q + 2), (kk + 1) * (q + 2) - r);
}

Rat gstable_trd_bound_checked(std::size_t k, std::size_t d) {
  Rat bound = gstable_trd_bound(k, d);
  Rat lp = gstable_lp(algebras::structure_tensor(algebras::build_truncated_poly(d), k));
  if (lp > bound)
    throw ValidationError("LP optimum " + lp.str() + " exceeds the weight bound " + bound.str() + " for k = " +
                          std::to_string(k) + ", d = " + std::to_string(d));
  return bound;
}

std::size_t gr_closed_form(const std::string& family, std::size_t n, std::size_t k) {
  if (k == 0) throw RangeError("k must be at least 1");
  if (family == "trd") return n;
  if (family == "tri") {
    const std::size_t q = n / k;
    return (q + 1) * (2 * n - q * k) / 2;
  }
  if (family == "mamu") {
    const std::size_t q = n / k, r = n - q * k;
    return (n * n + n * q + r * (q + 1)) / 2;
  }
  if (k == 1) {
    if (family == "null") return n + 1;
    if (family == "cw") return n + 2;
    if (family == "sl") return n * n - 1;
    if (family == "sl2") return 3;
  }
  if (family == "null") return 2;
  if (family == "cw") return 3;
  if (family == "sl2") return 2;
  if (family == "sl" && k == 2) return n * n - n;
  throw RangeError("no closed-form geometric rank for " + family + " n=" + std::to_string(n) +
                   " k=" + std::to_string(k));
}

std::size_t Composition::total() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

Rat h2(const Composition& p) {
  Rat s;
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    for (std::size_t j = i; j < p.parts.size(); ++j)
      s += Rat(static_cast<long>(p.parts[i] * p.parts[j]));
  return s;
}

std::pair<Composition, Rat> h2_min_composition(std::size_t n, std::size_t k) {
  if (k == 0) throw RangeError("k must be at least 1");
  const std::size_t q = n / k, r = n - q * k;
  Composition c;
  for (std::size_t i = 0; i < k; ++i) c.parts.push_back(i < r ? q + 1 : q);
  Rat v(static_cast<long>(n * n + n * q + r * (q + 1)), 2);
  if (h2(c) != v) throw ValidationError("balanced composition does not attain the closed form");
  return {c, v};
}

std::pair<Composition, Rat> h2_min_bruteforce(std::size_t n, std::size_t k) {
  if (k == 0) throw RangeError("k must be at least 1");
  Composition cur, best;
  Rat best_v;
  bool found = false;
  cur.parts.resize(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == k) {
      cur.parts[i] = left;
      Rat v = h2(cur);
      if (!found || v < best_v) {
        best = cur;
        best_v = v;
        found = true;
      }
      return;
    }
    for (std::size_t x = left + 1; x-- > 0;) {
      cur.parts[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, n);
  return {best, best_v};
}

std::vector<std::vector<long>> kernel_matrix(const Composition& p) {
  const std::size_t k = p.parts.size();
  std::vector<std::vector<long>> m(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t t = j; t <= i; ++t) m[i][j] += static_cast<long>(p.parts[t]);
  auto at = [&](std::size_t i, std::size_t j) { return j < k ? m[i][j] : 0L; };
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != at(i - 1, j) + at(i, j + 1) - (j + 1 <= i - 1 ? at(i - 1, j + 1) : 0))
        throw ValidationError("partial-sum recurrence fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return m;
}

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

std::uint64_t to_mod(const Rat& x, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class den = x.den() % pz;
  if (den == 0) throw BadPrime("prime " + std::to_string(p) + " divides a structure constant denominator");
  mpz_class num = x.num() % pz;
  if (num < 0) num += pz;
  std::uint64_t nn = num.get_ui(), dd = den.get_ui();
  return nn * pow_mod(dd, p - 2, p) % p;
}

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t inv = pow_mod(m[rank][c], p - 2, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      std::uint64_t f = m[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

FFResult ff_dimension_oracle(const algebras::Algebra& a, std::size_t k, const std::vector<std::uint64_t>& primes,
                             std::uint64_t budget) {
  if (k == 0) throw RangeError("k must be at least 1");
  if (primes.empty()) throw InputError("no primes given");
  const std::size_t n = a.dim;
  FFResult res;
  for (std::uint64_t p : primes) {
    if (!is_prime(p) || p > 1000) throw BadPrime(std::to_string(p) + " is not a usable prime");
    double outer = std::pow(static_cast<double>(p), static_cast<double>((k - 1) * n));
    if (outer > static_cast<double>(budget) || std::pow(static_cast<double>(p), static_cast<double>(k * n)) > 1e18)
      throw BudgetExceeded("enumeration of " + std::to_string(p) + "^" + std::to_string((k - 1) * n) +
                           " tuples exceeds the budget");
    std::vector<std::uint64_t> c(n * n * n);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = to_mod(a.constants[i], p);
    auto mul = [&](const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v) {
      std::vector<std::uint64_t> out(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (!u[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!v[j]) continue;
          std::uint64_t uv = u[i] * v[j] % p;
          for (std::size_t h = 0; h < n; ++h) out[h] = (out[h] + uv * c[(i * n + j) * n + h]) % p;
        }
      }
      return out;
    };
    std::uint64_t count = 0;
    // the product of the first k-1 factors, then a linear condition on the last one
    std::function<void(std::size_t, const std::vector<std::uint64_t>*)> rec = [&](std::size_t depth,
                                                                                  const std::vector<std::uint64_t>* u) {
      if (depth + 1 == k) {
        std::vector<std::vector<std::uint64_t>> lm(n, std::vector<std::uint64_t>(n, 0));
        if (u == nullptr) {
          for (std::size_t h = 0; h < n; ++h) lm[h][h] = 1;
        } else {
          for (std::size_t i = 0; i < n; ++i)
            if ((*u)[i])
              for (std::size_t j = 0; j < n; ++j)
                for (std::size_t h = 0; h < n; ++h) lm[h][j] = (lm[h][j] + (*u)[i] * c[(i * n + j) * n + h]) % p;
        }
        std::size_t rk = rank_mod(std::move(lm), p);
        std::uint64_t pts = 1;
        for (std::size_t t = rk; t < n; ++t) pts *= p;
        count += pts;
        return;
      }
      std::vector<std::uint64_t> v(n, 0);
      while (true) {
        if (u == nullptr) {
          rec(depth + 1, &v);
        } else {
          auto prod = mul(*u, v);
          rec(depth + 1, &prod);
        }
        std::size_t i = 0;
        while (i < n && ++v[i] == p) v[i++] = 0;
        if (i == n) break;
      }
    };
    rec(0, nullptr);
    res.primes.push_back(p);
    res.counts.push_back(count);
  }
  for (std::size_t i = 0; i + 1 < res.primes.size(); ++i) {
    double slope = std::log(static_cast<double>(res.counts[i + 1]) / static_cast<double>(res.counts[i])) /
                   std::log(static_cast<double>(res.primes[i + 1]) / static_cast<double>(res.primes[i]));
    res.slopes.push_back(std::lround(slope));
  }
  if (res.slopes.empty()) {
    res.dimension = std::lround(std::log(static_cast<double>(res.counts[0])) / std::log(static_cast<double>(res.primes[0])));
  } else {
    res.dimension = res.slopes.back();
    for (long s : res.slopes) res.consistent = res.consistent && s == res.dimension;
  }
  return res;
}

namespace {

bool average_free(const std::vector<std::size_t>& d, std::size_t k) {
  if (k <= 1 || d.size() < 2) return true;
  std::size_t top = d.back();
  // reach[s]: sums of exactly k-2 elements
  std::vector<char> reach(1, 1);
  for (std::size_t step = 0; step + 2 < k; ++step) {
    std::vector<char> next(reach.size() + top, 0);
    for (std::size_t s = 0; s < reach.size(); ++s)
      if (reach[s])
        for (auto x : d) next[s + x] = 1;
    reach = std::move(next);
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      for (auto y : d) {
        long t = static_cast<long>(k * y) - static_cast<long>(d[i] + d[j]);
        if (t >= 0 && static_cast<std::size_t>(t) < reach.size() && reach[t]) return false;
      }
  return true;
}

}  // namespace

std::set<std::size_t> average_free_max(std::size_t q, std::size_t k) {
  std::vector<std::size_t> best;
  if (k <= 1) {
    for (std::size_t i = 0; i <= q; ++i) best.push_back(i);
  } else if (q <= 12) {
    for (std::uint32_t mask = 1; mask < (1u << (q + 1)); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) <= best.size()) continue;
      std::vector<std::size_t> d;
      for (std::size_t i = 0; i <= q; ++i)
        if (mask >> i & 1) d.push_back(i);
      if (average_free(d, k)) best = std::move(d);
    }
  } else {
    for (std::size_t i = 0; i <= q; ++i) {
      best.push_back(i);
      if (!average_free(best, k)) best.pop_back();
    }
  }
  return {best.begin(), best.end()};
}

RatTensor bud_tensor(std::size_t d, std::size_t k) {
  RatTensor t{tensor::Shape(std::vector<std::size_t>(k + 1, d))};
  std::vector<std::size_t> idx(k + 1, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t m, std::size_t left) {
    if (m == k) {
      idx[m] = left;
      t.add(idx, Rat(1));
      return;
    }
    for (std::size_t i = 0; i <= left; ++i) {
      idx[m] = i;
      rec(m + 1, left - i);
    }
  };
  rec(0, d - 1);
  return t;
}

namespace {

const std::vector<long> kProbeWeights{0, 1, 0, 2};

}  // namespace

exactnum::EpsRational spectral_frobenius_symbolic() {
  RatTensor t = bud_tensor(4, 2);
  exactnum::EpsRational s;
  for (const auto& [lin, v] : t.entries()) {
    auto idx = t.index_of(lin);
    long e = 0;
    for (auto i : idx) e += kProbeWeights[i];
    s += exactnum::EpsRational::monomial(v * v, 2 * e);
  }
  return s;
}

double spectral_ratio_at(double eps) {
  RatTensor t = bud_tensor(4, 2);
  const std::size_t d = 4;
  std::vector<double> val(d * d * d, 0.0);
  double frob = 0;
  for (const auto& [lin, v] : t.entries()) {
    auto idx = t.index_of(lin);
    double x = v.to_double();
    for (auto i : idx) x *= std::pow(eps, static_cast<double>(kProbeWeights[i]));
    val[lin] = x;
    frob += x * x;
  }
  double best = 0;
  bool first = true;
  for (std::size_t s = 0; s < 3; ++s) {
    // Gram matrix of the s-th flattening
    std::vector<double> g(d * d, 0.0);
    for (std::size_t lin = 0; lin < val.size(); ++lin) {
      if (val[lin] == 0) continue;
      for (std::size_t lin2 = 0; lin2 < val.size(); ++lin2) {
        if (val[lin2] == 0) continue;
        auto a = t.index_of(lin), b = t.index_of(lin2);
        bool same_rest = true;
        for (std::size_t m = 0; m < 3; ++m)
          if (m != s && a[m] != b[m]) same_rest = false;
        if (same_rest) g[a[s] * d + b[s]] += val[lin] * val[lin2];
      }
    }
    std::vector<double> x(d, 1.0), y(d);
    double lambda = 0;
    for (int it = 0; it < 10000; ++it) {
      for (std::size_t i = 0; i < d; ++i) {
        y[i] = 0;
        for (std::size_t j = 0; j < d; ++j) y[i] += g[i * d + j] * x[j];
      }
      double norm = 0;
      for (double v : y) norm += v * v;
      norm = std::sqrt(norm);
      if (norm == 0) break;
      double prev = lambda;
      lambda = 0;
      for (std::size_t i = 0; i < d; ++i) lambda += x[i] * y[i];
      double xn = 0;
      for (double v : x) xn += v * v;
      lambda /= xn;
      for (std::size_t i = 0; i < d; ++i) x[i] = y[i] / norm;
      if (it > 0 && std::abs(lambda - prev) <= 1e-12 * std::abs(lambda)) break;
    }
    double ratio = frob / lambda;
    if (first || ratio < best) best = ratio;
    first = false;
  }
  return best;
}

double spectral_ratio_probe(const std::vector<double>& eps_values) {
  if (eps_values.empty()) throw InputError("no eps values");
  for (std::size_t i = 0; i < eps_values.size(); ++i) {
    if (eps_values[i] <= 0) throw InputError("eps values must be positive");
    if (i && eps_values[i] >= eps_values[i - 1]) throw InputError("eps values must be decreasing");
  }
  return spectral_ratio_at(eps_values.back());
}

}  // namespace subrank::bounds
