#include "subrank/degeneration/library.hpp"

#include <cstdlib>

#include "subrank/errors.hpp"

namespace subrank::degeneration {

namespace {

using algebras::sl_offdiag_index;
using algebras::triangular_index;

using Entry = std::tuple<std::size_t, std::size_t, EpsRational>;

EpsMatrix sparse(std::size_t rows, std::size_t cols, const std::vector<Entry>& es) {
  EpsMatrix m(rows, cols);
  for (const auto& [i, j, v] : es) m(i, j) = v;
  return m;
}

EpsRational one() { return EpsRational(Rat(1)); }

Certificate make(std::string tag, Params params, std::vector<EpsMatrix> maps, std::size_t claim) {
  Certificate c;
  c.family_tag = std::move(tag);
  c.params = std::move(params);
  for (std::size_t m = 0; m < maps.size(); ++m) c.mode_maps.push_back({m, std::move(maps[m])});
  c.claimed_unit = claim;
  return c;
}

std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }

void require(bool ok, const std::string& msg) {
  if (!ok) throw RangeError(msg);
}

long ipow2(std::size_t e) { return 1L << e; }

std::size_t absdiff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

Certificate cert_identity(const RatTensor& t, const std::string& tag) {
  std::vector<EpsMatrix> maps;
  for (std::size_t m = 0; m < t.order(); ++m) maps.push_back(to_eps(Matrix<Rat>::identity(t.shape()[m])));
  return make(tag, {{"k", {i64(t.order() - 1)}}}, std::move(maps), t.shape()[0]);
}

Certificate cert_point(const RatTensor& t, const std::string& tag) {
  if (t.is_zero()) throw RangeError("zero tensor has no size-1 restriction");
  auto idx = t.index_of(t.entries().begin()->first);
  std::vector<EpsMatrix> maps;
  for (std::size_t m = 0; m < t.order(); ++m) maps.push_back(sparse(1, t.shape()[m], {{0, idx[m], one()}}));
  return make(tag, {{"k", {i64(t.order() - 1)}}}, std::move(maps), 1);
}

Certificate cert_trd(std::size_t k, std::size_t d) {
  require(k >= 1 && d >= 1, "trd certificate needs k >= 1, d >= 1");
  const std::size_t qp = (d - 1) / k, pbar = qp / 2;
  std::vector<Entry> out, in;
  for (std::size_t p = 0; p <= qp; ++p) {
    long w = ipow2(absdiff(p, pbar));
    out.emplace_back(p, k * p, eps_pow(-static_cast<long>(k) * w));
    in.emplace_back(p, p, eps_pow(w));
  }
  std::vector<EpsMatrix> maps{sparse(qp + 1, d, out)};
  for (std::size_t j = 1; j <= k; ++j) maps.push_back(sparse(qp + 1, d, in));
  return make("trd", {{"k", {i64(k)}}, {"d", {i64(d)}}}, std::move(maps), qp + 1);
}

std::size_t triangular_claim(std::size_t k, std::size_t n) {
  const std::size_t q = n / k;
  return (q + 1) * (2 * n - q * k) / 2;
}

Certificate cert_triangular(std::size_t k, std::size_t n) {
  require(k >= 1 && n >= 1, "triangular certificate needs k >= 1, n >= 1");
  const std::size_t dim = n * (n + 1) / 2;
  std::vector<Entry> out, in;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      long s = static_cast<long>((b - a) * (b - a));
      std::size_t i = triangular_index(n, a, b);
      out.emplace_back(i, i, eps_pow(-s));
      in.emplace_back(i, i, eps_pow(static_cast<long>(k) * s));
    }
  std::vector<EpsMatrix> maps{sparse(dim, dim, out)};
  for (std::size_t j = 1; j <= k; ++j) maps.push_back(sparse(dim, dim, in));
  return make("tri", {{"k", {i64(k)}}, {"n", {i64(n)}}}, std::move(maps), triangular_claim(k, n));
}

std::size_t mamu_claim(std::size_t k, std::size_t n) {
  require(k >= 2 && n >= 1, "MaMu certificate needs k >= 2, n >= 1");
  if (k == 2) return (3 * n * n + 3) / 4;
  const std::size_t q = (n - 1) / (k - 1), r = (n - 1) - q * (k - 1);
  return n + q * (n - k + r + 2);
}

Certificate cert_mamu(std::size_t k, std::size_t n) {
  const std::size_t claim = mamu_claim(k, n);
  // vectors c_0..c_k and target h
  const std::size_t dimv = k == 2 ? 1 : k - 1;
  std::vector<std::vector<long>> c(k + 1, std::vector<long>(dimv, 0));
  std::vector<long> h(dimv);
  if (k == 2) {
    for (auto& v : c) v[0] = 1;
    h[0] = static_cast<long>(3 * (n - 1) / 2);
  } else {
    c[0][0] = 1;
    for (std::size_t i = 1; i + 2 <= k; ++i) c[i][i - 1] = c[i][i] = 1;
    c[k - 1][k - 2] = 1;
    for (std::size_t l = 1; l <= k - 1; ++l) c[k][l - 1] = l % 2 == 1 ? 1 : -1;
    const long q = static_cast<long>((n - 1) / (k - 1));
    for (std::size_t l = 1; l <= k - 1; ++l) h[l - 1] = static_cast<long>(n - 1) - (l % 2 == 0 ? q : -q);
  }
  auto dot = [&](const std::vector<long>& x, const std::vector<long>& y) {
    long s = 0;
    for (std::size_t t = 0; t < dimv; ++t) s += x[t] * y[t];
    return s;
  };
  const std::size_t N = n * n;
  std::vector<std::vector<Entry>> es(k + 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const long i = static_cast<long>(a), j = static_cast<long>(b);
      const std::size_t lin = a * n + b;
      es[0].emplace_back(lin, lin, eps_pow(2 * dot(c[0], c[k]) * i * j + dot(h, h)));
      for (std::size_t m = 1; m <= k; ++m) {
        long e = dot(c[m], c[m]) * j * j - 2 * dot(c[m], h) * j + 2 * dot(c[m - 1], c[m]) * i * j;
        if (m == 1) e += dot(c[0], c[0]) * i * i - 2 * dot(c[0], h) * i;
        es[m].emplace_back(lin, lin, eps_pow(e));
      }
    }
  std::vector<EpsMatrix> maps;
  for (auto& e : es) maps.push_back(sparse(N, N, e));
  return make("mamu", {{"k", {i64(k)}}, {"n", {i64(n)}}}, std::move(maps), claim);
}

bool is_average_free(const std::set<std::size_t>& d, std::size_t k) {
  if (k <= 1 || d.size() < 2) return true;
  // sums of exactly k-2 elements (with repetition)
  std::set<long> sums{0};
  for (std::size_t step = 0; step + 2 < k; ++step) {
    std::set<long> next;
    for (long s : sums)
      for (auto x : d) next.insert(s + static_cast<long>(x));
    sums = std::move(next);
  }
  for (auto a : d)
    for (auto b : d) {
      if (a >= b) continue;
      for (auto y : d)
        if (sums.count(static_cast<long>(k * y) - static_cast<long>(a + b))) return false;
    }
  return true;
}

Certificate cert_triangular_restriction(std::size_t k, std::size_t n, const std::set<std::size_t>& d) {
  require(k >= 1 && n >= 1, "triangular restriction needs k >= 1, n >= 1");
  for (auto x : d) require(k * x <= n - 1, "difference " + std::to_string(x) + " too large for n = " + std::to_string(n));
  if (!is_average_free(d, k)) throw RangeError("difference set is not " + std::to_string(k) + "-average-free");
  const std::size_t dim = n * (n + 1) / 2;
  std::vector<std::vector<Entry>> es(k + 1);
  std::size_t row = 0;
  for (auto x : d)
    for (std::size_t a = 0; a + k * x < n; ++a, ++row) {
      es[0].emplace_back(row, triangular_index(n, a, a + k * x), one());
      for (std::size_t p = 1; p <= k; ++p)
        es[p].emplace_back(row, triangular_index(n, a + (p - 1) * x, a + p * x), one());
    }
  std::vector<EpsMatrix> maps;
  for (auto& e : es) maps.push_back(sparse(row, dim, e));
  std::vector<std::int64_t> dv;
  for (auto x : d) dv.push_back(i64(x));
  return make("tri-restriction", {{"k", {i64(k)}}, {"n", {i64(n)}}, {"D", dv}}, std::move(maps), row);
}

Certificate cert_cw_k2(std::size_t n) {
  require(n >= 3, "size-3 certificate for Q_n needs n >= 3");
  const std::size_t dim = n + 2, y = n + 1;
  std::vector<EpsMatrix> maps{sparse(3, dim, {{0, 1, one()}, {1, 2, one()}, {2, y, one()}}),
                              sparse(3, dim, {{1, 0, one()}, {0, 1, one()}, {2, 3, one()}}),
                              sparse(3, dim, {{0, 0, one()}, {1, 2, one()}, {2, 3, one()}})};
  return make("cw", {{"k", {2}}, {"n", {i64(n)}}}, std::move(maps), 3);
}

Certificate cert_cw_k3(std::size_t n) {
  require(n >= 2, "size-2 certificate for Q_n with k = 3 needs n >= 2");
  const std::size_t dim = n + 2, y = n + 1;
  EpsMatrix tail = sparse(2, dim, {{0, 0, one()}, {1, 2, one()}});
  std::vector<EpsMatrix> maps{sparse(2, dim, {{0, 1, one()}, {1, y, one()}}),
                              sparse(2, dim, {{1, 0, one()}, {0, 1, one()}}), tail, tail};
  return make("cw", {{"k", {3}}, {"n", {i64(n)}}}, std::move(maps), 2);
}

Certificate cert_cw_small(std::size_t n) {
  require(n >= 1, "Q_n needs n >= 1");
  const std::size_t dim = n + 2, y = n + 1;
  std::vector<EpsMatrix> maps;
  if (n == 1) {
    EpsMatrix in = sparse(2, dim, {{0, 0, one()}, {1, 1, one()}});
    maps = {sparse(2, dim, {{0, 0, one()}, {1, y, one()}}), in, in};
  } else {
    maps = {sparse(2, dim, {{0, 1, one()}, {1, y, one()}}), sparse(2, dim, {{0, 1, one()}, {1, 2, one()}}),
            sparse(2, dim, {{0, 0, one()}, {1, 2, one()}})};
  }
  return make("cw", {{"k", {2}}, {"n", {i64(n)}}}, std::move(maps), 2);
}

Certificate cert_null_k2(std::size_t n) {
  require(n >= 2, "size-2 certificate for N_n needs n >= 2");
  const std::size_t dim = n + 1;
  std::vector<EpsMatrix> maps{sparse(2, dim, {{0, 1, one()}, {1, 2, one()}}),
                              sparse(2, dim, {{0, 1, one()}, {1, 0, one()}}),
                              sparse(2, dim, {{0, 0, one()}, {1, 2, one()}})};
  return make("null", {{"k", {2}}, {"n", {i64(n)}}}, std::move(maps), 2);
}

namespace {

// Standard-basis tables for sl_2 (3 x 3) and sl_3 (3 x 8).
std::vector<Matrix<Rat>> sl2_table() {
  Matrix<Rat> x0(2, 3), x1(2, 3), x2(2, 3);
  x0(0, 1) = Rat(1, 2);
  x0(1, 2) = Rat(1, 2);
  x1(0, 0) = Rat(1);
  x1(1, 2) = Rat(1);
  x2(1, 0) = Rat(1);
  x2(0, 1) = Rat(1);
  return {x0, x1, x2};
}

std::vector<Matrix<Rat>> sl3_table() {
  const std::size_t h1 = 0, h2 = 1, e12 = sl_offdiag_index(3, 0, 1), e21 = sl_offdiag_index(3, 1, 0),
                    e23 = sl_offdiag_index(3, 1, 2), e32 = sl_offdiag_index(3, 2, 1);
  Matrix<Rat> x0(3, 8), x1(3, 8), x2(3, 8);
  x0(2, h2) = Rat(1);
  x0(0, e12) = Rat(1, 2);
  x0(1, e21) = Rat(1, 2);
  x1(0, h1) = Rat(1);
  x1(2, e23) = Rat(1);
  x1(1, e21) = Rat(1);
  x2(1, h1) = Rat(1);
  x2(0, e12) = Rat(1);
  x2(2, e32) = Rat(1);
  return {x0, x1, x2};
}

}  // namespace

Certificate cert_sl_block(std::size_t n) {
  require(n >= 2, "sl_n certificate needs n >= 2");
  const std::size_t dim = n * n - 1;
  std::vector<Matrix<Rat>> glob(3, Matrix<Rat>(n, dim));
  auto place = [&](std::size_t o, std::size_t m, const std::vector<Matrix<Rat>>& blk) {
    // local basis index -> global
    std::vector<std::size_t> g(m * m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) g[i] = o + i;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j) g[sl_offdiag_index(m, i, j)] = sl_offdiag_index(n, o + i, o + j);
    for (std::size_t t = 0; t < 3; ++t)
      for (std::size_t row = 0; row < m; ++row)
        for (std::size_t l = 0; l < g.size(); ++l) glob[t](o + row, g[l]) = blk[t](row, l);
  };
  std::size_t o = 0;
  if (n % 2 == 1) {
    place(0, 3, sl3_table());
    o = 3;
  }
  for (; o < n; o += 2) place(o, 2, sl2_table());
  std::vector<EpsMatrix> maps;
  for (auto& g : glob) maps.push_back(to_eps(g));
  return make("sl", {{"k", {2}}, {"n", {i64(n)}}}, std::move(maps), n);
}

Certificate cert_sl2(std::size_t k) {
  require(k >= 1, "sl2 certificate needs k >= 1");
  if (k == 1) {
    std::vector<EpsMatrix> maps{to_eps(Matrix<Rat>::identity(3)), to_eps(Matrix<Rat>::identity(3))};
    return make("sl2", {{"k", {1}}}, std::move(maps), 3);
  }
  if (k == 2) {
    Matrix<Rat> p = algebras::sl2_hab_basis(), pit = tensor::inverse(p).transpose();
    auto t = sl2_table();
    std::vector<EpsMatrix> maps{to_eps(t[0] * p), to_eps(t[1] * pit), to_eps(t[2] * pit)};
    return make("sl2", {{"k", {2}}}, std::move(maps), 2);
  }
  const std::size_t H = 0, A = 1, B = 2;
  const long q = static_cast<long>((k - 1) / 2);
  const bool odd = k % 2 == 1;
  EpsRational scale = EpsRational(Rat(1, static_cast<long>(ipow2(k - 1))));
  std::vector<EpsMatrix> maps;
  // g_0 composed with 2^{1-k} I
  maps.push_back(sparse(3, 3, {{H, H, odd ? EpsRational() : scale}, {A, A, odd ? scale : EpsRational()}, {B, B, scale}}));
  // g_1 composed with the projection killing h*
  maps.push_back(sparse(3, 3, {{A, A, one()}, {B, B, odd ? eps_pow(q) : eps_pow(-q - 2)}}));
  for (std::size_t p = 2; p <= k; ++p) {
    long e = p % 2 == 0 ? static_cast<long>(p) : -static_cast<long>(p);
    maps.push_back(sparse(3, 3, {{H, H, one()}, {A, A, eps_pow(e)}}));
  }
  return make("sl2", {{"k", {i64(k)}}}, std::move(maps), 2);
}

}  // namespace subrank::degeneration
