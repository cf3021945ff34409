#include "subrank/algebras/algebra.hpp"

namespace subrank::algebras {

namespace {

std::vector<Rat> basis_vector(std::size_t n, std::size_t i) {
  std::vector<Rat> v(n);
  v[i] = Rat(1);
  return v;
}

void require_positive(std::size_t n, const char* what) {
  if (n < 1) throw InputError(std::string(what) + " needs a positive parameter");
}

}  // namespace

Algebra build_truncated_poly(std::size_t d) {
  require_positive(d, "R_d");
  Algebra a("R" + std::to_string(d), d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; i + j < d; ++j) a.c(i, j, i + j) = Rat(1);
  a.unit = basis_vector(d, 0);
  a.associative = a.commutative = true;
  a.basis_labels[0] = "1";
  for (std::size_t i = 1; i < d; ++i) a.basis_labels[i] = i == 1 ? "x" : "x^" + std::to_string(i);
  return a;
}

Algebra build_null(std::size_t n) {
  require_positive(n, "N_n");
  Algebra a("N" + std::to_string(n), n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    a.c(0, i, i) = Rat(1);
    a.c(i, 0, i) = Rat(1);
  }
  a.unit = basis_vector(n + 1, 0);
  a.associative = a.commutative = true;
  a.basis_labels[0] = "1";
  for (std::size_t i = 1; i <= n; ++i) a.basis_labels[i] = "x" + std::to_string(i);
  return a;
}

Algebra build_apolar_quadric(std::size_t n) {
  require_positive(n, "Q_n");
  Algebra a("Q" + std::to_string(n), n + 2);
  for (std::size_t i = 0; i < n + 2; ++i) {
    a.c(0, i, i) = Rat(1);
    a.c(i, 0, i) = Rat(1);
  }
  for (std::size_t i = 1; i <= n; ++i) a.c(i, i, n + 1) = Rat(1);
  a.unit = basis_vector(n + 2, 0);
  a.associative = a.commutative = true;
  a.basis_labels[0] = "1";
  for (std::size_t i = 1; i <= n; ++i) a.basis_labels[i] = "x" + std::to_string(i);
  a.basis_labels[n + 1] = "y";
  return a;
}

std::size_t triangular_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j || j >= n) throw InputError("triangular index out of range");
  // rows 0..i-1 contribute n, n-1, ..., n-i+1 entries
  return i * n - i * (i - 1) / 2 + (j - i);
}

Algebra build_triangular(std::size_t n) {
  require_positive(n, "T_n");
  std::size_t dim = n * (n + 1) / 2;
  Algebra a("T" + std::to_string(n), dim);
  std::vector<Rat> unit(dim);
  for (std::size_t i = 0; i < n; ++i) {
    unit[triangular_index(n, i, i)] = Rat(1);
    for (std::size_t j = i; j < n; ++j) {
      a.basis_labels[triangular_index(n, i, j)] = "e" + std::to_string(i + 1) + std::to_string(j + 1);
      for (std::size_t l = j; l < n; ++l)
        a.c(triangular_index(n, i, j), triangular_index(n, j, l), triangular_index(n, i, l)) = Rat(1);
    }
  }
  a.unit = unit;
  a.associative = true;
  return a;
}

Algebra build_matrix(std::size_t n) {
  require_positive(n, "Mat_n");
  Algebra a("Mat" + std::to_string(n), n * n);
  std::vector<Rat> unit(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = Rat(1);
    for (std::size_t j = 0; j < n; ++j) {
      a.basis_labels[i * n + j] = "e" + std::to_string(i + 1) + std::to_string(j + 1);
      for (std::size_t l = 0; l < n; ++l) a.c(i * n + j, j * n + l, i * n + l) = Rat(1);
    }
  }
  a.unit = unit;
  a.associative = true;
  a.commutative = n == 1;
  return a;
}

std::size_t sl_offdiag_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i == j || i >= n || j >= n) throw InputError("sl index out of range");
  return (n - 1) + i * (n - 1) + (j < i ? j : j - 1);
}

Algebra build_sl(std::size_t n) {
  if (n < 2) throw InputError("sl_n needs n >= 2");
  const std::size_t dim = n * n - 1;
  // basis elements as n x n matrices
  std::vector<Matrix<Rat>> mats(dim, Matrix<Rat>(n, n));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    mats[i](i, i) = Rat(1);
    mats[i](i + 1, i + 1) = Rat(-1);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) mats[sl_offdiag_index(n, i, j)](i, j) = Rat(1);

  Algebra a("sl" + std::to_string(n), dim);
  for (std::size_t i = 0; i + 1 < n; ++i) a.basis_labels[i] = "h" + std::to_string(i + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) a.basis_labels[sl_offdiag_index(n, i, j)] = "e" + std::to_string(i + 1) + std::to_string(j + 1);

  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      Matrix<Rat> br = mats[x] * mats[y];
      Matrix<Rat> yx = mats[y] * mats[x];
      Rat acc(0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Rat v = br(i, j) - yx(i, j);
          if (i == j) {
            // diagonal sum_i c_i h_i has entries c_i - c_{i-1}
            if (i + 1 < n) {
              acc += v;
              a.c(x, y, i) = acc;
            }
          } else if (!v.is_zero()) {
            a.c(x, y, sl_offdiag_index(n, i, j)) = v;
          }
        }
    }
  a.lie = true;
  return a;
}

Matrix<Rat> sl2_hab_basis() {
  Matrix<Rat> p(3, 3);
  p(0, 0) = Rat(1);
  p(1, 1) = Rat(1);
  p(2, 1) = Rat(1);
  p(1, 2) = Rat(1);
  p(2, 2) = Rat(-1);
  return p;
}

Algebra build_sl2_hab() {
  Algebra a = change_basis(build_sl(2), sl2_hab_basis());
  a.name = "sl2";
  a.basis_labels = {"h", "a", "b"};
  return a;
}

tensor::RatTensor build_mamu(const std::vector<std::size_t>& dims) {
  if (dims.size() < 2) throw InputError("MaMu needs at least two dimensions");
  for (auto d : dims) require_positive(d, "MaMu");
  const std::size_t k = dims.size() - 1;
  std::vector<std::size_t> shape(k + 1);
  shape[0] = dims[0] * dims[k];
  for (std::size_t j = 1; j <= k; ++j) shape[j] = dims[j - 1] * dims[j];
  tensor::RatTensor t{Shape(shape)};
  std::vector<std::size_t> i(k + 1, 0);
  tensor::Index idx(k + 1);
  while (true) {
    idx[0] = i[0] * dims[k] + i[k];
    for (std::size_t j = 1; j <= k; ++j) idx[j] = i[j - 1] * dims[j] + i[j];
    t.add(idx, Rat(1));
    std::size_t p = k + 1;
    while (p > 0 && ++i[p - 1] == dims[p - 1]) i[--p] = 0;
    if (p == 0) break;
  }
  return t;
}

SocleInfo socle_degree(const Algebra& a) {
  const std::size_t n = a.dim;
  if (a.unit_index() != std::optional<std::size_t>(0))
    throw NotLocalForm(a.name + ": basis vector 0 must be the unit");
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (!a.c(i, j, 0).is_zero())
        throw NotLocalForm(a.name + ": span of basis 1.. is not an ideal without unit component");

  // m^t as a row-reduced spanning set
  std::vector<std::vector<Rat>> cur;
  for (std::size_t i = 1; i < n; ++i) cur.push_back(basis_vector(n, i));
  SocleInfo info;
  if (cur.empty()) return info;
  for (std::size_t t = 1; t <= n; ++t) {
    info.s = t;
    info.r = cur.size();
    info.top = cur;
    std::vector<std::vector<Rat>> prods;
    for (const auto& u : cur)
      for (std::size_t j = 1; j < n; ++j) prods.push_back(a.multiply(u, basis_vector(n, j)));
    Matrix<Rat> m(prods.size(), n);
    for (std::size_t r = 0; r < prods.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = prods[r][c];
    auto piv = tensor::rref(m);
    if (piv.empty()) return info;
    cur.clear();
    for (std::size_t r = 0; r < piv.size(); ++r) {
      std::vector<Rat> row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = m(r, c);
      cur.push_back(std::move(row));
    }
  }
  throw NotLocalForm(a.name + ": maximal ideal is not nilpotent");
}

Algebra family_limit(const AlgebraFamily& f) {
  Algebra a(f.name, f.dim);
  for (std::size_t i = 0; i < f.constants.size(); ++i) a.constants[i] = f.constants[i].limit();
  if (f.unit) {
    std::vector<Rat> u(f.dim);
    for (std::size_t i = 0; i < f.dim; ++i) u[i] = (*f.unit)[i].limit();
    a.unit = u;
  }
  a.associative = f.associative;
  a.commutative = f.commutative;
  a.lie = f.lie;
  a.basis_labels = f.basis_labels;
  return a;
}

AlgebraFamily constant_family(const Algebra& a) {
  AlgebraFamily f(a.name, a.dim);
  for (std::size_t i = 0; i < a.constants.size(); ++i) f.constants[i] = EpsRational(a.constants[i]);
  if (a.unit) {
    std::vector<EpsRational> u(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) u[i] = EpsRational((*a.unit)[i]);
    f.unit = u;
  }
  f.associative = a.associative;
  f.commutative = a.commutative;
  f.lie = a.lie;
  f.basis_labels = a.basis_labels;
  return f;
}

AlgebraFamily vandermonde_family(std::size_t d) {
  require_positive(d, "Vandermonde family");
  using exactnum::Poly;
  // p(x) = prod_{i<d} (x - i eps), coefficients in Q[eps]
  std::vector<EpsRational> p{EpsRational(1)};
  for (std::size_t i = 0; i < d; ++i) {
    EpsRational root = EpsRational::monomial(Rat(static_cast<long>(i)), 1);
    std::vector<EpsRational> q(p.size() + 1);
    for (std::size_t m = 0; m < p.size(); ++m) {
      q[m + 1] += p[m];
      q[m] -= root * p[m];
    }
    p = std::move(q);
  }
  // x^t reduced mod p for t < 2d - 1
  std::vector<std::vector<EpsRational>> pw;
  std::vector<EpsRational> cur(d);
  cur[0] = EpsRational(1);
  for (std::size_t t = 0; t + 1 < 2 * d; ++t) {
    pw.push_back(cur);
    std::vector<EpsRational> nxt(d);
    EpsRational top = cur[d - 1];
    for (std::size_t m = d - 1; m > 0; --m) nxt[m] = cur[m - 1];
    // x^d = -sum_{m<d} p_m x^m
    if (!top.is_zero())
      for (std::size_t m = 0; m < d; ++m) nxt[m] -= top * p[m];
    cur = std::move(nxt);
  }
  AlgebraFamily f("V" + std::to_string(d), d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t h = 0; h < d; ++h) f.c(i, j, h) = pw[i + j][h];
  std::vector<EpsRational> u(d);
  u[0] = EpsRational(1);
  f.unit = u;
  f.associative = f.commutative = true;
  f.basis_labels = build_truncated_poly(d).basis_labels;
  return f;
}

}  // namespace subrank::algebras
