#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subrank/errors.hpp"
#include "subrank/exactnum/eps_rational.hpp"
#include "subrank/exactnum/rat.hpp"
#include "subrank/tensor/matrix.hpp"
#include "subrank/tensor/tensor.hpp"

namespace subrank::algebras {

using exactnum::EpsRational;
using exactnum::Rat;
using tensor::Matrix;
using tensor::Shape;
using tensor::Tensor;

// Algebra by structure constants: e_i * e_j = sum_h c(i,j,h) e_h.
template <class R>
struct AlgebraT {
  std::string name;
  std::size_t dim = 0;
  std::vector<R> constants;  // dim^3, index (i*dim + j)*dim + h
  std::optional<std::vector<R>> unit;  // coordinates of 1_A if unital
  bool associative = false;
  bool commutative = false;
  bool lie = false;
  std::vector<std::string> basis_labels;

  AlgebraT() = default;
  AlgebraT(std::string n, std::size_t d) : name(std::move(n)), dim(d), constants(d * d * d) {
    for (std::size_t i = 0; i < d; ++i) basis_labels.push_back("e" + std::to_string(i));
  }

  R& c(std::size_t i, std::size_t j, std::size_t h) { return constants[(i * dim + j) * dim + h]; }
  const R& c(std::size_t i, std::size_t j, std::size_t h) const { return constants[(i * dim + j) * dim + h]; }

  // Index of the unit when it is a basis vector.
  std::optional<std::size_t> unit_index() const {
    if (!unit) return std::nullopt;
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < dim; ++i) {
      using exactnum::is_zero;
      if (is_zero((*unit)[i])) continue;
      if (found || !((*unit)[i] == R(1))) return std::nullopt;
      found = i;
    }
    return found;
  }

  std::vector<R> multiply(const std::vector<R>& u, const std::vector<R>& v) const {
    using exactnum::is_zero;
    std::vector<R> w(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (is_zero(u[i])) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (is_zero(v[j])) continue;
        R s = u[i] * v[j];
        for (std::size_t h = 0; h < dim; ++h)
          if (!is_zero(c(i, j, h))) w[h] += s * c(i, j, h);
      }
    }
    return w;
  }
};

using Algebra = AlgebraT<Rat>;
using AlgebraFamily = AlgebraT<EpsRational>;

// k-fold structure tensor, mode 0 = output, modes 1..k = inputs.
// Left-nested: T^(k)(a1,...,ak) = T^(k-1)(a1 a2, a3, ..., ak).
template <class R>
Tensor<R> structure_tensor(const AlgebraT<R>& a, std::size_t k) {
  using exactnum::is_zero;
  if (k < 1) throw InputError("structure tensor needs k >= 1");
  const std::size_t n = a.dim;
  Tensor<R> cur{Shape({n, n})};
  for (std::size_t i = 0; i < n; ++i) cur.add({i, i}, R(1));
  if (k == 1) return cur;

  // products landing on g: (i1, i2, c)
  struct Term {
    std::size_t i1, i2;
    R c;
  };
  std::vector<std::vector<Term>> by_out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t g = 0; g < n; ++g)
        if (!is_zero(a.c(i, j, g))) by_out[g].push_back({i, j, a.c(i, j, g)});

  for (std::size_t m = 2; m <= k; ++m) {
    Tensor<R> next{Shape(std::vector<std::size_t>(m + 1, n))};
    tensor::Index idx(m + 1);
    for (const auto& [lin, v] : cur.entries()) {
      tensor::Index old = cur.index_of(lin);
      // old = (h, g, i3, ..., im)
      idx[0] = old[0];
      for (std::size_t t = 2; t < old.size(); ++t) idx[t + 1] = old[t];
      for (const auto& term : by_out[old[1]]) {
        idx[1] = term.i1;
        idx[2] = term.i2;
        next.add(idx, v * term.c);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

struct ValidationReport {
  bool ok = true;
  std::string message;
};

template <class R>
ValidationReport validate(const AlgebraT<R>& a) {
  using exactnum::is_zero;
  const std::size_t n = a.dim;
  auto basis = [n](std::size_t i) {
    std::vector<R> v(n);
    v[i] = R(1);
    return v;
  };
  auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
  auto triple = [](const char* what, std::size_t i, std::size_t j, std::size_t h) {
    return std::string(what) + " fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(h) + ")";
  };
  if (a.constants.size() != n * n * n) return fail("constant table has wrong size");
  if (a.unit) {
    if (a.unit->size() != n) return fail("unit vector has wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      auto e = basis(i);
      if (a.multiply(*a.unit, e) != e) return fail("left unit fails at basis " + std::to_string(i));
      if (a.multiply(e, *a.unit) != e) return fail("right unit fails at basis " + std::to_string(i));
    }
  }
  if (a.commutative)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t h = 0; h < n; ++h)
          if (!(a.c(i, j, h) == a.c(j, i, h))) return fail(triple("commutativity", i, j, h));
  if (a.associative)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto ij = a.multiply(basis(i), basis(j));
        for (std::size_t h = 0; h < n; ++h) {
          auto jh = a.multiply(basis(j), basis(h));
          if (a.multiply(ij, basis(h)) != a.multiply(basis(i), jh)) return fail(triple("associativity", i, j, h));
        }
      }
  if (a.lie) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t h = 0; h < n; ++h)
          if (!(a.c(i, j, h) == -a.c(j, i, h))) return fail(triple("antisymmetry", i, j, h));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t h = j + 1; h < n; ++h) {
          auto x = basis(i), y = basis(j), z = basis(h);
          auto s1 = a.multiply(x, a.multiply(y, z));
          auto s2 = a.multiply(y, a.multiply(z, x));
          auto s3 = a.multiply(z, a.multiply(x, y));
          for (std::size_t t = 0; t < n; ++t)
            if (!is_zero(s1[t] + s2[t] + s3[t])) return fail(triple("Jacobi identity", i, j, h));
        }
  }
  return {};
}

// Constants in a new basis; column j of p is new basis vector j in old coordinates.
template <class R>
AlgebraT<R> change_basis(const AlgebraT<R>& a, const Matrix<R>& p) {
  using exactnum::is_zero;
  const std::size_t n = a.dim;
  if (p.rows() != n || p.cols() != n) throw ShapeMismatch("change of basis must be square of size dim");
  Matrix<R> pinv = tensor::inverse(p);
  AlgebraT<R> b = a;
  std::fill(b.constants.begin(), b.constants.end(), R(0));
  auto col = [&](std::size_t j) {
    std::vector<R> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = p(i, j);
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto w = a.multiply(col(i), col(j));
      for (std::size_t h = 0; h < n; ++h) {
        R s(0);
        for (std::size_t t = 0; t < n; ++t)
          if (!is_zero(w[t]) && !is_zero(pinv(h, t))) s += pinv(h, t) * w[t];
        b.c(i, j, h) = s;
      }
    }
  if (a.unit) {
    std::vector<R> u(n);
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t t = 0; t < n; ++t) u[h] += pinv(h, t) * (*a.unit)[t];
    b.unit = u;
  }
  return b;
}

// Builders. Basis orders: R_d: 1,x,...; N_n: 1,x1..xn; Q_n: 1,x1..xn,y;
// T_n: e_ij (i<=j) row-major; Mat_n: e_ij row-major; sl_n: h1..h_{n-1}, then e_ij (i!=j) row-major.
Algebra build_truncated_poly(std::size_t d);
Algebra build_null(std::size_t n);
Algebra build_apolar_quadric(std::size_t n);
Algebra build_triangular(std::size_t n);
Algebra build_matrix(std::size_t n);
Algebra build_sl(std::size_t n);

// sl_2 in the basis h, a = e12 + e21, b = e12 - e21.
Algebra build_sl2_hab();
// Columns h, a, b in the standard (h1, e12, e21) coordinates.
Matrix<Rat> sl2_hab_basis();

// Index of e_ij in the triangular / sl_n bases (0-based i, j).
std::size_t triangular_index(std::size_t n, std::size_t i, std::size_t j);
std::size_t sl_offdiag_index(std::size_t n, std::size_t i, std::size_t j);

// Rectangular iterated matrix multiplication tensor for dims n0..nk.
tensor::RatTensor build_mamu(const std::vector<std::size_t>& dims);

struct SocleInfo {
  std::size_t s = 0;
  std::size_t r = 0;  // dim m^s
  std::vector<std::vector<Rat>> top;  // basis of m^s
};
// Requires basis {1} + basis of a nilpotent ideal m, with 1 at index 0.
SocleInfo socle_degree(const Algebra& a);

Algebra family_limit(const AlgebraFamily& f);
AlgebraFamily constant_family(const Algebra& a);
// C[x]/prod_{i<d}(x - i eps) in the basis 1, x, ..., x^{d-1}.
AlgebraFamily vandermonde_family(std::size_t d);

}  // namespace subrank::algebras
