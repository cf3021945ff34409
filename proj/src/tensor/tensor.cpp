#include "subrank/tensor/tensor.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

namespace subrank::tensor {

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ShapeMismatch("shape must have at least one mode");
  strides_.assign(dims_.size(), 1);
  volume_ = 1;
  for (std::size_t m = dims_.size(); m-- > 0;) {
    if (dims_[m] == 0) throw ShapeMismatch("shape dimensions must be positive");
    strides_[m] = volume_;
    if (volume_ > std::numeric_limits<std::uint64_t>::max() / dims_[m])
      throw ShapeMismatch("shape volume overflows 64-bit indexing");
    volume_ *= dims_[m];
  }
}

std::uint64_t Shape::ravel(std::span<const std::size_t> idx) const {
  if (idx.size() != dims_.size()) throw ShapeMismatch("index has wrong number of modes");
  std::uint64_t lin = 0;
  for (std::size_t m = 0; m < idx.size(); ++m) {
    if (idx[m] >= dims_[m])
      throw ShapeMismatch("index " + std::to_string(idx[m]) + " out of range at mode " + std::to_string(m));
    lin += idx[m] * strides_[m];
  }
  return lin;
}

Index Shape::unravel(std::uint64_t lin) const {
  Index idx(dims_.size());
  for (std::size_t m = 0; m < dims_.size(); ++m) idx[m] = (lin / strides_[m]) % dims_[m];
  return idx;
}

std::string Shape::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t m = 0; m < dims_.size(); ++m) os << (m ? "," : "") << dims_[m];
  os << ")";
  return os.str();
}

std::string describe_entry(const Shape& s, std::uint64_t lin) {
  auto idx = s.unravel(lin);
  std::ostringstream os;
  os << "(";
  for (std::size_t m = 0; m < idx.size(); ++m) os << (m ? "," : "") << idx[m];
  os << ")";
  return os.str();
}

RatTensor build_unit(std::size_t order, std::size_t r) {
  if (order < 1 || r < 1) throw InputError("unit tensor needs order >= 1 and r >= 1");
  RatTensor t{Shape(std::vector<std::size_t>(order, r))};
  Index idx(order);
  for (std::size_t i = 0; i < r; ++i) {
    std::fill(idx.begin(), idx.end(), i);
    t.add(idx, Rat(1));
  }
  return t;
}

EpsTensor lift(const RatTensor& t) {
  return t.map_values([](const Rat& r) { return EpsRational(r); });
}

RatTensor eps_limit(const EpsTensor& t) {
  return t.map_values([](const EpsRational& f) { return f.limit(); });
}

namespace {

// Rank of an integer matrix by fraction-free elimination.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  mpz_class prev = 1, t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t flattening_rank(const RatTensor& t, const std::vector<std::size_t>& modes) {
  const Shape& s = t.shape();
  std::vector<bool> in(s.order(), false);
  for (auto m : modes) {
    if (m >= s.order()) throw ShapeMismatch("flattening mode out of range");
    in[m] = true;
  }
  std::size_t count = std::count(in.begin(), in.end(), true);
  if (count == 0 || count == s.order()) throw ShapeMismatch("flattening needs a proper nonempty mode subset");

  std::map<std::uint64_t, std::size_t> row_id, col_id;
  std::vector<std::tuple<std::uint64_t, std::uint64_t, const Rat*>> cells;
  for (const auto& [lin, v] : t.entries()) {
    std::uint64_t rk = 0, ck = 0;
    for (std::size_t m = 0; m < s.order(); ++m) {
      std::size_t c = s.coord(lin, m);
      if (in[m])
        rk = rk * s[m] + c;
      else
        ck = ck * s[m] + c;
    }
    row_id.emplace(rk, 0);
    col_id.emplace(ck, 0);
    cells.emplace_back(rk, ck, &v);
  }
  std::size_t i = 0;
  for (auto& [k, id] : row_id) id = i++;
  i = 0;
  for (auto& [k, id] : col_id) id = i++;
  bool transpose = row_id.size() > col_id.size();
  std::size_t nr = transpose ? col_id.size() : row_id.size();
  std::size_t nc = transpose ? row_id.size() : col_id.size();
  std::vector<std::vector<Rat>> q(nr, std::vector<Rat>(nc));
  for (const auto& [rk, ck, v] : cells) {
    std::size_t a = row_id[rk], b = col_id[ck];
    if (transpose) std::swap(a, b);
    q[a][b] = *v;
  }
  std::vector<std::vector<mpz_class>> z(nr, std::vector<mpz_class>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    mpz_class l = 1;
    for (const auto& x : q[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.q().get_den_mpz_t());
    for (std::size_t c = 0; c < nc; ++c) z[r][c] = q[r][c].num() * (l / q[r][c].den());
  }
  return bareiss_rank(std::move(z));
}

bool is_concise(const RatTensor& t) {
  for (std::size_t m = 0; m < t.order(); ++m)
    if (flattening_rank(t, {m}) != t.shape()[m]) return false;
  return true;
}

std::optional<std::size_t> recognize_unit(const RatTensor& t) {
  if (t.is_zero()) return std::nullopt;
  const Shape& s = t.shape();
  for (std::size_t m = 0; m < s.order(); ++m) {
    std::set<std::size_t> seen;
    for (const auto& [lin, v] : t.entries())
      if (!seen.insert(s.coord(lin, m)).second) return std::nullopt;
  }
  return t.nnz();
}

RatTensor contract(const RatTensor& t, std::size_t mode, const std::vector<Rat>& w) {
  const Shape& s = t.shape();
  if (mode >= s.order() || s.order() < 2) throw ShapeMismatch("cannot contract this mode");
  if (w.size() != s[mode]) throw ShapeMismatch("contraction vector length mismatch");
  std::vector<std::size_t> dims;
  for (std::size_t m = 0; m < s.order(); ++m)
    if (m != mode) dims.push_back(s[m]);
  RatTensor out{Shape(dims)};
  Index j(dims.size());
  for (const auto& [lin, v] : t.entries()) {
    std::size_t c = s.coord(lin, mode);
    if (w[c].is_zero()) continue;
    Index i = s.unravel(lin);
    for (std::size_t m = 0, k = 0; m < i.size(); ++m)
      if (m != mode) j[k++] = i[m];
    out.add(j, v * w[c]);
  }
  return out;
}

}  // namespace subrank::tensor
