#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subrank/errors.hpp"
#include "subrank/exactnum/eps_rational.hpp"
#include "subrank/exactnum/rat.hpp"
#include "subrank/tensor/matrix.hpp"

namespace subrank::tensor {

using exactnum::EpsRational;
using exactnum::Rat;

using Index = std::vector<std::size_t>;

class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<std::size_t> dims);
  Shape(std::initializer_list<std::size_t> dims) : Shape(std::vector<std::size_t>(dims)) {}

  std::size_t order() const { return dims_.size(); }
  std::size_t operator[](std::size_t m) const { return dims_[m]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::uint64_t volume() const { return volume_; }
  std::uint64_t stride(std::size_t m) const { return strides_[m]; }

  std::uint64_t ravel(std::span<const std::size_t> idx) const;
  Index unravel(std::uint64_t lin) const;
  std::size_t coord(std::uint64_t lin, std::size_t m) const { return (lin / strides_[m]) % dims_[m]; }

  friend bool operator==(const Shape& a, const Shape& b) { return a.dims_ == b.dims_; }
  std::string str() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t volume_ = 0;
};

// Sparse tensor; entries keyed by row-major linear index, iterated in that order.
template <class R>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape) : shape_(std::move(shape)) {}

  const Shape& shape() const { return shape_; }
  std::size_t order() const { return shape_.order(); }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::map<std::uint64_t, R>& entries() const { return entries_; }

  void add(std::span<const std::size_t> idx, const R& v) { add_linear(shape_.ravel(idx), v); }
  void add(std::initializer_list<std::size_t> idx, const R& v) {
    add(std::span<const std::size_t>(idx.begin(), idx.size()), v);
  }
  void add_linear(std::uint64_t lin, const R& v) {
    if (is_zero_value(v)) return;
    auto [it, inserted] = entries_.emplace(lin, v);
    if (!inserted) {
      it->second += v;
      if (is_zero_value(it->second)) entries_.erase(it);
    }
  }
  void set(std::span<const std::size_t> idx, const R& v) {
    auto lin = shape_.ravel(idx);
    if (is_zero_value(v))
      entries_.erase(lin);
    else
      entries_[lin] = v;
  }
  R at(std::span<const std::size_t> idx) const {
    auto it = entries_.find(shape_.ravel(idx));
    return it == entries_.end() ? R(0) : it->second;
  }
  R at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  Index index_of(std::uint64_t lin) const { return shape_.unravel(lin); }

  template <class F>
  auto map_values(F f) const -> Tensor<decltype(f(std::declval<const R&>()))> {
    Tensor<decltype(f(std::declval<const R&>()))> out(shape_);
    for (const auto& [lin, v] : entries_) out.add_linear(lin, f(v));
    return out;
  }

  Tensor scaled(const R& s) const {
    Tensor out(shape_);
    for (const auto& [lin, v] : entries_) out.add_linear(lin, v * s);
    return out;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  static bool is_zero_value(const R& v) {
    using exactnum::is_zero;
    return is_zero(v);
  }
  Shape shape_;
  std::map<std::uint64_t, R> entries_;
};

using RatTensor = Tensor<Rat>;
using EpsTensor = Tensor<EpsRational>;

template <class R>
struct ModeMap {
  std::size_t mode = 0;
  Matrix<R> matrix;

  friend bool operator==(const ModeMap&, const ModeMap&) = default;
};

// (X_0 (x) ... (x) X_m) T for one map per mode.
template <class R>
Tensor<R> apply_mode_map(const Tensor<R>& t, std::size_t mode, const Matrix<R>& x) {
  const Shape& s = t.shape();
  if (mode >= s.order()) throw ShapeMismatch("mode index out of range");
  if (x.cols() != s[mode])
    throw ShapeMismatch("mode " + std::to_string(mode) + ": map has " + std::to_string(x.cols()) +
                        " columns, tensor dimension is " + std::to_string(s[mode]));
  std::vector<std::size_t> dims = s.dims();
  dims[mode] = x.rows();
  Shape out_shape(dims);
  Tensor<R> out(out_shape);
  if (x.rows() == 0) return out;
  // nonzero rows per column
  std::vector<std::vector<std::pair<std::size_t, const R*>>> col(x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      using exactnum::is_zero;
      if (!is_zero(x(i, j))) col[j].emplace_back(i, &x(i, j));
    }
  std::uint64_t in_stride = s.stride(mode), out_stride = out_shape.stride(mode);
  for (const auto& [lin, v] : t.entries()) {
    std::size_t c = s.coord(lin, mode);
    if (col[c].empty()) continue;
    // rewrite linear index for the new shape
    std::uint64_t hi = lin / (in_stride * s[mode]);
    std::uint64_t lo = lin % in_stride;
    std::uint64_t base = hi * (out_stride * x.rows()) + lo;
    for (const auto& [r, a] : col[c]) out.add_linear(base + r * out_stride, (*a) * v);
  }
  return out;
}

template <class R>
Tensor<R> apply_mode_maps(const Tensor<R>& t, const std::vector<Matrix<R>>& maps) {
  if (maps.size() != t.order())
    throw ShapeMismatch("expected " + std::to_string(t.order()) + " mode maps, got " +
                        std::to_string(maps.size()));
  for (std::size_t m = 0; m < maps.size(); ++m)
    if (maps[m].cols() != t.shape()[m])
      throw ShapeMismatch("mode " + std::to_string(m) + ": map has " + std::to_string(maps[m].cols()) +
                          " columns, tensor dimension is " + std::to_string(t.shape()[m]));
  // apply shrinking maps first to keep intermediates small
  std::vector<std::size_t> order(maps.size());
  for (std::size_t m = 0; m < order.size(); ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ra = static_cast<long>(maps[a].rows()) - static_cast<long>(maps[a].cols());
    auto rb = static_cast<long>(maps[b].rows()) - static_cast<long>(maps[b].cols());
    return ra < rb;
  });
  Tensor<R> cur = t;
  for (auto m : order) cur = apply_mode_map(cur, m, maps[m]);
  return cur;
}

template <class R>
Tensor<R> apply_mode_maps(const Tensor<R>& t, const std::vector<ModeMap<R>>& maps) {
  std::vector<Matrix<R>> ms(t.order());
  std::vector<bool> seen(t.order(), false);
  for (const auto& mm : maps) {
    if (mm.mode >= t.order() || seen[mm.mode]) throw ShapeMismatch("mode maps must cover each mode once");
    seen[mm.mode] = true;
    ms[mm.mode] = mm.matrix;
  }
  if (maps.size() != t.order()) throw ShapeMismatch("one mode map per mode required");
  return apply_mode_maps(t, ms);
}

template <class R>
Tensor<R> direct_sum(const Tensor<R>& a, const Tensor<R>& b) {
  if (a.order() != b.order()) throw ShapeMismatch("direct sum of tensors of different orders");
  std::vector<std::size_t> dims(a.order());
  for (std::size_t m = 0; m < dims.size(); ++m) dims[m] = a.shape()[m] + b.shape()[m];
  Tensor<R> out{Shape(dims)};
  for (const auto& [lin, v] : a.entries()) out.add(a.index_of(lin), v);
  for (const auto& [lin, v] : b.entries()) {
    Index idx = b.index_of(lin);
    for (std::size_t m = 0; m < idx.size(); ++m) idx[m] += a.shape()[m];
    out.add(idx, v);
  }
  return out;
}

// Permute modes: output mode m is input mode perm[m].
template <class R>
Tensor<R> permute_modes(const Tensor<R>& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.order()) throw ShapeMismatch("permutation length mismatch");
  std::vector<std::size_t> dims(perm.size());
  for (std::size_t m = 0; m < perm.size(); ++m) dims[m] = t.shape()[perm[m]];
  Tensor<R> out{Shape(dims)};
  Index j(perm.size());
  for (const auto& [lin, v] : t.entries()) {
    Index i = t.index_of(lin);
    for (std::size_t m = 0; m < perm.size(); ++m) j[m] = i[perm[m]];
    out.add(j, v);
  }
  return out;
}

RatTensor build_unit(std::size_t order, std::size_t r);
EpsTensor lift(const RatTensor& t);
RatTensor eps_limit(const EpsTensor& t);  // entrywise; throws PoleAtZero

std::size_t flattening_rank(const RatTensor& t, const std::vector<std::size_t>& modes);
bool is_concise(const RatTensor& t);
std::optional<std::size_t> recognize_unit(const RatTensor& t);

// Contract mode `mode` against the covector w (length dims[mode]); drops that mode.
RatTensor contract(const RatTensor& t, std::size_t mode, const std::vector<Rat>& w);

std::string describe_entry(const Shape& s, std::uint64_t lin);

}  // namespace subrank::tensor
