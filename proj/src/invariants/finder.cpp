#include <functional>
#include <map>
#include <numeric>

#include "subrank/errors.hpp"
#include "subrank/invariants/invariants.hpp"

namespace subrank::invariants {

using exactnum::Exponent;

Representation tensor_representation(const Shape& s) {
  Representation rep;
  rep.nvars = static_cast<std::size_t>(s.volume());
  rep.blocks = s.dims();
  std::size_t wlen = std::accumulate(s.dims().begin(), s.dims().end(), std::size_t{0});
  for (std::uint64_t lin = 0; lin < s.volume(); ++lin) {
    auto idx = s.unravel(lin);
    std::vector<int> w(wlen, 0);
    std::size_t off = 0;
    for (std::size_t m = 0; m < s.order(); ++m) {
      w[off + idx[m]] = 1;
      off += s[m];
    }
    rep.weights.push_back(std::move(w));
  }
  for (std::size_t m = 0; m < s.order(); ++m)
    for (std::size_t a = 0; a + 1 < s[m]; ++a) {
      std::vector<std::tuple<std::size_t, std::size_t, Rat>> op;
      for (std::uint64_t lin = 0; lin < s.volume(); ++lin)
        if (s.coord(lin, m) == a) op.emplace_back(lin, lin + s.stride(m), Rat(1));
      rep.raising.push_back(std::move(op));
    }
  return rep;
}

std::size_t TernaryCubic::index(unsigned a, unsigned b, unsigned c) {
  if (a > 3 || a + b + c != 3) throw InputError("cubic monomial must have degree 3");
  static const std::size_t start[4] = {6, 3, 1, 0};
  return start[a] + (3 - a - b);
}

namespace {

std::vector<std::array<unsigned, 3>> cubic_monomials() {
  std::vector<std::array<unsigned, 3>> m;
  for (int a = 3; a >= 0; --a)
    for (int b = 3 - a; b >= 0; --b) m.push_back({unsigned(a), unsigned(b), unsigned(3 - a - b)});
  return m;
}

}  // namespace

Representation ternary_cubic_representation() {
  auto mons = cubic_monomials();
  Representation rep;
  rep.nvars = mons.size();
  rep.blocks = {3};
  for (const auto& m : mons) rep.weights.push_back({int(m[0]), int(m[1]), int(m[2])});
  auto find = [&](std::array<unsigned, 3> m) {
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (mons[i] == m) return i;
    throw InputError("bad cubic monomial");
  };
  // x_i d/dx_j for (i, j) = (0, 1), (1, 2)
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}) {
    std::vector<std::tuple<std::size_t, std::size_t, Rat>> op;
    for (std::size_t w = 0; w < mons.size(); ++w) {
      auto a = mons[w];
      if (a[j] == 0) continue;
      auto b = a;
      --b[j];
      ++b[i];
      op.emplace_back(find(b), w, Rat(static_cast<long>(a[j])));
    }
    rep.raising.push_back(std::move(op));
  }
  return rep;
}

MPoly apply_derivation(const std::vector<std::tuple<std::size_t, std::size_t, Rat>>& op, const MPoly& f) {
  MPoly out(f.nvars());
  for (const auto& [e, c] : f.terms())
    for (const auto& [v, w, x] : op) {
      if (e[v] == 0) continue;
      Exponent n = e;
      --n[v];
      ++n[w];
      out.add_term(n, c * x * Rat(static_cast<long>(e[v])));
    }
  return out;
}

namespace {

using SparseRow = std::map<std::size_t, Rat>;

// Incremental row echelon form over Q on sparse rows.
class Echelon {
 public:
  void insert(SparseRow row) {
    while (!row.empty()) {
      auto [c, v] = *row.begin();
      auto it = pivots_.find(c);
      if (it == pivots_.end()) {
        Rat inv = v.inverse();
        for (auto& [j, x] : row) x *= inv;
        pivots_.emplace(c, std::move(row));
        return;
      }
      Rat f = v;
      for (const auto& [j, x] : it->second) {
        auto [pos, fresh] = row.emplace(j, Rat(0));
        pos->second -= f * x;
        if (pos->second.is_zero()) row.erase(pos);
      }
    }
  }
  // Kernel basis as dense vectors over ncols columns.
  std::vector<std::vector<Rat>> kernel(std::size_t ncols) const {
    std::vector<std::vector<Rat>> out;
    for (std::size_t f = 0; f < ncols; ++f) {
      if (pivots_.count(f)) continue;
      std::vector<Rat> x(ncols);
      x[f] = Rat(1);
      for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        Rat s;
        for (const auto& [j, v] : it->second)
          if (j != it->first && !x[j].is_zero()) s += v * x[j];
        x[it->first] = -s;
      }
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

MPoly normalize(MPoly p) {
  if (p.is_zero()) return p;
  mpz_class l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  MPoly q = p * Rat(mpq_class(l, 1));
  mpz_class g = 0;
  for (const auto& [e, c] : q.terms()) {
    mpz_class n = c.num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  q = q * Rat(mpq_class(1, g));
  if (q.terms().begin()->second.sign() < 0) q = q * Rat(-1);
  return q;
}

}  // namespace

std::vector<MPoly> invariant_kernel(const Representation& rep, std::size_t degree, std::size_t budget) {
  if (degree == 0) return {MPoly::constant(rep.nvars, Rat(1))};
  // target weight per coordinate
  std::vector<int> target;
  {
    std::size_t off = 0;
    const auto& w0 = rep.weights.at(0);
    for (std::size_t b : rep.blocks) {
      int total = 0;
      for (std::size_t i = 0; i < b; ++i) total += w0[off + i];
      std::size_t need = degree * static_cast<std::size_t>(total);
      if (need % b != 0)
        throw NotWeightAdmissible("degree " + std::to_string(degree) + " has no weight-zero monomials");
      for (std::size_t i = 0; i < b; ++i) target.push_back(static_cast<int>(need / b));
      off += b;
    }
  }
  // weight-zero monomials, variables in nondecreasing order
  std::vector<Exponent> mons;
  std::map<Exponent, std::size_t> col;
  Exponent cur(rep.nvars, 0);
  std::vector<int> wt(target.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
    if (left == 0) {
      if (wt == target) {
        if (mons.size() >= budget) throw BudgetExceeded("more than " + std::to_string(budget) + " weight-zero monomials");
        col.emplace(cur, mons.size());
        mons.push_back(cur);
      }
      return;
    }
    for (std::size_t v = start; v < rep.nvars; ++v) {
      const auto& w = rep.weights[v];
      bool ok = true;
      for (std::size_t i = 0; i < w.size() && ok; ++i) ok = wt[i] + w[i] <= target[i];
      if (!ok) continue;
      for (std::size_t i = 0; i < w.size(); ++i) wt[i] += w[i];
      ++cur[v];
      rec(v, left - 1);
      --cur[v];
      for (std::size_t i = 0; i < w.size(); ++i) wt[i] -= w[i];
    }
  };
  rec(0, degree);

  Echelon ech;
  for (const auto& op : rep.raising) {
    std::map<Exponent, SparseRow> rows;
    for (std::size_t j = 0; j < mons.size(); ++j) {
      const auto& e = mons[j];
      for (const auto& [v, w, x] : op) {
        if (e[v] == 0) continue;
        Exponent n = e;
        --n[v];
        ++n[w];
        auto& r = rows[n][j];
        r += x * Rat(static_cast<long>(e[v]));
      }
    }
    for (auto& [n, r] : rows) {
      for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
      if (!r.empty()) ech.insert(std::move(r));
    }
  }
  std::vector<MPoly> out;
  for (const auto& x : ech.kernel(mons.size())) {
    MPoly p(rep.nvars);
    for (std::size_t j = 0; j < mons.size(); ++j)
      if (!x[j].is_zero()) p.add_term(mons[j], x[j]);
    out.push_back(normalize(std::move(p)));
  }
  return out;
}

InvariantBasis invariant_space(const Shape& s, std::size_t degree, std::size_t budget) {
  InvariantBasis b;
  b.shape = s;
  b.degree = degree;
  b.basis = invariant_kernel(tensor_representation(s), degree, budget);
  return b;
}

std::vector<Rat> dense_entries(const RatTensor& t) {
  std::vector<Rat> v(static_cast<std::size_t>(t.shape().volume()));
  for (const auto& [lin, x] : t.entries()) v[lin] = x;
  return v;
}

Rat evaluate(const MPoly& f, const RatTensor& t) { return exactnum::mpoly_eval(f, dense_entries(t)); }

}  // namespace subrank::invariants
