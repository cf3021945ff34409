#include "subrank/cli/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "subrank/bounds/bounds.hpp"
#include "subrank/degeneration/checks.hpp"
#include "subrank/degeneration/families.hpp"
#include "subrank/errors.hpp"
#include "subrank/invariants/invariants.hpp"
#include "subrank/rng.hpp"

namespace subrank::cli {

using exactnum::Rat;
using tensor::RatTensor;
using tensor::Shape;

namespace {

std::size_t family_rank(const std::string& f) {
  const auto& tags = degeneration::family_tags();
  return static_cast<std::size_t>(std::find(tags.begin(), tags.end(), f) - tags.begin());
}

// e0^4 + e1^4 + (e0+e1)^3 (x) last, with last = e0+e1 or e0-e1; border rank 3.
RatTensor border_rank_three(bool minus) {
  RatTensor w(Shape({2, 2, 2, 2}));
  w.add({0, 0, 0, 0}, Rat(1));
  w.add({1, 1, 1, 1}, Rat(1));
  for (std::uint64_t l = 0; l < 16; ++l) w.add_linear(l, Rat(minus && w.shape().coord(l, 3) == 1 ? -1 : 1));
  return w;
}

struct SeparatorSetup {
  std::vector<std::string> evaluators;
  std::size_t target = 0;
  RatTensor witness;
  std::size_t witness_border_rank = 0;
};

std::optional<SeparatorSetup> separator_setup(const RowSpec& s) {
  const bool trd24 = (s.family == "trd" && s.n == 4 && s.k == 2) || (s.family == "cw" && s.n == 2 && s.k == 2);
  const bool trd33 = (s.family == "trd" && s.n == 3 && s.k == 3) || (s.family == "cw" && s.n == 1 && s.k == 3);
  if (trd24) return SeparatorSetup{{"F6^2", "F12"}, 3, tensor::build_unit(3, 3), 3};
  if (trd33) return SeparatorSetup{{"F2^3", "F6"}, 2, tensor::build_unit(4, 2), 2};
  if (s.family == "cw" && s.n >= 2 && s.k == 3) return SeparatorSetup{{"HD"}, 2, border_rank_three(true), 3};
  if (s.family == "mamu" && s.n == 2 && s.k == 3) return SeparatorSetup{{"F6"}, 2, border_rank_three(false), 3};
  return std::nullopt;
}

std::string join_coeffs(const std::vector<std::string>& names, const std::vector<Rat>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    std::string v = c[i].str();
    if (out.empty())
      out = (v == "1" ? "" : v == "-1" ? "-" : v + " ") + names[i];
    else if (v[0] == '-')
      out += " - " + (v == "-1" ? "" : v.substr(1) + " ") + names[i];
    else
      out += " + " + (v == "1" ? "" : v + " ") + names[i];
  }
  return out;
}

std::string opt_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

std::vector<std::vector<std::string>> table(const Report& r) {
  std::vector<std::vector<std::string>> out;
  out.push_back({"family", "n", "k", "lower", "certificate", "GR", "G-stable LP", "floor G-stable", "sample bound",
                 "sample source", "upper", "concluded", "status"});
  for (const auto& row : r.rows) {
    std::optional<std::size_t> fl;
    if (row.gstable) fl = static_cast<std::size_t>(exactnum::floor_mpz(*row.gstable).get_ui());
    out.push_back({row.spec.family, std::to_string(row.spec.n), std::to_string(row.spec.k), std::to_string(row.lower),
                   row.certificate, opt_str(row.gr), row.gstable ? row.gstable->str() : "-", opt_str(fl),
                   row.separation ? std::to_string(row.separation->bound) : "-",
                   row.separation ? row.separation->source : "-", std::to_string(row.upper), opt_str(row.concluded),
                   row.status});
  }
  return out;
}

}  // namespace

bool canonical_less(const RowSpec& a, const RowSpec& b) {
  return std::tuple(family_rank(a.family), a.family, a.k, a.n) < std::tuple(family_rank(b.family), b.family, b.k, b.n);
}

std::uint64_t row_seed(std::uint64_t seed, const RowSpec& s) {
  // FNV-1a over the row key, so a row's samples do not depend on which other rows run
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s.family + "/" + std::to_string(s.n) + "/" + std::to_string(s.k)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return derive_seed(seed, h);
}

std::optional<Separation> sample_separation(const RowSpec& s, std::uint64_t seed, std::size_t samples) {
  if (s.family == "trd" || s.family == "null" || s.family == "cw") {
    try {
      auto res = degeneration::instability_run(degeneration::family_algebra(s.family, s.n), s.k, seed, samples);
      if (!res.unstable) throw ValidationError("instability check failed: " + res.detail);
      // every restriction to (q+1)^(k+1) is unstable, so no degeneration to u(q+1)
      return Separation{res.target - 1, "socle instability, " + std::to_string(res.samples) + " samples"};
    } catch (const RangeError&) {
    } catch (const NotLocalForm&) {
    }
  }
  auto setup = separator_setup(s);
  if (!setup) return std::nullopt;
  std::vector<invariants::Evaluator> evals;
  for (const auto& e : setup->evaluators) evals.push_back(invariants::evaluator(e));
  auto smp = degeneration::sample_restrictions(degeneration::family_tensor(s.family, s.n, s.k), setup->target, seed,
                                               samples);
  auto coeffs = invariants::separating_combination(evals, smp, setup->witness);
  return Separation{setup->witness_border_rank - 1,
                    join_coeffs(setup->evaluators, coeffs) + " on " + std::to_string(samples) + " samples"};
}

ReportRow compute_row(const RowSpec& s, const ReportOptions& opt) {
  ReportRow row;
  row.spec = s;
  const RatTensor t = degeneration::family_tensor(s.family, s.n, s.k);
  const auto cert = degeneration::best_certificate(s.family, s.n, s.k);
  row.lower = degeneration::verify_unit_certificate(t, cert);
  row.certificate = cert.family_tag;
  try {
    row.gr = bounds::gr_closed_form(s.family, s.n, s.k);
  } catch (const RangeError&) {
  }
  if (t.nnz() <= opt.lp_support_limit) row.gstable = bounds::gstable_lp(t);
  row.separation = sample_separation(s, row_seed(opt.seed, s), opt.samples);

  std::optional<std::size_t> rigorous = row.gr;
  if (row.gstable) {
    auto fl = static_cast<std::size_t>(exactnum::floor_mpz(*row.gstable).get_ui());
    rigorous = rigorous ? std::min(*rigorous, fl) : fl;
  }
  row.upper = rigorous ? *rigorous : t.shape()[0];
  if (row.separation) row.upper = std::min(row.upper, row.separation->bound);
  if (row.lower > row.upper || (rigorous && row.lower > *rigorous))
    throw ValidationError("lower bound " + std::to_string(row.lower) + " exceeds upper bound " +
                          std::to_string(row.upper));
  if (rigorous && *rigorous == row.lower) {
    row.concluded = row.lower;
    row.status = "concluded";
  } else if (row.separation && row.separation->bound == row.lower) {
    row.concluded = row.lower;
    row.status = "checked-sample-based";
  } else {
    row.status = "interval";
  }
  return row;
}

std::vector<RowSpec> report_grid(const std::vector<std::string>& families) {
  auto wanted = [&](const std::string& f) {
    return families.empty() || std::find(families.begin(), families.end(), "all") != families.end() ||
           std::find(families.begin(), families.end(), f) != families.end();
  };
  for (const auto& f : families)
    if (f != "all" && family_rank(f) == degeneration::family_tags().size())
      throw InputError("unknown family '" + f + "'");
  std::vector<RowSpec> g;
  auto add = [&](const std::string& f, std::size_t n0, std::size_t n1, std::size_t k0, std::size_t k1) {
    if (!wanted(f)) return;
    for (std::size_t n = n0; n <= n1; ++n)
      for (std::size_t k = k0; k <= k1; ++k) g.push_back({f, n, k});
  };
  add("trd", 2, 6, 1, 5);
  add("tri", 1, 8, 1, 6);
  add("null", 1, 4, 1, 4);
  add("cw", 1, 4, 1, 5);
  add("mamu", 2, 4, 2, 4);
  add("sl", 2, 4, 1, 2);
  add("sl2", 2, 2, 1, 8);
  std::sort(g.begin(), g.end(), canonical_less);
  return g;
}

Report build_report(const std::vector<RowSpec>& grid, const ReportOptions& opt) {
  std::vector<RowSpec> order = grid;
  std::sort(order.begin(), order.end(), canonical_less);
  std::vector<std::optional<ReportRow>> rows(order.size());
  std::vector<std::string> errors(order.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      try {
        rows[i] = compute_row(order[i], opt);
      } catch (const std::exception& e) {
        errors[i] = order[i].family + " n=" + std::to_string(order[i].n) + " k=" + std::to_string(order[i].k) + ": " +
                    e.what();
      }
    }
  };
  std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, order.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Report r;
  r.seed = opt.seed;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (rows[i]) r.rows.push_back(std::move(*rows[i]));
    if (!errors[i].empty()) r.failures.push_back(errors[i]);
  }
  return r;
}

std::string report_markdown(const Report& r) {
  std::ostringstream os;
  os << "# Border subrank bounds\n\nseed: " << r.seed << "\n\n";
  auto t = table(r);
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << "|";
    for (const auto& c : t[i]) os << " " << c << " |";
    os << "\n";
    if (i == 0) {
      os << "|";
      for (std::size_t c = 0; c < t[0].size(); ++c) os << "---|";
      os << "\n";
    }
  }
  os << "\nrows: " << r.rows.size() << ", failures: " << r.failures.size() << "\n";
  for (const auto& f : r.failures) os << "\n- FAILED " << f;
  if (!r.failures.empty()) os << "\n";
  return os.str();
}

std::string report_csv(const Report& r) {
  std::ostringstream os;
  os << "# seed: " << r.seed << "\n";
  for (const auto& line : table(r)) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) os << ",";
      bool quote = line[c].find_first_of(",\"") != std::string::npos;
      if (!quote) {
        os << line[c];
        continue;
      }
      os << '"';
      for (char ch : line[c]) os << (ch == '"' ? "\"\"" : std::string(1, ch));
      os << '"';
    }
    os << "\n";
  }
  os << "# rows: " << r.rows.size() << ", failures: " << r.failures.size() << "\n";
  for (const auto& f : r.failures) os << "# FAILED " << f << "\n";
  return os.str();
}

std::string report_json(const Report& r) {
  nlohmann::json rows = nlohmann::json::array();
  auto t = table(r);
  for (std::size_t i = 1; i < t.size(); ++i) {
    nlohmann::json row;
    for (std::size_t c = 0; c < t[0].size(); ++c) row[t[0][c]] = t[i][c];
    rows.push_back(row);
  }
  nlohmann::json j{{"seed", r.seed}, {"rows", rows}, {"failures", r.failures}};
  return j.dump(1) + "\n";
}

}  // namespace subrank::cli
