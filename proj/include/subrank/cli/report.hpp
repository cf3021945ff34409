#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subrank/exactnum/rat.hpp"

namespace subrank::cli {

struct RowSpec {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
};

// Upper bound from samples: socle instability, or an invariant vanishing on restrictions but not on a witness.
struct Separation {
  std::size_t bound = 0;
  std::string source;
};

struct ReportRow {
  RowSpec spec;
  std::size_t lower = 0;  // verified certificate size
  std::string certificate;
  std::optional<std::size_t> gr;
  std::optional<exactnum::Rat> gstable;  // covering LP optimum in the structure basis
  std::optional<Separation> separation;
  std::size_t upper = 0;
  std::optional<std::size_t> concluded;
  std::string status;  // concluded | interval | checked-sample-based
};

struct ReportOptions {
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t lp_support_limit = 800;  // skip the LP above this many support points
  std::size_t samples = 20;
};

std::uint64_t row_seed(std::uint64_t seed, const RowSpec& s);
// Throws on a failed certificate or an inconsistent bound.
ReportRow compute_row(const RowSpec& s, const ReportOptions& opt);

// Sample-based upper bound for T^(k) of the family member, if one applies.
std::optional<Separation> sample_separation(const RowSpec& s, std::uint64_t seed, std::size_t samples);

// The default grid; `families` empty or {"all"} selects every family.
std::vector<RowSpec> report_grid(const std::vector<std::string>& families);

struct Report {
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;
  std::vector<std::string> failures;  // "family n k: message"
};
// Rows in canonical (family, k, n) order regardless of completion order.
Report build_report(const std::vector<RowSpec>& grid, const ReportOptions& opt);

std::string report_markdown(const Report& r);
std::string report_csv(const Report& r);
std::string report_json(const Report& r);

// Stable family order, then k, then n.
bool canonical_less(const RowSpec& a, const RowSpec& b);

}  // namespace subrank::cli
