#include "subrank/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <thread>

#include "CLI11.hpp"
#include "subrank/bounds/bounds.hpp"
#include "subrank/cli/report.hpp"
#include "subrank/cli/serialize.hpp"
#include "subrank/degeneration/families.hpp"
#include "subrank/errors.hpp"
#include "subrank/invariants/invariants.hpp"

namespace subrank::cli {

namespace {

struct Common {
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::size_t jobs = 0;
  std::string out;
  std::string format = "md";
};

struct FamilyArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 1;
  std::vector<std::size_t> dims;
};

void add_family_options(CLI::App* sub, FamilyArgs& f, bool positional) {
  if (positional)
    sub->add_option("family", f.family, "trd | tri | null | cw | mamu | sl | sl2")->required();
  else
    sub->add_option("--family", f.family, "trd | tri | null | cw | mamu | sl | sl2");
  sub->add_option("--n,--d", f.n, "algebra parameter (d for trd)");
  sub->add_option("--k", f.k, "number of inputs")->check(CLI::PositiveNumber);
  sub->add_option("--dims", f.dims, "mamu dimensions n0,...,nk")->delimiter(',');
}

void check_family(const FamilyArgs& f) {
  const auto& tags = degeneration::family_tags();
  if (std::find(tags.begin(), tags.end(), f.family) == tags.end()) throw InputError("unknown family '" + f.family + "'");
  if (f.family == "sl2") return;
  if (f.family == "mamu" && !f.dims.empty()) return;
  if (f.n == 0) throw InputError("family " + f.family + " needs --n (or --d)");
  if (f.family == "sl" && f.n < 2) throw InputError("sl needs n >= 2");
  if (f.n > 64 || f.k > 64) throw InputError("parameters out of range");
}

std::size_t family_n(const FamilyArgs& f) { return f.family == "sl2" ? 2 : f.n; }

tensor::RatTensor family_tensor(const FamilyArgs& f) {
  check_family(f);
  if (f.family == "mamu" && !f.dims.empty()) {
    if (f.dims.size() < 2 || std::find(f.dims.begin(), f.dims.end(), 0u) != f.dims.end())
      throw InputError("--dims needs at least two positive entries");
    return algebras::build_mamu(f.dims);
  }
  return degeneration::family_tensor(f.family, family_n(f), f.k);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

int cmd_build(const FamilyArgs& f, const std::string& cert_path, const Common& c, std::ostream& out) {
  auto t = family_tensor(f);
  write_output(c.out, dump(tensor_to_json(t)), out);
  if (!cert_path.empty()) {
    if (f.family == "mamu" && !f.dims.empty()) throw InputError("--cert needs --n and --k for mamu");
    write_output(cert_path, dump(certificate_to_json(degeneration::best_certificate(f.family, family_n(f), f.k))), out);
  }
  if (!c.out.empty()) out << "wrote " << t.nnz() << " entries, shape " << t.shape().str() << "\n";
  return kOk;
}

int cmd_verify(const FamilyArgs& f, const std::string& cert_path, const std::string& tensor_path, std::ostream& out) {
  tensor::RatTensor t;
  degeneration::Certificate cert;
  if (!f.family.empty()) {
    if (!tensor_path.empty()) throw InputError("give either --family or a tensor file");
    t = family_tensor(f);
    cert = cert_path.empty() ? degeneration::best_certificate(f.family, family_n(f), f.k)
                             : certificate_from_json(read_json_file(cert_path));
  } else {
    if (cert_path.empty() || tensor_path.empty()) throw InputError("verify needs CERT TENSOR or --family");
    cert = certificate_from_json(read_json_file(cert_path));
    t = tensor_from_json(read_json_file(tensor_path));
  }
  if (cert.mode_maps.size() != t.order()) throw InputError("certificate has the wrong number of mode maps");
  for (const auto& m : cert.mode_maps)
    if (m.mode >= t.order() || m.matrix.cols() != t.shape()[m.mode])
      throw InputError("mode map " + std::to_string(m.mode) + " does not match the tensor shape");
  auto r = degeneration::verify_unit_certificate(t, cert);
  out << "r = " << r << "\n";
  return kOk;
}

int cmd_bounds(const FamilyArgs& f, const Common& c, std::ostream& out) {
  check_family(f);
  if (f.family == "mamu" && !f.dims.empty()) throw InputError("bounds for mamu takes --n and --k");
  ReportOptions opt;
  opt.seed = c.seed;
  auto row = compute_row({f.family, family_n(f), f.k}, opt);
  out << "family " << f.family << ", n = " << row.spec.n << ", k = " << row.spec.k << ", seed " << c.seed << "\n";
  out << "lower bound (" << row.certificate << " certificate): " << row.lower << "\n";
  out << "GR: " << (row.gr ? std::to_string(*row.gr) : "n/a") << "\n";
  if (row.gstable)
    out << "G-stable LP: " << row.gstable->str() << ", floor <= " << exactnum::floor_mpz(*row.gstable).get_str() << "\n";
  else
    out << "G-stable LP: skipped\n";
  if (row.separation)
    out << "sample-based bound: <= " << row.separation->bound << " (" << row.separation->source << ")\n";
  else
    out << "sample-based bound: none\n";
  if (row.concluded)
    out << "result: " << row.lower << " = " << row.upper << ", " << row.status << "\n";
  else
    out << "result: [" << row.lower << ", " << row.upper << "], interval\n";
  return kOk;
}

int cmd_invariant(const std::string& name, const std::string& path, std::ostream& out) {
  auto t = tensor_from_json(read_json_file(path));
  auto e = invariants::evaluator(name);
  out << e.name << " = " << e.eval(t) << "\n";
  return kOk;
}

int cmd_oracle(const FamilyArgs& f, const std::vector<std::uint64_t>& primes, std::uint64_t budget, std::ostream& out) {
  check_family(f);
  if (f.family == "mamu" && !f.dims.empty()) throw InputError("oracle for mamu takes --n and --k");
  if (primes.empty()) throw InputError("oracle needs --primes");
  auto a = degeneration::family_algebra(f.family, family_n(f));
  auto res = bounds::ff_dimension_oracle(a, f.k, primes, budget);
  for (std::size_t i = 0; i < res.primes.size(); ++i)
    out << "p = " << res.primes[i] << ": " << res.counts[i] << " points\n";
  out << "dimension estimate: " << res.dimension << (res.consistent ? "" : " (inconsistent slopes)") << "\n";
  out << "GR = " << static_cast<long>(f.k * a.dim) - res.dimension << "\n";
  return res.consistent ? kOk : kFail;
}

int cmd_report(const std::vector<std::string>& families, const Common& c, std::ostream& out) {
  ReportOptions opt;
  opt.seed = c.seed;
  opt.jobs = c.jobs ? c.jobs : std::max(1u, std::thread::hardware_concurrency());
  auto rep = build_report(report_grid(families), opt);
  if (c.out.empty()) {
    out << (c.format == "csv" ? report_csv(rep) : c.format == "json" ? report_json(rep) : report_markdown(rep));
  } else {
    std::string stem = c.out;
    for (const char* ext : {".md", ".csv", ".json"})
      if (stem.size() > std::strlen(ext) && stem.ends_with(ext)) stem.resize(stem.size() - std::strlen(ext));
    write_output(stem + ".md", report_markdown(rep), out);
    write_output(stem + ".csv", report_csv(rep), out);
    if (c.format == "json") write_output(stem + ".json", report_json(rep), out);
    out << rep.rows.size() << " rows, " << rep.failures.size() << " failures, seed " << rep.seed << "\n";
  }
  for (const auto& f : rep.failures) out << "FAILED " << f << "\n";
  return rep.failures.empty() ? kOk : kFail;
}

}  // namespace

int exit_code_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const LimitNotUnit& e) {
    err << "verification failed: " << e.what() << "\n";
    return kFail;
  } catch (const ClaimMismatch& e) {
    err << "verification failed: " << e.what() << "\n";
    return kFail;
  } catch (const PoleAtZero& e) {
    err << "invalid certificate: " << e.what() << "\n";
    return kPole;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ShapeMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const RangeError& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const BadPrime& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const NotLocalForm& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const NotWeightAdmissible& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return kFail;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact border subrank certificates and bounds for higher-order structure tensors", "subrank"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--seed", c.seed, "64-bit seed (default: $SUBRANK_SEED, else 1)");
  app.add_option("--jobs", c.jobs, "worker threads for report");
  app.add_option("--out", c.out, "output path");
  app.add_option("--format", c.format, "md | csv | json")->check(CLI::IsMember({"md", "csv", "json"}));

  FamilyArgs fam;
  std::string cert_path, cert_flag, tensor_path, inv_name, inv_path;
  std::vector<std::uint64_t> primes;
  std::uint64_t budget = 10'000'000;
  std::vector<std::string> families;

  auto* build = app.add_subcommand("build", "write the structure tensor of a family member");
  add_family_options(build, fam, true);
  build->add_option("--cert", cert_path, "also write the library certificate here");
  auto* verify = app.add_subcommand("verify", "verify a degeneration certificate");
  add_family_options(verify, fam, false);
  verify->add_option("certificate", cert_path, "certificate JSON");
  verify->add_option("tensor", tensor_path, "tensor JSON");
  verify->add_option("--cert", cert_flag, "certificate JSON (with --family)");
  auto* bnds = app.add_subcommand("bounds", "lower and upper bounds for one family member");
  add_family_options(bnds, fam, true);
  auto* inv = app.add_subcommand("invariant", "evaluate a named invariant on a tensor file");
  inv->add_option("name", inv_name, "F2 F4 F4' F6 F12 HD Cayley, products like F6^2 or F2*F4")->required();
  inv->add_option("tensor", inv_path, "tensor JSON")->required();
  auto* orc = app.add_subcommand("oracle", "finite-field dimension estimate of the k-fold product zero set");
  add_family_options(orc, fam, true);
  orc->add_option("--primes", primes, "primes, comma separated")->delimiter(',');
  orc->add_option("--budget", budget, "maximum number of enumerated points per prime");
  auto* rep = app.add_subcommand("report", "regenerate the bounds table");
  rep->add_option("--families", families, "family tags or all")->delimiter(',');

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  }

  try {
    if (app.count("--seed") > 0) {
      c.seed_given = true;
    } else if (const char* env = std::getenv("SUBRANK_SEED"); env && *env) {
      try {
        std::size_t pos = 0;
        c.seed = std::stoull(env, &pos);
        if (env[pos] != '\0') throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw InputError(std::string("SUBRANK_SEED is not an unsigned 64-bit integer: ") + env);
      }
    }
    if (*build) return cmd_build(fam, cert_path, c, out);
    if (*verify) {
      if (!cert_flag.empty()) {
        if (!cert_path.empty()) throw InputError("certificate given twice");
        cert_path = cert_flag;
      }
      return cmd_verify(fam, cert_path, tensor_path, out);
    }
    if (*bnds) return cmd_bounds(fam, c, out);
    if (*inv) return cmd_invariant(inv_name, inv_path, out);
    if (*orc) return cmd_oracle(fam, primes, budget, out);
    if (*rep) return cmd_report(families, c, out);
  } catch (...) {
    return exit_code_for_current_exception(err);
  }
  return kInput;
}

}  // namespace subrank::cli
