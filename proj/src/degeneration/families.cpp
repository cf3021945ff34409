#include "subrank/degeneration/families.hpp"

#include "subrank/degeneration/library.hpp"
#include "subrank/errors.hpp"

namespace subrank::degeneration {

const std::vector<std::string>& family_tags() {
  static const std::vector<std::string> tags{"trd", "tri", "null", "cw", "mamu", "sl", "sl2"};
  return tags;
}

algebras::Algebra family_algebra(const std::string& family, std::size_t n) {
  using namespace algebras;
  if (family == "trd") return build_truncated_poly(n);
  if (family == "tri") return build_triangular(n);
  if (family == "null") return build_null(n);
  if (family == "cw") return build_apolar_quadric(n);
  if (family == "mamu") return build_matrix(n);
  if (family == "sl") return build_sl(n);
  if (family == "sl2") return build_sl2_hab();
  throw InputError("unknown family '" + family + "'");
}

RatTensor family_tensor(const std::string& family, std::size_t n, std::size_t k) {
  if (k == 0) throw InputError("k must be at least 1");
  if (family == "mamu") return algebras::build_mamu(std::vector<std::size_t>(k + 1, n));
  return algebras::structure_tensor(family_algebra(family, n), k);
}

Certificate best_certificate(const std::string& family, std::size_t n, std::size_t k) {
  RatTensor t = family_tensor(family, n, k);
  if (k == 1) return cert_identity(t, family);
  if (family == "trd") return cert_trd(k, n);
  if (family == "tri") return cert_triangular(k, n);
  if (family == "mamu") return cert_mamu(k, n);
  if (family == "sl2") return cert_sl2(k);
  if (family == "sl" && k == 2) return cert_sl_block(n);
  if (family == "cw") {
    if (k == 2) return n >= 3 ? cert_cw_k2(n) : cert_cw_small(n);
    if (k == 3 && n >= 2) return cert_cw_k3(n);
  }
  if (family == "null" && k == 2 && n >= 2) return cert_null_k2(n);
  return cert_point(t, family);
}

}  // namespace subrank::degeneration
