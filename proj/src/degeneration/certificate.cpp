#include "subrank/degeneration/certificate.hpp"

#include <sstream>

#include "subrank/errors.hpp"

namespace subrank::degeneration {

EpsMatrix to_eps(const Matrix<Rat>& m) {
  return m.map([](const Rat& r) { return EpsRational(r); });
}

EpsRational eps_pow(long e) { return EpsRational::monomial(Rat(1), e); }

EpsTensor apply_certificate(const RatTensor& t, const Certificate& cert) {
  if (cert.mode_maps.size() != t.order())
    throw ShapeMismatch("certificate has " + std::to_string(cert.mode_maps.size()) + " mode maps, tensor has order " +
                        std::to_string(t.order()));
  return tensor::apply_mode_maps(tensor::lift(t), cert.mode_maps);
}

RatTensor apply_and_limit(const RatTensor& t, const Certificate& cert) {
  EpsTensor img = apply_certificate(t, cert);
  RatTensor out{img.shape()};
  for (const auto& [lin, v] : img.entries()) {
    if (v.valuation() < 0)
      throw PoleAtZero("entry " + tensor::describe_entry(img.shape(), lin) + " = " + v.str() +
                       " has a pole at eps = 0");
    out.add_linear(lin, v.limit());
  }
  return out;
}

std::string unit_violation(const RatTensor& t) {
  if (t.is_zero()) return "limit is the zero tensor";
  const auto& s = t.shape();
  for (std::size_t m = 0; m < s.order(); ++m) {
    std::map<std::size_t, std::uint64_t> first;
    for (const auto& [lin, v] : t.entries()) {
      auto [it, fresh] = first.emplace(s.coord(lin, m), lin);
      if (!fresh) {
        std::ostringstream os;
        os << "entries " << tensor::describe_entry(s, it->second) << " and " << tensor::describe_entry(s, lin)
           << " share index " << it->first << " in mode " << m;
        return os.str();
      }
    }
  }
  return {};
}

std::size_t verify_unit_certificate(const RatTensor& t, const Certificate& cert) {
  RatTensor lim = apply_and_limit(t, cert);
  auto r = tensor::recognize_unit(lim);
  if (!r) throw LimitNotUnit("limit is not a unit tensor: " + unit_violation(lim));
  if (*r != cert.claimed_unit)
    throw ClaimMismatch("verified unit size " + std::to_string(*r) + ", certificate claims " +
                        std::to_string(cert.claimed_unit));
  return *r;
}

}  // namespace subrank::degeneration
