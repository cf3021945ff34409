#include "subrank/exactnum/rat.hpp"

#include "subrank/errors.hpp"

namespace subrank::exactnum {

Rat::Rat(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::from_strings(std::string_view num, std::string_view den) {
  mpz_class n, d;
  if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0)
    throw InputError("malformed integer in rational: " + std::string(num) + "/" + std::string(den));
  if (d == 0) throw InputError("rational with zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(q);
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_strings(text, "1");
  return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat pow(const Rat& base, unsigned exp) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.q().get_num_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.q().get_den_mpz_t(), exp);
  return Rat(mpq_class(n, d));
}

mpz_class floor_mpz(const Rat& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.q().get_num_mpz_t(), r.q().get_den_mpz_t());
  return out;
}

Rat floor_rat(const Rat& r) { return Rat(floor_mpz(r)); }

}  // namespace subrank::exactnum
