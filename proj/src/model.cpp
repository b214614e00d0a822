#include "coinduel/model.hpp"

#include "coinduel/errors.hpp"

namespace coinduel {

GameParams::GameParams(Rational q, Rational p) : q_(std::move(q)), p_(std::move(p)) {
  if (q_.sign() <= 0 || q_ >= p_ || p_ >= Rational(1)) {
    throw InvalidInput("need 0 < q < p < 1, got q=" + q_.to_fraction_string() +
                       " p=" + p_.to_fraction_string());
  }
}

GameParams GameParams::parse(std::string_view q, std::string_view p) {
  return GameParams(parse_probability(q), parse_probability(p));
}

GameParams GameParams::from_doubles(double q, double p) {
  return GameParams(Rational::from_double(q), Rational::from_double(p));
}

std::string GameParams::describe() const {
  return "(q=" + q_.to_decimal_string(30) + ", p=" + p_.to_decimal_string(30) + ")";
}

Transform::Transform(const GameParams& params)
    : params_(params),
      x_(params.p() / (Rational(1) - params.p())),
      y_(params.q() / (Rational(1) - params.q())),
      z_(x_ * y_) {}

Rational Transform::u() const {
  Rational m = params_.margin();
  if (m.sign() == 0) throw DiagonalDomain("u is undefined on p + q = 1");
  return Rational(1) + Rational(2) * params_.p() * params_.q() / m;
}

Rational Transform::rho() const {
  Rational m = params_.margin();
  if (m.sign() == 0) throw DiagonalDomain("rho is undefined on p + q = 1");
  return (Rational(1) - params_.p() + params_.q()) / m;
}

Real Transform::u_real(Bits bits) const { return Real(u(), bits); }

Real Transform::rho_real(Bits bits) const { return Real(rho(), bits); }

Real Transform::root_u2m1_real(Bits bits) const {
  Rational m = params_.margin();
  if (m.sign() == 0) throw DiagonalDomain("sqrt(u^2-1) is undefined on p + q = 1");
  const Rational& p = params_.p();
  const Rational& q = params_.q();
  Rational inner = p * q * (Rational(1) - p) * (Rational(1) - q);
  Real r = sqrt(Real(inner, bits + 8)) * 2 / Real(abs(m), bits + 8);
  Real out(bits);
  mpfr_set(out.get(), r.get(), MPFR_RNDN);
  return out;
}

Transform transform(const GameParams& params) { return Transform(params); }

Region region(const GameParams& params) {
  return {params.in_triangle(), params.on_diagonal()};
}

GameParams reflect(const GameParams& params) {
  return GameParams(Rational(1) - params.p(), Rational(1) - params.q());
}

GameParams canonical(const GameParams& params) {
  return params.margin().sign() < 0 ? reflect(params) : params;
}

}  // namespace coinduel
