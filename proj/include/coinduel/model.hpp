#pragma once

#include <string>

#include "coinduel/numerics.hpp"

namespace coinduel {

/// Heads probabilities of the underdog (q) and the favorite (p), 0 < q < p < 1.
class GameParams {
 public:
  /// Throws InvalidInput unless 0 < q < p < 1.
  GameParams(Rational q, Rational p);

  /// Parses both probabilities with parse_probability.
  static GameParams parse(std::string_view q, std::string_view p);
  /// Exact rational values of two doubles.
  static GameParams from_doubles(double q, double p);

  const Rational& q() const { return q_; }
  const Rational& p() const { return p_; }

  /// 1 - p - q, the quantity whose sign selects the region.
  Rational margin() const { return Rational(1) - p_ - q_; }
  Rational gap() const { return p_ - q_; }

  bool in_triangle() const { return margin().sign() > 0; }
  bool on_diagonal() const { return margin().sign() == 0; }

  std::string describe() const;

  friend bool operator==(const GameParams&, const GameParams&) = default;

 private:
  Rational q_;
  Rational p_;
};

/// x = p/(1-p), y = q/(1-q), z = xy and, off the diagonal,
/// u = (1+z)/(1-z) = 1 + 2pq/(1-p-q) and rho = (1-p+q)/(1-p-q).
class Transform {
 public:
  explicit Transform(const GameParams& params);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }
  /// Throws DiagonalDomain when p + q = 1.
  Rational u() const;
  /// Throws DiagonalDomain when p + q = 1.
  Rational rho() const;

  /// High-precision versions of u and rho, rounded to nearest.
  Real u_real(Bits bits) const;
  Real rho_real(Bits bits) const;
  /// sqrt(u^2 - 1) in the cancellation-free form 2 sqrt(pq(1-p)(1-q)) / (1-p-q).
  Real root_u2m1_real(Bits bits) const;

 private:
  GameParams params_;
  Rational x_;
  Rational y_;
  Rational z_;
};

Transform transform(const GameParams& params);

struct Region {
  bool in_triangle_T = false;
  bool on_diagonal = false;
};

Region region(const GameParams& params);

/// (q, p) -> (1-p, 1-q). Preserves p - q and maps p + q > 1 into T.
GameParams reflect(const GameParams& params);

/// Reflects into the closed triangle when p + q > 1, otherwise returns params.
GameParams canonical(const GameParams& params);

}  // namespace coinduel
