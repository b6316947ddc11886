#pragma once

#include <span>
#include <vector>

#include "sig6/core.hpp"
#include "sig6/hypergeom.hpp"

namespace sig6::identities {

/// Matched arguments of
///   F(1/6, 5/6; 1; xi) = (1 - x + x^2)^{1/4} F(1/2, 1/2; 1; x),
/// x on the classical side and xi on the signature-six side.
struct ModulusPair {
  double x;
  double xi;
};

struct IdentityPoint {
  double x;
  double xi;
  double lhs;
  double rhs;
  double residual;  // |lhs - rhs| / max(|rhs|, 1)
};

struct IdentityReport {
  std::vector<IdentityPoint> points;
  double max_relative_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

enum class BbgForm { theorem, corollary };

/// The increasing bijection of (0, 1) fixed by
///   4 xi (1 - xi) = (27/4) x^2 (1 - x)^2 / (1 - x + x^2)^3.
/// Throws DomainError outside (0, 1).
ModulusPair map_x_to_xi(double x);

/// Right-hand side of the defining relation above (the quantity 4 xi (1 - xi)).
double sextic_modulus_quartic(double x);

/// x = 2 sin(beta) / (sin(beta) + sqrt(3) cos(beta)), xi = sin^2(alpha).
ModulusPair map_via_angles(const Modulus& modulus);

/// x = p(2 + p)/(1 + 2p), xi = (27/4) p^2 (1 + p)^2 / (1 + p + p^2)^3.
ModulusPair bbg_theorem_point(double p);

/// x = (1 - p^2)/(1 + 2p), xi = (1/4)(1 - p)^2 (1 + 2p)^2 (2 + p)^2 / (1 + p + p^2)^3.
ModulusPair bbg_corollary_point(double p);

/// Both parametrizations share 1 - x + x^2 = ((1 + p + p^2)/(1 + 2p))^2.
double bbg_shared_quadratic(double p);

/// One point of the identity: lhs by the Gauss series at xi, rhs by the AGM.
IdentityPoint check_identity_at(const ModulusPair& pair, const hypergeom::SeriesSpec& spec);

/// Checks the identity at every x of the grid.
IdentityReport verify_sextic_identity(std::span<const double> grid,
                                      const hypergeom::SeriesSpec& spec, double threshold);

/// Checks the identity along one of the two p-parametrizations.
IdentityReport verify_bbg(std::span<const double> grid, BbgForm which,
                          const hypergeom::SeriesSpec& spec, double threshold);

}  // namespace sig6::identities
