#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lamina {

/// Comparison slack for premise checks on doubles. A numeric premise
/// certifies only when it holds by a margin larger than the slack; premises
/// between exact symbolic values may instead rely on strictness flags.
inline constexpr double kPremiseSlack = 1e-9;

enum class Quantity {
  InternalSystole,
  HalfCollarWidth,
  InjectivityRadius,
  BoundaryLength,
  Genus,
};

const char* quantity_name(Quantity q);

struct Premise {
  std::string rule;    // which hypothesis was checked
  std::string detail;  // the numbers that went into it
  bool holds = true;
};

/// Certified lower bound. `strict` records that the underlying inequality
/// is strict (value is excluded), which is how these bounds chain without
/// losing the stated constants.
struct Bound {
  Quantity quantity = Quantity::InternalSystole;
  double value = 0;
  bool strict = true;
  std::vector<Premise> premises;

  std::string str() const;
};

struct BoundOutcome {
  std::optional<Bound> bound;
  std::string failure;  // failed premise, when no bound is derivable
  bool ok() const { return bound.has_value(); }
};

/// Whether a certified strict lower bound `value` establishes "> threshold".
bool exceeds(double value, bool strict, double threshold);

/// Half-collar width at a boundary geodesic of length l_alpha on a surface
/// with internal systole sigma (not a pair of pants): K0 > (sigma-l_alpha)/2.
BoundOutcome half_collar_bound(double sigma, double l_alpha);

/// If K0 <= sys * cosh(K0/2), points at distance >= K0 from the boundary
/// have injectivity radius at least min(sigma, K0/2).
BoundOutcome inj_radius_bound(double sys, double k0, double sigma);

/// A closed geodesic crossing a curve with a half-collar of width K0 is
/// longer than K0.
BoundOutcome crossing_bound(double k0);

/// One subsurface in a boundary-meeting decomposition, with its certified
/// clause values.
struct GluePart {
  std::string id;
  double internal_systole = 0;
  bool systole_strict = true;
  std::vector<double> collar_widths;     // interior boundary half-collars
  std::vector<double> boundary_lengths;  // interior boundary lengths
  bool bounds_strict = true;             // collars and lengths
};

/// The internal systole of a union of subsurfaces meeting along boundary
/// exceeds K as soon as every part has internal systole, interior
/// half-collar widths and interior boundary lengths all above K.
BoundOutcome glue_systole(const std::vector<GluePart>& parts, double k,
                          bool meets_along_boundary = true);

/// Genus forced by a tube parameter K: smallest integer at least
/// (cosh K - 1)/2, together with the area lower bound 2*pi*(cosh K - 1).
struct TubeGenus {
  long genus = 0;
  double raw = 0;
  double area = 0;
};
TubeGenus tube_genus_bound(double k);

/// Human-auditable derivation: the bound line followed by one line per
/// premise.
std::string derivation_text(const Bound& b);

}  // namespace lamina
