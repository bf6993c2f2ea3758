#include "lamina/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace lamina {

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::InternalSystole: return "internal_systole";
    case Quantity::HalfCollarWidth: return "half_collar_width";
    case Quantity::InjectivityRadius: return "injectivity_radius";
    case Quantity::BoundaryLength: return "boundary_length";
    case Quantity::Genus: return "genus";
  }
  return "?";
}

std::string Bound::str() const {
  return std::string(quantity_name(quantity)) + (strict ? " > " : " >= ") +
         std::to_string(value);
}

bool exceeds(double value, bool strict, double threshold) {
  if (value - threshold > kPremiseSlack) return true;
  return strict && value >= threshold;
}

BoundOutcome half_collar_bound(double sigma, double l_alpha) {
  BoundOutcome out;
  if (l_alpha < 0) {
    out.failure = "boundary length must be nonnegative";
    return out;
  }
  if (!(sigma - l_alpha > kPremiseSlack)) {
    out.failure = "internal systole does not exceed the boundary length";
    return out;
  }
  Bound b;
  b.quantity = Quantity::HalfCollarWidth;
  b.value = (sigma - l_alpha) / 2;
  b.strict = true;
  b.premises.push_back({"half_collar",
                        "sigma=" + std::to_string(sigma) +
                            " > l_alpha=" + std::to_string(l_alpha),
                        true});
  b.premises.push_back(
      {"not_pair_of_pants", "asserted by the caller", true});
  out.bound = b;
  return out;
}

BoundOutcome inj_radius_bound(double sys, double k0, double sigma) {
  BoundOutcome out;
  if (sys <= 0 || k0 <= 0 || sigma <= 0) {
    out.failure = "all arguments must be positive";
    return out;
  }
  double rhs = sys * std::cosh(k0 / 2);
  if (!(rhs - k0 > kPremiseSlack)) {
    out.failure = "collar hypothesis fails: K0=" + std::to_string(k0) +
                  " > sys*cosh(K0/2)=" + std::to_string(rhs);
    return out;
  }
  Bound b;
  b.quantity = Quantity::InjectivityRadius;
  b.value = std::min(sigma, k0 / 2);
  b.strict = false;
  b.premises.push_back({"collar_hypothesis",
                        "K0=" + std::to_string(k0) +
                            " <= sys*cosh(K0/2)=" + std::to_string(rhs),
                        true});
  b.premises.push_back({"distance",
                        "holds at points with dist(x, boundary) >= K0", true});
  out.bound = b;
  return out;
}

BoundOutcome crossing_bound(double k0) {
  BoundOutcome out;
  if (k0 <= 0) {
    out.failure = "half-collar width must be positive";
    return out;
  }
  Bound b;
  b.quantity = Quantity::BoundaryLength;
  b.value = k0;
  b.strict = true;
  b.premises.push_back(
      {"collar_crossing",
       "a geodesic crossing the collared curve traverses the collar", true});
  out.bound = b;
  return out;
}

BoundOutcome glue_systole(const std::vector<GluePart>& parts, double k,
                          bool meets_along_boundary) {
  BoundOutcome out;
  if (parts.empty()) {
    out.failure = "empty decomposition";
    return out;
  }
  if (!meets_along_boundary) {
    out.failure = "pieces must meet only along boundary components";
    return out;
  }
  Bound b;
  b.quantity = Quantity::InternalSystole;
  b.value = k;
  b.strict = true;
  b.premises.push_back(
      {"decomposition", "pieces meet only along boundary (asserted)", true});
  for (const auto& p : parts) {
    if (!exceeds(p.internal_systole, p.systole_strict, k)) {
      out.failure = "part '" + p.id + "': internal systole " +
                    std::to_string(p.internal_systole) + " does not exceed " +
                    std::to_string(k);
      return out;
    }
    b.premises.push_back({"part_systole",
                          p.id + ": internal systole " +
                              std::to_string(p.internal_systole) + " > " +
                              std::to_string(k),
                          true});
    for (double w : p.collar_widths)
      if (!exceeds(w, p.bounds_strict, k)) {
        out.failure = "part '" + p.id + "': interior half-collar width " +
                      std::to_string(w) + " does not exceed " +
                      std::to_string(k);
        return out;
      }
    b.premises.push_back({"part_collars",
                          p.id + ": " +
                              std::to_string(p.collar_widths.size()) +
                              " interior half-collar(s) > " +
                              std::to_string(k),
                          true});
    for (double l : p.boundary_lengths)
      if (!exceeds(l, p.bounds_strict, k)) {
        out.failure = "part '" + p.id + "': interior boundary length " +
                      std::to_string(l) + " does not exceed " +
                      std::to_string(k);
        return out;
      }
    b.premises.push_back({"part_boundary_lengths",
                          p.id + ": " +
                              std::to_string(p.boundary_lengths.size()) +
                              " interior boundary length(s) > " +
                              std::to_string(k),
                          true});
  }
  out.bound = b;
  return out;
}

TubeGenus tube_genus_bound(double k) {
  if (k <= 0) throw std::invalid_argument("tube parameter must be positive");
  TubeGenus t;
  t.raw = (std::cosh(k) - 1) / 2;
  t.area = 2 * M_PI * (std::cosh(k) - 1);
  t.genus = static_cast<long>(std::ceil(t.raw));
  return t;
}

std::string derivation_text(const Bound& b) {
  std::string out = b.str() + "\n";
  for (const auto& p : b.premises)
    out += "  [" + p.rule + "] " + p.detail + (p.holds ? "" : " (FAILS)") +
           "\n";
  return out;
}

}  // namespace lamina
