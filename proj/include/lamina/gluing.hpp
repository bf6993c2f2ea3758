#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/bounds.hpp"
#include "lamina/validation.hpp"

namespace lamina {

/// Facts carried by an opaque tube cover: a unique short lift of the
/// distinguished curve, a half-collar of width at least K/2 around it, and
/// the genus forced by K.
struct TubeCertificate {
  double k = 0;
  bool unique_short_lift = true;
  double collar_width_lb = 0;  // K/2
  long genus_lb = 0;           // smallest integer >= (cosh K - 1)/2
  bool operator==(const TubeCertificate&) const = default;
};

/// Throws on K <= 0.
TubeCertificate make_tube_certificate(double k);

struct GluingCircle {
  int side = +1;  // +1 or -1
  int degree = 1;
  std::string label;
  bool operator==(const GluingCircle&) const = default;
};

/// A cut piece of a cover: the boundary circles left by cutting along the
/// preimage of the distinguished curve. `stays_connected_when_cut` asserts
/// that the circles cut a non-separating curve out of this piece.
struct GluingPiece {
  std::string name;
  bool connected = true;
  bool stays_connected_when_cut = false;
  std::vector<GluingCircle> circles;
  std::optional<TubeCertificate> certificate;
  bool operator==(const GluingPiece&) const = default;
};

struct CircleRef {
  int piece = -1;
  int circle = -1;
  bool operator==(const CircleRef&) const = default;
};

/// A matched pair of circles of equal degree; the reassembled cover has one
/// preimage circle of that degree over the distinguished curve per pair.
struct GluedPair {
  CircleRef plus, minus;
  bool operator==(const GluedPair&) const = default;
};

/// Finite cover presented by cut pieces plus a degree-preserving bijection
/// between +circles and -circles.
struct GluingPresentation {
  std::vector<GluingPiece> pieces;
  std::vector<GluedPair> gluing;
  std::vector<int> distinguished;  // gluing indices created by surgery

  bool operator==(const GluingPresentation&) const = default;
};

ValidationReport validate_gluing(const GluingPresentation& p);

/// Covering degree over the distinguished curve: the sum of the glued-pair
/// degrees.
int presentation_degree(const GluingPresentation& p);

/// Degrees of the preimage circles over the distinguished curve, ascending.
std::vector<int> curve_spectrum(const GluingPresentation& p);

/// The identity cover cut along the distinguished curve: one piece whose
/// two degree-1 circles are glued to each other.
GluingPresentation identity_presentation(bool nonseparating = true);

/// One opaque tube piece, certified for parameter K, with its unique short
/// lift self-glued.
GluingPresentation tube_presentation(double k);

/// Cuts both presentations open along the chosen degree-1 pairs and
/// reglues crosswise; the two new pairs (recorded as distinguished) again
/// have degree 1 and every other gluing is untouched. Throws on a selected
/// pair of degree != 1.
GluingPresentation surgery(const GluingPresentation& p1, int e1,
                           const GluingPresentation& p2, int e2);

/// Surgery with a fresh K-tube at the chosen pair.
GluingPresentation attach_tube(const GluingPresentation& p, int e, double k);

/// Components of the piece graph whose edges are the glued pairs; a
/// singleton list certifies connectivity of the assembled cover (pieces
/// are connected units).
std::vector<std::vector<int>> connectivity(const GluingPresentation& p);

}  // namespace lamina
