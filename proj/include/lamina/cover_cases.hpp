#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/perm_cover.hpp"

namespace lamina {

/// One of the four ways a second-shortest curve can sit against the
/// distinguished curve, realised as a degree-(N+1) cover of a bouquet:
///   1: the curves cross once                     (alpha="a", beta="b")
///   2: disjoint, independent in homology         (alpha="a", beta="b")
///   3: disjoint, beta null-homologous            (beta="a b a^-1 b^-1")
///   4: disjoint, alpha+beta zero in mod-2 homology
///                                                (beta="a b c b^-1 c^-1")
/// In every case the monodromy of "a" has one fixed point and one N-cycle,
/// so that "a" has one degree-1 lift and one degree-N lift, while beta
/// admits no degree-1 lift at all.
struct CaseConstruction {
  int case_id = 0;
  int n = 0;
  PermCover cover;
  Word alpha, beta;
  LiftSpectrum alpha_spectrum, beta_spectrum;
  bool alpha_ok = false;             // spectrum is exactly {1, N}
  bool beta_ok = false;              // spectrum avoids 1
  bool alpha_nonseparating = false;  // nonzero mod-2 homology class
  long searched = 0;      // witness candidates inspected
  std::string witness_note;

  bool ok() const { return alpha_ok && beta_ok; }
  std::string report() const;
};

/// Admissible N: cases 1-2 need N >= 1, case 3 needs N >= 2,
/// case 4 needs N >= 4. Witness permutations for cases 3 and 4 come from a
/// bounded brute-force search in deterministic order, memoised per (case,N).
/// A seed permutes the search order without affecting correctness.
CaseConstruction build_case(int case_id, int n, unsigned seed = 0);

struct DriverBeta {
  int case_id = 0;
  std::optional<Word> word;  // defaults to the canonical case word
};

struct DriverReport {
  int n = 0;
  std::vector<CaseConstruction> cases;
  ProductCover product;
  int basepoint_component_size = 0;
  int alpha_degree1_in_component = 0;  // must be exactly 1
  int alpha_degree1_total = 0;
  std::vector<int> beta_degree1_total;  // per beta, must all be 0
  std::optional<double> length_ratio;   // l2/l1 premise, when supplied
  bool threshold_ok = false;            // N * l1 > l2
  bool ok = false;
  std::string str() const;
};

/// Builds the per-case covers for the given betas, extends them to the
/// union alphabet (missing generators act trivially), forms their product
/// and verifies on the tuple space that "a" keeps exactly one degree-1 lift
/// on the basepoint component while every beta loses all of its degree-1
/// lifts.
DriverReport second_systole_driver(const std::vector<DriverBeta>& betas,
                                   int n,
                                   std::optional<double> length_ratio = {},
                                   unsigned seed = 0);

}  // namespace lamina
