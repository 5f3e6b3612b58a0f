#pragma once

// GKZ chamber decomposition of a vector configuration (the Cox degrees of
// A(n) in practice), stable-base-locus labels, region merging, and the rank-2
// decomposition of the first blow-up A(n)_1.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skewmori/cones.hpp"
#include "skewmori/exact.hpp"

namespace skewmori {

struct ConfigGroup {
  std::string label;
  ExactVector degree;
  std::int64_t multiplicity = 1;
  // Only boundary groups (the S_i) can appear in a forced label.
  bool boundary = true;
};

class VectorConfiguration {
 public:
  // Throws DimensionError on length mismatches, DomainError on zero degrees
  // or nonpositive multiplicities.
  VectorConfiguration(std::size_t rank, std::vector<ConfigGroup> groups, int n = 0);
  // Cox degrees of A(n): one group per Pfaffian size and one per S_i.
  static VectorConfiguration cox(int n);
  // One boundary group "v1", "v2", ... per vector.
  static VectorConfiguration from_vectors(const std::vector<ExactVector>& vectors);

  int n() const { return n_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ConfigGroup>& groups() const { return groups_; }
  // Cone spanned by every degree; equals Eff for cox(n).
  const Cone& ambient() const { return ambient_; }
  // Distinct primitive degree directions in lexicographic order.
  const std::vector<IntVector>& directions() const { return directions_; }

 private:
  int n_;
  std::size_t rank_;
  std::vector<ConfigGroup> groups_;
  Cone ambient_;
  std::vector<IntVector> directions_;
};

// Antichain of minimal forced group sets, each sorted; rendered "S1&S3".
using ForcedLabel = std::vector<std::vector<std::string>>;
std::string label_string(const ForcedLabel& label);
std::vector<std::string> label_strings(const ForcedLabel& label);

enum class Zone { None, Nef, Movable, Effective };
const char* zone_name(Zone z);

struct GKZChamber {
  Cone cone;
  ForcedLabel forced;
  ExactVector representative;
  bool maximal = false;
  Zone zone = Zone::None;  // Nef, Mov minus Nef, or Eff minus Mov (cox only)
  std::size_t region = 0;
};

struct Wall {
  std::size_t first = 0;
  std::size_t second = 0;
  Cone cone;
};

struct Region {
  ForcedLabel label;
  std::vector<std::size_t> chambers;
};

struct Decomposition {
  int n = 0;
  std::size_t rank = 0;
  std::vector<GKZChamber> chambers;  // sorted by rays
  std::vector<Wall> walls;           // pairs of chambers sharing a facet
  std::vector<Region> regions;       // ordered by first chamber
};

// Largest supported ambient rank for gkz_chambers / chamber_of.
inline constexpr std::size_t kMaxChamberRank = 5;

// Throws DomainError when the ambient cone is not full-dimensional or the
// rank exceeds kMaxChamberRank.
Decomposition gkz_chambers(const VectorConfiguration& config, std::size_t threads = 0);

// Intersection of the cones of all subsets of the configuration that contain
// w. Non-maximal when w lies on a wall. Throws DomainError if w is not in the
// ambient cone.
GKZChamber chamber_of(const VectorConfiguration& config, const ExactVector& w);

// Minimal sets J of boundary groups such that w is not in the cone spanned by
// the degrees of the generators outside J.
ForcedLabel forced_groups(const VectorConfiguration& config, const ExactVector& w);

std::vector<Region> sbl_regions(const Decomposition& decomposition);

struct ConjectureCounts {
  int n = 0;
  std::size_t computed = 0;    // SBL regions in Eff minus Mov
  std::size_t predicted = 0;   // 2^((n-2)/2) - 1 or 2^((n-1)/2) - 2
  std::size_t divisorial = 0;  // regions whose base locus is a union of E_i
  std::vector<ForcedLabel> computed_labels;
  std::vector<ForcedLabel> predicted_labels;
  bool labels_match = false;
};

ConjectureCounts conjecture_counts(int n, std::size_t threads = 0);

// Rank-2 decomposition of Eff(A(n)_1) with walls D'_{2k+2} = (k+1)H - kE_1.
// Labels are "E1" on [E_1, D_2), none on [D_2, D_4], "sec<h>" on
// (D_{2h}, D_{2h+2}].
Decomposition blowup_one_decomposition(int n);
// Label of the class w of A(n)_1 under the same rule.
ForcedLabel blowup_one_label(int n, const ExactVector& w);

}  // namespace skewmori
