#pragma once

// Reduction of single vectors into fundamental chambers of standard
// parabolic subgroups, and the facets C_{I,J} of those chambers.

#include <vector>

#include "weylfund/rootsys.hpp"

namespace weylfund {

struct ReductionResult {
  GroupElement w;
  /// w as a word in simple reflections, leftmost letter applied last.
  std::vector<int> word;
  VecPi image;
  /// {j in I : <alpha_j, image> = 0}
  ParabolicIndex stabilizer = 0;
};

/// Moves v into the closed chamber of W_I. At every step the reflection in
/// the smallest-index simple root of I pairing negatively with v is applied.
ReductionResult reduce_to_chamber(const RootSystem& rs, ParabolicIndex I, const VecPi& v);

bool in_chamber(const RootSystem& rs, ParabolicIndex I, const VecPi& v);

struct FacetLabel {
  ParabolicIndex I = 0;
  ParabolicIndex J = 0;
  friend bool operator==(const FacetLabel&, const FacetLabel&) = default;
};

/// The J with v in C_{I,J}. Throws InputError unless v lies in the chamber of W_I.
FacetLabel facet_of(const RootSystem& rs, ParabolicIndex I, const VecPi& v);

/// Sum of the fundamental coweights dual to the roots of I \ J.
VecPi facet_point(const RootSystem& rs, const FacetLabel& label);

/// Roots in the closed fundamental chamber, grouped by component.
std::vector<int> dominant_roots(const RootSystem& rs);

/// Chamber reduction for the reflection subgroup generated by a simple
/// subsystem gamma (root indices).
struct SubsystemReduction {
  GroupElement w;
  VecPi image;
};
SubsystemReduction reduce_in_subsystem(const RootSystem& rs, const std::vector<int>& gamma, const VecPi& v);

/// omega_Gamma together with rho_Gamma as a map on root indices of gamma
/// (rho[k] is the position in gamma of -omega_Gamma(gamma[k])).
struct SubsystemLongest {
  GroupElement w;
  std::vector<int> rho;
};
SubsystemLongest subsystem_longest_element(const RootSystem& rs, const std::vector<int>& gamma);

}  // namespace weylfund
