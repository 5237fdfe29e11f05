#pragma once

// W-conjugacy classes of simple subsystems, computed as orbits of the
// automorphism group of a genus acting on its fiber by the dot action, plus
// the brute-force oracles and property checks used to audit them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylfund/genus.hpp"
#include "weylfund/strata.hpp"

namespace weylfund {

/// One union performed while closing the fiber under G_sigma: the
/// canonicalizing word w satisfies w(g fiber[from]) = fiber[to].
struct OrbitCertificate {
  int from = 0;
  int to = 0;
  PlacePerm generator;
  std::vector<int> word;
};

struct ConjugacyClassReport {
  CartanType ambient;
  CartanType subsystem_type;
  GenusKind kind = GenusKind::Cartan;
  /// The genera whose fibers were searched: one Cartan genus, or every
  /// Gram genus realized inside the Cartan fiber.
  std::vector<Genus> genera;
  /// Fiber members, in the order of the genera and then by tuple order.
  std::vector<std::vector<int>> fiber;
  /// Index into genera for each fiber member.
  std::vector<int> fiber_genus;
  /// Generators of the automorphism group of each genus.
  std::vector<std::vector<PlacePerm>> generators;
  /// Orbits as sorted lists of fiber indices, ordered by smallest member.
  std::vector<std::vector<int>> orbits;
  std::vector<OrbitCertificate> certificates;
  std::size_t distinct_sets = 0;
  int class_count = 0;
  /// Set when an oracle comparison was performed.
  std::optional<bool> certified;
  std::optional<int> oracle_count;

  /// Underlying set (sorted root indices) and ordered tuple of an orbit's
  /// first member.
  std::vector<int> representative_set(std::size_t orbit) const;
  const std::vector<int>& representative_tuple(std::size_t orbit) const { return fiber[orbits[orbit].front()]; }
};

/// A small generating set of a permutation group, chosen greedily.
std::vector<PlacePerm> group_generators(const std::vector<PlacePerm>& group);

/// Orbits of the dot action of the group generated by gens on fiber.
/// Requires the fiber to be closed under the action.
void dot_orbits(const RootSystem& rs, const std::vector<std::vector<int>>& fiber, const std::vector<PlacePerm>& gens,
                std::vector<std::vector<int>>& orbits, std::vector<OrbitCertificate>& certificates);

ConjugacyClassReport classify_subsystems(const RootSystem& rs, const CartanType& x, GenusKind kind = GenusKind::Cartan);

/// All simple subsystems of type x as sorted root-index sets.
std::vector<std::vector<int>> oracle_simple_subsystems(const RootSystem& rs, const CartanType& x);

/// Partition of the given sets into orbits of the diagonal W action,
/// returned as lists of input positions.
std::vector<std::vector<int>> oracle_orbits_of_sets(const RootSystem& rs, const std::vector<std::vector<int>>& sets,
                                                    std::uint64_t limit = default_group_limit());

/// Compares class_count with the oracle and checks that dot orbits and
/// W-orbits of underlying sets coincide. Fills certified and oracle_count.
void certify(const RootSystem& rs, ConjugacyClassReport& report, std::uint64_t limit = default_group_limit());

struct PnElement {
  int beta = 0;
  /// The path, starting at beta.
  std::vector<int> gamma;
  friend bool operator==(const PnElement&, const PnElement&) = default;
  friend auto operator<=>(const PnElement&, const PnElement&) = default;
};

std::vector<PnElement> type_a_pn(const RootSystem& rs, int n);

struct TypeAClasses {
  std::vector<PnElement> pn;
  /// Orbits of {1, rho} on pn, as index lists.
  std::vector<std::vector<int>> orbits;
  int class_count = 0;
};

TypeAClasses type_a_classes(const RootSystem& rs, int n);

struct OrthogonalA1Report {
  int n_max = 0;
  /// Positive roots chosen by the greedy tower.
  std::vector<int> greedy;
  /// Inclusion-maximal orthogonal sets of positive roots of the given norm.
  std::vector<std::vector<int>> maximal_sets;
  /// W-orbits of maximal_sets (roots taken up to sign).
  std::vector<std::vector<int>> orbits;
};

/// l2 is a squared root length; throws InputError if no root has it.
OrthogonalA1Report maximal_orthogonal_a1(const RootSystem& rs, const Rat& l2, bool with_oracle = true,
                                         std::uint64_t limit = default_group_limit());

/// Roots of the given norm, grouped by their coefficients on delta, meet the
/// chamber of W_{Pi \ delta} at most once and form a single orbit.
CheckReport check_oshima(const RootSystem& rs);

/// Random checks of the component-restriction and splitting criteria for C^(n).
CheckReport verify_simpcon(const RootSystem& rs, std::uint64_t seed, int samples = 200);

/// Dot-action laws on random tuples in C^(n).
CheckReport verify_dots(const RootSystem& rs, std::uint64_t seed, int samples = 100);

/// For random ordered simple systems b in C^(n), the canonical form of
/// rho_b(b) is rho(b).
CheckReport verify_diagaut(const RootSystem& rs, std::uint64_t seed, int samples = 100);

}  // namespace weylfund
