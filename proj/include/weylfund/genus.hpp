#pragma once

// Gram and Cartan genera of ordered root tuples, their Sym_n types and
// automorphisms, recognition of generalized Cartan matrices, standard genera
// and the fibers R(sigma) of tuples in the fundamental domain.

#include <optional>
#include <string>
#include <vector>

#include "weylfund/diagfund.hpp"

namespace weylfund {

/// An n x n matrix attached to an ordered tuple.
using Genus = MatRat;

enum class GenusKind { Gram, Cartan };

/// (<beta_i, beta_j>).
Genus gram_genus(const RootSystem& rs, const TupleV& t);
/// (<beta_i^vee, beta_j>); every entry must be a root.
Genus cartan_genus(const RootSystem& rs, const TupleV& t);
Genus gram_genus_roots(const RootSystem& rs, const std::vector<int>& roots);
Genus cartan_genus_roots(const RootSystem& rs, const std::vector<int>& roots);

/// The simultaneous permutation with a'_{rho(i), rho(j)} = a_{i,j}.
Genus permute_genus(const Genus& g, const PlacePerm& rho);

constexpr int kGenusSearchBound = 10;

struct GenusType {
  Genus canonical;
  /// canonical(a, b) = g(perm[a], perm[b]).
  std::vector<int> perm;
  std::uint64_t orbit_size = 1;
};

/// Lexicographically minimal row-major representative of the Sym_n orbit.
GenusType genus_type(const Genus& g, int bound = kGenusSearchBound);

/// All rho with permute_genus(g, rho) == g.
std::vector<PlacePerm> automorphism_group(const Genus& g, int bound = kGenusSearchBound);
std::uint64_t automorphism_count(const Genus& g, int bound = kGenusSearchBound);

struct DiagramComponent {
  /// "B3", "A3^(1)", "A5^(2)", or "Other".
  std::string label;
  bool finite = false;
  bool affine = false;
  SimpleType type;  // meaningful when finite
  std::vector<int> vertices;
};

struct DiagramClassification {
  std::vector<DiagramComponent> components;
  bool all_finite() const;
  /// The finite type as a CartanType with components sorted; requires all_finite().
  CartanType finite_type() const;
};

/// Empty unless g is a generalized Cartan matrix.
std::optional<DiagramClassification> classify_gcm(const Genus& g);

/// A linearly independent np set of roots.
bool is_simple_subsystem(const RootSystem& rs, const std::vector<int>& roots);

/// Canonical spelling of a finite type: B2 and C2 are both written B2, the
/// components are sorted.
CartanType normalize_type(const CartanType& t);

/// Rank of the largest type-A standard parabolic subsystem of a Cartan matrix.
int max_a_rank(const Genus& cartan);

Genus standard_genus(const SimpleType& t);
Genus standard_genus(const CartanType& t);
/// Components of t in the order used for the standard reducible genus.
std::vector<SimpleType> standard_order(const CartanType& t);

/// Ordered root tuples in C^(n) with the given genus, sorted by the tuple order.
std::vector<std::vector<int>> enumerate_fiber(const RootSystem& rs, const Genus& sigma, GenusKind kind);

/// (dominant beta_1, distinct beta_2..beta_n in -Pi, each linked to an earlier entry).
std::vector<std::vector<int>> np_graphical_tuples(const RootSystem& rs, int n);

/// Sorts root tuples by the lexicographic order on V^n.
void sort_tuples(const RootSystem& rs, std::vector<std::vector<int>>& tuples);

}  // namespace weylfund
