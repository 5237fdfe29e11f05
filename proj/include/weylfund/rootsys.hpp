#pragma once

// Finite crystallographic root systems, their Weyl groups and coset
// representatives.
//
// Simple roots follow the Bourbaki numbering for every family. In E_n the
// branch root is alpha_2 attached to alpha_4; in G_2 alpha_1 is long. Within
// each irreducible component long roots have squared length 2.
//
// Roots are indexed 0..2P-1: the P positive roots come first, sorted by
// height and then by decreasing coordinate vector (so alpha_j sits at index
// j-1), and index P+i holds the negative of root i.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylfund/exact.hpp"

namespace weylfund {

struct SimpleType {
  char family = 'A';  // one of A..G
  int rank = 1;
  std::string str() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

struct CartanType {
  std::vector<SimpleType> components;

  /// Parses strings such as "A3", "b2xg2", "A1xA1xD4".
  static CartanType parse(std::string_view text);
  std::string str() const;
  int rank() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Throws InputError when a family/rank pair is not a finite type.
void validate(const SimpleType& t);

/// Simple-root squared lengths and bonds of one component, Bourbaki numbering.
struct DynkinDiagram {
  std::vector<Rat> lengths;
  std::vector<std::pair<int, int>> bonds;
};
DynkinDiagram dynkin_diagram(const SimpleType& t);
/// Cartan matrix of a diagram whose bonds have inner product -max(L_i, L_j)/2.
MatRat cartan_from_diagram(const DynkinDiagram& d);

/// A subset of the simple roots, as a bitmask over their 0-based indices.
using ParabolicIndex = std::uint64_t;

inline ParabolicIndex full_index(int rank) {
  return rank >= 64 ? ~ParabolicIndex{0} : ((ParabolicIndex{1} << rank) - 1);
}
inline bool index_has(ParabolicIndex I, int j) { return (I >> j) & 1U; }
inline int index_size(ParabolicIndex I) { return __builtin_popcountll(I); }
std::vector<int> index_members(ParabolicIndex I);

/// A permutation of root indices.
using RootPerm = std::vector<int>;

class RootSystem;

/// Element of W acting on the root index set; faithful since V is spanned by
/// the simple roots.
struct GroupElement {
  RootPerm perm;
  int length = 0;

  /// Action on simple-root coordinates: column j is the image of alpha_j.
  MatRat matrix(const RootSystem& rs) const;
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.perm == b.perm; }
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.length <=> b.length; c != 0) return c;
    return a.perm <=> b.perm;
  }
};

class RootSystem {
 public:
  static RootSystem build(const CartanType& type);
  static RootSystem build(std::string_view type) { return build(CartanType::parse(type)); }

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  const MatRat& cartan() const { return cartan_; }
  const MatRat& gram() const { return gram_; }
  const std::vector<VecPi>& roots() const { return roots_; }
  const VecPi& root(int i) const { return roots_[i]; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return positive_; }
  bool is_positive(int i) const { return i < positive_; }
  int component_of(int i) const { return component_of_[i]; }
  int num_components() const { return static_cast<int>(component_masks_.size()); }
  ParabolicIndex component_mask(int c) const { return component_masks_[c]; }

  /// Root index of alpha_j (0-based j).
  int simple(int j) const { return j; }
  int negate(int i) const { return i < positive_ ? i + positive_ : i - positive_; }
  /// Index of the root with the given coordinates, or -1.
  int find_root(const VecPi& v) const;
  int find_root(const std::vector<int>& coords) const;

  const std::vector<int>& coords(int i) const { return icoords_[i]; }
  int height(int i) const;
  ParabolicIndex support(int i) const { return support_[i]; }
  const RootPerm& reflection_perm(int i) const { return reflections_[i]; }

  /// Inner products between roots, scaled by scale() to be integers.
  long long ip(int i, int j) const { return ip_[static_cast<std::size_t>(i) * roots_.size() + j]; }
  long long scale() const { return scale_; }
  Rat norm(int i) const { return Rat(ip(i, i)) / Rat(scale_); }
  /// <beta_i^vee, beta_j>.
  int coroot_pair(int i, int j) const { return static_cast<int>(2 * ip(i, j) / ip(i, i)); }
  int cartan_int(int i, int j) const { return icartan_[i * rank_ + j]; }

  Rat inner(const VecPi& u, const VecPi& v) const;
  /// <alpha_j, v>.
  Rat simple_pairing(int j, const VecPi& v) const;
  /// Sign of <alpha_j, v>, computed without building the inner product.
  int simple_pairing_sign(int j, const VecPi& v) const;
  /// Fundamental coweight dual to alpha_j: <alpha_i, w_j> = delta_ij.
  const VecPi& coweight(int j) const { return coweights_[j]; }

  /// Applies a group element to a vector in simple-root coordinates.
  VecPi apply(const GroupElement& g, const VecPi& v) const { return apply(g.perm, v); }
  VecPi apply(const RootPerm& perm, const VecPi& v) const;

  /// |W| from the classified order formulas, saturating at UINT64_MAX.
  std::uint64_t group_order() const;

 private:
  CartanType type_;
  int rank_ = 0;
  MatRat cartan_, gram_;
  std::vector<int> icartan_;
  std::vector<VecPi> roots_;
  std::vector<std::vector<int>> icoords_;
  int positive_ = 0;
  std::vector<int> component_of_;
  std::vector<ParabolicIndex> component_masks_;
  std::vector<ParabolicIndex> support_;
  std::vector<RootPerm> reflections_;
  std::vector<long long> ip_;
  long long scale_ = 1;
  std::vector<VecPi> coweights_;
  std::map<std::vector<int>, int> lookup_;
};

/// s_alpha(v) for the root with the given index.
VecPi reflect(const RootSystem& rs, int alpha_index, const VecPi& v);

/// Group-order limit used when no explicit limit is passed: 200000, or the
/// value of the WEYLFUND_GROUP_LIMIT environment variable.
std::uint64_t default_group_limit();

/// Throws ResourceLimit if |W| exceeds the limit.
void check_group_limit(const RootSystem& rs, std::uint64_t limit);

GroupElement identity_element(const RootSystem& rs);
GroupElement simple_reflection(const RootSystem& rs, int j);
/// a o b (apply b first).
GroupElement compose(const RootSystem& rs, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const RootSystem& rs, const GroupElement& g);
int element_length(const RootSystem& rs, const RootPerm& perm);
GroupElement make_element(const RootSystem& rs, RootPerm perm);
/// Product s_{word[0]} s_{word[1]} ... of simple reflections (0-based).
GroupElement from_word(const RootSystem& rs, const std::vector<int>& word);
/// A reduced word, read left to right as a product of simple reflections.
std::vector<int> reduced_word(const RootSystem& rs, const GroupElement& g);
/// Words print as "s2 s1" (1-based); the identity prints as "".
std::string word_str(const std::vector<int>& word);

/// All of W ordered by (length, permutation).
std::vector<GroupElement> enumerate_group(const RootSystem& rs, std::uint64_t limit = default_group_limit());

/// Membership in the standard parabolic W_J, via the inversion set.
bool in_parabolic(const RootSystem& rs, const GroupElement& g, ParabolicIndex J);

/// W^J = {w : w(alpha_j) > 0 for j in J}, in enumeration order.
std::vector<GroupElement> min_coset_reps(const RootSystem& rs, ParabolicIndex J,
                                         std::uint64_t limit = default_group_limit());

/// The minimal-length element of g W_J.
GroupElement min_coset_rep(const RootSystem& rs, const GroupElement& g, ParabolicIndex J);

/// Root-level data for a simple subsystem Gamma (given by root indices).
struct Subsystem {
  std::vector<int> simple;
  std::vector<char> in_phi;    // membership in Phi_Gamma
  std::vector<char> positive;  // membership in Phi_{Gamma,+}
};

/// Throws InputError if gamma is not a linearly independent np set of roots.
Subsystem make_subsystem(const RootSystem& rs, const std::vector<int>& gamma);

/// W_Gamma, generated by the reflections in gamma, ordered by (length, perm).
std::vector<GroupElement> subsystem_group(const RootSystem& rs, const std::vector<int>& gamma,
                                          std::uint64_t limit = default_group_limit());

/// ^{Gamma'}W_Gamma = {w in W_Gamma : w^{-1}(Gamma') lies in Phi_{Gamma,+}}.
std::vector<GroupElement> min_coset_reps_subgroup(const RootSystem& rs, const std::vector<int>& gamma,
                                                  const std::vector<int>& gamma_prime,
                                                  std::uint64_t limit = default_group_limit());

struct LongestElement {
  GroupElement w;
  /// rho[j] for j in I, with w(alpha_j) = -alpha_{rho[j]}; identity outside I.
  std::vector<int> rho;
};

LongestElement longest_element(const RootSystem& rs, ParabolicIndex I);

}  // namespace weylfund
