#pragma once

// The stratification of V^n by W-translates of products of facets, its
// face poset, and the character identities attached to it.

#include <cstdint>
#include <string>
#include <vector>

#include "weylfund/diagfund.hpp"

namespace weylfund {

/// S = I_0 >= I_1 >= ... >= I_n.
using IndexSeq = std::vector<ParabolicIndex>;

/// Names the stratum w(X_I), with w a minimal coset representative for W_{I_n}.
struct StratumLabel {
  GroupElement w;
  IndexSeq I;
  friend bool operator==(const StratumLabel& a, const StratumLabel& b) { return a.I == b.I && a.w == b.w; }
  friend auto operator<=>(const StratumLabel& a, const StratumLabel& b) {
    if (auto c = a.I <=> b.I; c != 0) return c;
    return a.w <=> b.w;
  }
};

std::vector<IndexSeq> enumerate_index_seqs(int rank, int n);

std::vector<StratumLabel> enumerate_strata(const RootSystem& rs, int n, std::uint64_t limit = default_group_limit());

/// The label of the stratum containing t.
StratumLabel stratum_of(const RootSystem& rs, const TupleV& t);

/// Sign conditions defining w(X_I) (open) and its closure.
bool in_stratum(const RootSystem& rs, const StratumLabel& F, const TupleV& t);
bool in_closure(const RootSystem& rs, const StratumLabel& F, const TupleV& t);

/// A point of the stratum built from facet_point in every coordinate.
TupleV witness(const RootSystem& rs, const StratumLabel& F);

/// G is contained in the closure of F.
bool closure_contains(const RootSystem& rs, const StratumLabel& F, const StratumLabel& G);

/// One term c(X_Lambda) of the closure recursion: c = w_n ... w_1 and the
/// subsets Lambda_0 >= ... >= Lambda_n as bitmasks over positions in Lambda.
struct ClosureTerm {
  GroupElement c;
  std::vector<std::uint64_t> masks;
};

/// Terms of the closure formula for X_Gamma, with gammas = (Gamma_0, ..., Gamma_n)
/// given as root-index lists and lambda a simple subsystem with W_Gamma in W_Lambda.
std::vector<ClosureTerm> closure_decomposition(const RootSystem& rs, const std::vector<std::vector<int>>& gammas,
                                               const std::vector<int>& lambda,
                                               std::uint64_t limit = default_group_limit());

/// The strata in the closure of F, computed from closure_decomposition with
/// Gamma_k = w(Pi_{I_k}) and Lambda = Pi. Sorted and duplicate-free.
std::vector<StratumLabel> closure_strata(const RootSystem& rs, const StratumLabel& F,
                                         std::uint64_t limit = default_group_limit());

int stratum_dimension(const RootSystem& rs, const StratumLabel& F);

struct FacePoset {
  std::vector<StratumLabel> labels;
  std::vector<int> dims;
  /// leq[a][b]: labels[a] lies in the closure of labels[b].
  std::vector<std::vector<char>> leq;
  /// Covering pairs (lower, upper).
  std::vector<std::pair<int, int>> covers;
  int minimum = -1;
};

/// Refuses with ResourceLimit above max_labels strata.
FacePoset face_poset(const RootSystem& rs, int n, std::uint64_t limit = default_group_limit(),
                     std::size_t max_labels = 4000);

std::string label_name(const StratumLabel& F, const RootSystem& rs);
std::string poset_dot(const RootSystem& rs, const FacePoset& p);

long long euler_characteristic(const RootSystem& rs, int n, std::uint64_t limit = default_group_limit());
inline long long sphere_euler(int dim) { return dim % 2 == 0 ? 2 : 0; }

/// Ind_{W_J}^W(1)(w), counted as fixed points of w on the orbit of a point
/// with stabilizer W_J.
class InducedCharacter {
 public:
  InducedCharacter(const RootSystem& rs, ParabolicIndex J, const std::vector<GroupElement>& group);
  long long operator()(const GroupElement& w) const;
  std::size_t degree() const { return pairings_.size(); }

 private:
  const RootSystem* rs_;
  std::vector<std::vector<int>> pairings_;
};

long long induced_trivial_character(const RootSystem& rs, ParabolicIndex J, const GroupElement& w,
                                    std::uint64_t limit = default_group_limit());
/// |{x in W^J : x^{-1} w x in W_J}|, evaluated literally.
long long induced_trivial_character_literal(const RootSystem& rs, ParabolicIndex J, const GroupElement& w,
                                            const std::vector<GroupElement>& group);

struct CheckReport {
  bool ok = true;
  std::size_t checked = 0;
  std::string message;
};

CheckReport verify_solomon(const RootSystem& rs, std::uint64_t limit = default_group_limit());
CheckReport verify_solomon_power(const RootSystem& rs, int n, std::uint64_t limit = default_group_limit());

}  // namespace weylfund
