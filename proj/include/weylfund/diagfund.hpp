#pragma once

// The fundamental domain C^(n) for the diagonal action of W on V^n.
//
// A tuple (v_1, ..., v_n) lies in C^(n) when each v_m is in the closed
// chamber of the standard parabolic subgroup fixing v_1, ..., v_{m-1}.
// Canonicalization reduces the entries one at a time, shrinking the
// parabolic as it goes.

#include <vector>

#include "weylfund/chamber.hpp"

namespace weylfund {

using TupleV = std::vector<VecPi>;

/// A permutation of {0, ..., n-1}; perm[i] is the image of i.
using PlacePerm = std::vector<int>;

struct FundCheck {
  bool in_fund = false;
  /// I_0 = start, I_1, ..., I_n; only filled when in_fund.
  std::vector<ParabolicIndex> chain;
};

/// Membership in C^(n) for the parabolic W_start (the whole group by default).
FundCheck is_in_fund(const RootSystem& rs, const TupleV& t, ParabolicIndex start);
FundCheck is_in_fund(const RootSystem& rs, const TupleV& t);

struct CanonicalResult {
  GroupElement w;
  std::vector<int> word;
  TupleV canonical;
  std::vector<ParabolicIndex> chain;
};

CanonicalResult canonicalize(const RootSystem& rs, const TupleV& t, ParabolicIndex start);
CanonicalResult canonicalize(const RootSystem& rs, const TupleV& t);

/// Root-index versions for tuples of roots; no rational arithmetic involved.
struct RootCanonical {
  std::vector<int> canonical;
  std::vector<int> word;
  std::vector<ParabolicIndex> chain;
};
RootCanonical canonicalize_roots(const RootSystem& rs, const std::vector<int>& roots, ParabolicIndex start);
RootCanonical canonicalize_roots(const RootSystem& rs, const std::vector<int>& roots);
bool roots_in_fund(const RootSystem& rs, const std::vector<int>& roots, ParabolicIndex start);
bool roots_in_fund(const RootSystem& rs, const std::vector<int>& roots);

/// Root indices of the entries; throws InputError if some entry is not a root.
std::vector<int> tuple_root_indices(const RootSystem& rs, const TupleV& t);
TupleV roots_tuple(const RootSystem& rs, const std::vector<int>& roots);

/// The maximum of the orbit W t in the lexicographic order on V^n.
TupleV lex_max_oracle(const RootSystem& rs, const TupleV& t, const std::vector<GroupElement>& group);
TupleV lex_max_oracle(const RootSystem& rs, const TupleV& t, std::uint64_t limit = default_group_limit());

/// The place permutation (sigma t)_{sigma(i)} = t_i.
template <class T>
std::vector<T> place_permute(const PlacePerm& sigma, const std::vector<T>& t) {
  std::vector<T> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[sigma[i]] = t[i];
  return out;
}

/// Validates that sigma is a permutation of {0, ..., n-1}.
void check_place_perm(const PlacePerm& sigma, std::size_t n);
/// The transposition of the 1-based positions i and j in Sym_n.
PlacePerm transposition(int n, int i, int j);
PlacePerm compose_places(const PlacePerm& a, const PlacePerm& b);

/// sigma . b = canonical form of sigma b, for b in C^(n).
TupleV dot_action(const RootSystem& rs, const PlacePerm& sigma, const TupleV& b);
std::vector<int> dot_action_roots(const RootSystem& rs, const PlacePerm& sigma, const std::vector<int>& b);

/// rho = -omega_0 as a permutation of root indices.
std::vector<int> ambient_rho(const RootSystem& rs);

/// (rho(beta_1), ..., rho(beta_n)) for an ordered simple system b in C^(n).
TupleV diagram_rho_image(const RootSystem& rs, const TupleV& b);
/// (rho_b(beta_1), ..., rho_b(beta_n)), with rho_b = -omega_[b].
TupleV rho_b_image(const RootSystem& rs, const TupleV& b);

}  // namespace weylfund
