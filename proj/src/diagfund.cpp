#include "weylfund/diagfund.hpp"

#include <algorithm>

namespace weylfund {

namespace {

void check_ranks(const RootSystem& rs, const TupleV& t) {
  for (const auto& v : t)
    if (static_cast<int>(v.size()) != rs.rank()) throw InputError("tuple entry length does not match the rank");
}

}  // namespace

FundCheck is_in_fund(const RootSystem& rs, const TupleV& t, ParabolicIndex start) {
  check_ranks(rs, t);
  FundCheck res;
  std::vector<ParabolicIndex> chain{start};
  ParabolicIndex J = start;
  for (const auto& v : t) {
    ParabolicIndex next = 0;
    for (int j : index_members(J)) {
      int s = rs.simple_pairing_sign(j, v);
      if (s < 0) return res;
      if (s == 0) next |= ParabolicIndex{1} << j;
    }
    J = next;
    chain.push_back(J);
  }
  res.in_fund = true;
  res.chain = std::move(chain);
  return res;
}

FundCheck is_in_fund(const RootSystem& rs, const TupleV& t) { return is_in_fund(rs, t, full_index(rs.rank())); }

CanonicalResult canonicalize(const RootSystem& rs, const TupleV& t, ParabolicIndex start) {
  check_ranks(rs, t);
  CanonicalResult res;
  res.w = identity_element(rs);
  res.chain.push_back(start);
  ParabolicIndex J = start;
  for (const auto& v : t) {
    ReductionResult r = reduce_to_chamber(rs, J, rs.apply(res.w, v));
    if (!r.word.empty()) {
      res.w = compose(rs, r.w, res.w);
      res.word.insert(res.word.begin(), r.word.begin(), r.word.end());
    }
    res.canonical.push_back(std::move(r.image));
    J = r.stabilizer;
    res.chain.push_back(J);
  }
  return res;
}

CanonicalResult canonicalize(const RootSystem& rs, const TupleV& t) { return canonicalize(rs, t, full_index(rs.rank())); }

RootCanonical canonicalize_roots(const RootSystem& rs, const std::vector<int>& roots, ParabolicIndex start) {
  RootCanonical res;
  res.canonical = roots;
  res.chain.push_back(start);
  ParabolicIndex J = start;
  const std::size_t n = roots.size();
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<int> applied;
    while (true) {
      int found = -1;
      for (ParabolicIndex rest = J; rest; rest &= rest - 1) {
        int j = __builtin_ctzll(rest);
        if (rs.ip(rs.simple(j), res.canonical[m]) < 0) {
          found = j;
          break;
        }
      }
      if (found < 0) break;
      const RootPerm& s = rs.reflection_perm(rs.simple(found));
      for (std::size_t k = m; k < n; ++k) res.canonical[k] = s[res.canonical[k]];
      applied.push_back(found);
    }
    res.word.insert(res.word.begin(), applied.rbegin(), applied.rend());
    ParabolicIndex next = 0;
    for (ParabolicIndex rest = J; rest; rest &= rest - 1) {
      int j = __builtin_ctzll(rest);
      if (rs.ip(rs.simple(j), res.canonical[m]) == 0) next |= ParabolicIndex{1} << j;
    }
    J = next;
    res.chain.push_back(J);
  }
  return res;
}

RootCanonical canonicalize_roots(const RootSystem& rs, const std::vector<int>& roots) {
  return canonicalize_roots(rs, roots, full_index(rs.rank()));
}

bool roots_in_fund(const RootSystem& rs, const std::vector<int>& roots, ParabolicIndex start) {
  ParabolicIndex J = start;
  for (int r : roots) {
    ParabolicIndex next = 0;
    for (ParabolicIndex rest = J; rest; rest &= rest - 1) {
      int j = __builtin_ctzll(rest);
      long long p = rs.ip(rs.simple(j), r);
      if (p < 0) return false;
      if (p == 0) next |= ParabolicIndex{1} << j;
    }
    J = next;
  }
  return true;
}

bool roots_in_fund(const RootSystem& rs, const std::vector<int>& roots) {
  return roots_in_fund(rs, roots, full_index(rs.rank()));
}

std::vector<int> tuple_root_indices(const RootSystem& rs, const TupleV& t) {
  std::vector<int> out;
  for (const auto& v : t) {
    int i = rs.find_root(v);
    if (i < 0) throw InputError("tuple entry is not a root");
    out.push_back(i);
  }
  return out;
}

TupleV roots_tuple(const RootSystem& rs, const std::vector<int>& roots) {
  TupleV t;
  for (int r : roots) t.push_back(rs.root(r));
  return t;
}

TupleV lex_max_oracle(const RootSystem& rs, const TupleV& t, const std::vector<GroupElement>& group) {
  check_ranks(rs, t);
  TupleV best = t;
  for (const auto& g : group) {
    TupleV img;
    img.reserve(t.size());
    for (const auto& v : t) img.push_back(rs.apply(g, v));
    if (best < img) best = std::move(img);
  }
  return best;
}

TupleV lex_max_oracle(const RootSystem& rs, const TupleV& t, std::uint64_t limit) {
  return lex_max_oracle(rs, t, enumerate_group(rs, limit));
}

void check_place_perm(const PlacePerm& sigma, std::size_t n) {
  if (sigma.size() != n) throw InputError("permutation size does not match the tuple length");
  std::vector<char> seen(n, 0);
  for (int x : sigma) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || seen[x]) throw InputError("not a permutation");
    seen[x] = 1;
  }
}

PlacePerm transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw InputError("transposition index out of range");
  PlacePerm p(n);
  for (int k = 0; k < n; ++k) p[k] = k;
  std::swap(p[i - 1], p[j - 1]);
  return p;
}

PlacePerm compose_places(const PlacePerm& a, const PlacePerm& b) {
  PlacePerm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

TupleV dot_action(const RootSystem& rs, const PlacePerm& sigma, const TupleV& b) {
  check_place_perm(sigma, b.size());
  if (!is_in_fund(rs, b).in_fund) throw InputError("dot action requires a tuple in the fundamental domain");
  return canonicalize(rs, place_permute(sigma, b)).canonical;
}

std::vector<int> dot_action_roots(const RootSystem& rs, const PlacePerm& sigma, const std::vector<int>& b) {
  check_place_perm(sigma, b.size());
  if (!roots_in_fund(rs, b)) throw InputError("dot action requires a tuple in the fundamental domain");
  return canonicalize_roots(rs, place_permute(sigma, b)).canonical;
}

std::vector<int> ambient_rho(const RootSystem& rs) {
  LongestElement le = longest_element(rs, full_index(rs.rank()));
  std::vector<int> rho(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) rho[i] = rs.negate(le.w.perm[i]);
  return rho;
}

namespace {

std::vector<int> checked_simple_tuple(const RootSystem& rs, const TupleV& b) {
  auto idx = tuple_root_indices(rs, b);
  if (!roots_in_fund(rs, idx)) throw InputError("tuple is not in the fundamental domain");
  make_subsystem(rs, idx);
  return idx;
}

}  // namespace

TupleV diagram_rho_image(const RootSystem& rs, const TupleV& b) {
  auto idx = checked_simple_tuple(rs, b);
  auto rho = ambient_rho(rs);
  for (int& r : idx) r = rho[r];
  return roots_tuple(rs, idx);
}

TupleV rho_b_image(const RootSystem& rs, const TupleV& b) {
  auto idx = checked_simple_tuple(rs, b);
  SubsystemLongest le = subsystem_longest_element(rs, idx);
  std::vector<int> out(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) out[k] = idx[le.rho[k]];
  return roots_tuple(rs, out);
}

}  // namespace weylfund
