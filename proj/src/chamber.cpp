#include "weylfund/chamber.hpp"

#include <algorithm>

namespace weylfund {

namespace {

// Applies g <- s o g in place for a root permutation s.
void left_multiply(RootPerm& g, const RootPerm& s) {
  for (auto& e : g) e = s[e];
}

}  // namespace

ReductionResult reduce_to_chamber(const RootSystem& rs, ParabolicIndex I, const VecPi& v) {
  if (static_cast<int>(v.size()) != rs.rank()) throw InputError("vector length does not match the rank");
  auto members = index_members(I);
  ReductionResult res;
  res.image = v;
  RootPerm g = identity_element(rs).perm;
  while (true) {
    int found = -1;
    for (int j : members)
      if (rs.simple_pairing_sign(j, res.image) < 0) {
        found = j;
        break;
      }
    if (found < 0) break;
    // s_j(v) = v - <v, alpha_j^vee> alpha_j
    Rat c;
    for (int k = 0; k < rs.rank(); ++k) {
      int a = rs.cartan_int(found, k);
      if (a != 0 && !res.image[k].is_zero()) c += Rat(a) * res.image[k];
    }
    res.image[found] -= c;
    left_multiply(g, rs.reflection_perm(rs.simple(found)));
    res.word.push_back(found);
  }
  std::reverse(res.word.begin(), res.word.end());
  res.w = make_element(rs, std::move(g));
  for (int j : members)
    if (rs.simple_pairing_sign(j, res.image) == 0) res.stabilizer |= ParabolicIndex{1} << j;
  return res;
}

bool in_chamber(const RootSystem& rs, ParabolicIndex I, const VecPi& v) {
  for (int j : index_members(I))
    if (rs.simple_pairing_sign(j, v) < 0) return false;
  return true;
}

FacetLabel facet_of(const RootSystem& rs, ParabolicIndex I, const VecPi& v) {
  if (static_cast<int>(v.size()) != rs.rank()) throw InputError("vector length does not match the rank");
  FacetLabel f{I, 0};
  for (int j : index_members(I)) {
    int s = rs.simple_pairing_sign(j, v);
    if (s < 0) throw InputError("vector is not in the chamber of W_I");
    if (s == 0) f.J |= ParabolicIndex{1} << j;
  }
  return f;
}

VecPi facet_point(const RootSystem& rs, const FacetLabel& label) {
  if ((label.J & ~label.I) != 0) throw InputError("facet label requires J contained in I");
  VecPi p(rs.rank());
  for (int j : index_members(label.I & ~label.J)) p += rs.coweight(j);
  return p;
}

std::vector<int> dominant_roots(const RootSystem& rs) {
  std::vector<int> out;
  for (int c = 0; c < rs.num_components(); ++c)
    for (int i = 0; i < rs.positive_count(); ++i) {
      if (rs.component_of(i) != c) continue;
      bool dom = true;
      for (int j = 0; j < rs.rank() && dom; ++j) dom = rs.ip(rs.simple(j), i) >= 0;
      if (dom) out.push_back(i);
    }
  return out;
}

SubsystemReduction reduce_in_subsystem(const RootSystem& rs, const std::vector<int>& gamma, const VecPi& v) {
  std::vector<VecPi> scaled;
  for (int g : gamma) scaled.push_back(rs.root(g));
  SubsystemReduction res{identity_element(rs), v};
  RootPerm g = res.w.perm;
  while (true) {
    int found = -1;
    for (std::size_t k = 0; k < gamma.size(); ++k)
      if (rs.inner(scaled[k], res.image).sign() < 0) {
        found = static_cast<int>(k);
        break;
      }
    if (found < 0) break;
    res.image = reflect(rs, gamma[found], res.image);
    left_multiply(g, rs.reflection_perm(gamma[found]));
  }
  res.w = make_element(rs, std::move(g));
  return res;
}

SubsystemLongest subsystem_longest_element(const RootSystem& rs, const std::vector<int>& gamma) {
  make_subsystem(rs, gamma);
  const std::size_t k = gamma.size();
  SubsystemLongest out{identity_element(rs), {}};
  if (k == 0) return out;
  MatRat G(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) G(a, b) = Rat(rs.ip(gamma[a], gamma[b]));
  auto x = solve_linear(G, std::vector<Rat>(k, Rat(1)));
  VecPi v(rs.rank());
  for (std::size_t a = 0; a < k; ++a) v -= (*x)[a] * rs.root(gamma[a]);
  out.w = reduce_in_subsystem(rs, gamma, v).w;
  out.rho.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    int img = rs.negate(out.w.perm[gamma[a]]);
    auto it = std::find(gamma.begin(), gamma.end(), img);
    if (it == gamma.end()) throw std::logic_error("longest element does not permute -Gamma");
    out.rho[a] = static_cast<int>(it - gamma.begin());
  }
  return out;
}

}  // namespace weylfund
