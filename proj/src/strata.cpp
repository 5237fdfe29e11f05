#include "weylfund/strata.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace weylfund {

std::vector<IndexSeq> enumerate_index_seqs(int rank, int n) {
  if (n < 1) throw InputError("n must be at least 1");
  if (rank < 0 || rank > 64) throw InputError("rank out of range");
  // drop[j] = first k with j not in I_k, in 1..n+1.
  std::vector<int> drop(rank, 1);
  std::vector<IndexSeq> out;
  while (true) {
    IndexSeq seq(n + 1, 0);
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j < rank; ++j)
        if (drop[j] > k) seq[k] |= ParabolicIndex{1} << j;
    out.push_back(std::move(seq));
    int j = 0;
    while (j < rank && drop[j] == n + 1) drop[j++] = 1;
    if (j == rank) break;
    ++drop[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StratumLabel> enumerate_strata(const RootSystem& rs, int n, std::uint64_t limit) {
  auto group = enumerate_group(rs, limit);
  std::vector<StratumLabel> out;
  for (auto& seq : enumerate_index_seqs(rs.rank(), n)) {
    auto last = index_members(seq.back());
    for (const auto& g : group) {
      bool rep = std::all_of(last.begin(), last.end(), [&](int j) { return rs.is_positive(g.perm[rs.simple(j)]); });
      if (rep) out.push_back(StratumLabel{g, seq});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

StratumLabel stratum_of(const RootSystem& rs, const TupleV& t) {
  if (t.empty()) throw InputError("stratum_of needs n >= 1");
  CanonicalResult c = canonicalize(rs, t);
  GroupElement w = min_coset_rep(rs, inverse(rs, c.w), c.chain.back());
  return StratumLabel{std::move(w), std::move(c.chain)};
}

namespace {

void check_label(const RootSystem& rs, const StratumLabel& F, const TupleV& t) {
  if (F.I.size() != t.size() + 1) throw InputError("tuple length does not match the stratum label");
  for (const auto& v : t)
    if (static_cast<int>(v.size()) != rs.rank()) throw InputError("tuple entry length does not match the rank");
}

bool sign_conditions(const RootSystem& rs, const StratumLabel& F, const TupleV& t, bool closed) {
  check_label(rs, F, t);
  for (std::size_t k = 1; k < F.I.size(); ++k)
    for (int j : index_members(F.I[k - 1])) {
      int s = rs.inner(rs.root(F.w.perm[rs.simple(j)]), t[k - 1]).sign();
      if (index_has(F.I[k], j)) {
        if (s != 0) return false;
      } else if (s < 0 || (!closed && s == 0)) {
        return false;
      }
    }
  return true;
}

}  // namespace

bool in_stratum(const RootSystem& rs, const StratumLabel& F, const TupleV& t) { return sign_conditions(rs, F, t, false); }

bool in_closure(const RootSystem& rs, const StratumLabel& F, const TupleV& t) { return sign_conditions(rs, F, t, true); }

TupleV witness(const RootSystem& rs, const StratumLabel& F) {
  TupleV t;
  for (std::size_t k = 1; k < F.I.size(); ++k) t.push_back(rs.apply(F.w, facet_point(rs, FacetLabel{F.I[k - 1], F.I[k]})));
  return t;
}

bool closure_contains(const RootSystem& rs, const StratumLabel& F, const StratumLabel& G) {
  if (F.I.size() != G.I.size()) throw InputError("strata of different n");
  return in_closure(rs, F, witness(rs, G));
}

std::vector<ClosureTerm> closure_decomposition(const RootSystem& rs, const std::vector<std::vector<int>>& gammas,
                                               const std::vector<int>& lambda, std::uint64_t limit) {
  if (gammas.size() < 2) throw InputError("closure_decomposition needs n >= 1");
  Subsystem lam = make_subsystem(rs, lambda);
  make_subsystem(rs, gammas[0]);
  for (int g : gammas[0])
    if (!lam.in_phi[g]) throw InputError("W_Gamma is not contained in W_Lambda");
  for (std::size_t i = 1; i < gammas.size(); ++i)
    for (int g : gammas[i])
      if (std::find(gammas[i - 1].begin(), gammas[i - 1].end(), g) == gammas[i - 1].end())
        throw InputError("Gamma sequence is not decreasing");

  struct Cached {
    Subsystem sub;
    std::vector<GroupElement> group;
  };
  std::map<std::uint64_t, Cached> cache;
  auto get = [&](std::uint64_t mask) -> const Cached& {
    auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    std::vector<int> roots;
    for (std::size_t k = 0; k < lambda.size(); ++k)
      if ((mask >> k) & 1U) roots.push_back(lambda[k]);
    Cached c{make_subsystem(rs, roots), subsystem_group(rs, roots, limit)};
    return cache.emplace(mask, std::move(c)).first->second;
  };

  const std::uint64_t all = lambda.size() >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << lambda.size()) - 1);
  std::vector<ClosureTerm> states{ClosureTerm{identity_element(rs), {all}}};
  for (std::size_t i = 1; i < gammas.size(); ++i) {
    std::vector<ClosureTerm> next;
    for (const auto& st : states) {
      const std::uint64_t J = st.masks.back();
      const Cached& cur = get(J);
      GroupElement cinv = inverse(rs, st.c);
      for (const auto& y : cur.group) {
        GroupElement yinv = inverse(rs, y);
        bool ok = std::all_of(gammas[i - 1].begin(), gammas[i - 1].end(),
                              [&](int g) { return cur.sub.positive[yinv.perm[cinv.perm[g]]] != 0; });
        if (!ok) continue;
        GroupElement c2 = compose(rs, st.c, y);
        GroupElement c2inv = inverse(rs, c2);
        // Every K contained in J, including J itself and the empty set.
        for (std::uint64_t K = J;; K = (K - 1) & J) {
          const Cached& sk = get(K);
          bool ok2 = std::all_of(gammas[i].begin(), gammas[i].end(),
                                 [&](int g) { return sk.sub.in_phi[c2inv.perm[g]] != 0; });
          if (ok2) {
            ClosureTerm t{c2, st.masks};
            t.masks.push_back(K);
            next.push_back(std::move(t));
          }
          if (K == 0) break;
        }
      }
    }
    states = std::move(next);
  }
  return states;
}

std::vector<StratumLabel> closure_strata(const RootSystem& rs, const StratumLabel& F, std::uint64_t limit) {
  std::vector<std::vector<int>> gammas;
  for (ParabolicIndex I : F.I) {
    std::vector<int> g;
    for (int j : index_members(I)) g.push_back(F.w.perm[rs.simple(j)]);
    gammas.push_back(std::move(g));
  }
  std::vector<int> lambda;
  for (int j = 0; j < rs.rank(); ++j) lambda.push_back(rs.simple(j));
  std::vector<StratumLabel> out;
  for (auto& t : closure_decomposition(rs, gammas, lambda, limit)) {
    IndexSeq seq(t.masks.begin(), t.masks.end());
    out.push_back(StratumLabel{min_coset_rep(rs, t.c, seq.back()), seq});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int stratum_dimension(const RootSystem& rs, const StratumLabel& F) {
  int d = static_cast<int>(F.I.size() - 1) * rs.rank();
  for (std::size_t k = 1; k < F.I.size(); ++k) d -= index_size(F.I[k]);
  return d;
}

FacePoset face_poset(const RootSystem& rs, int n, std::uint64_t limit, std::size_t max_labels) {
  FacePoset p;
  p.labels = enumerate_strata(rs, n, limit);
  const std::size_t L = p.labels.size();
  if (L > max_labels)
    throw ResourceLimit("face poset has " + std::to_string(L) + " strata, above the limit " + std::to_string(max_labels));
  std::vector<TupleV> wit;
  for (const auto& F : p.labels) {
    p.dims.push_back(stratum_dimension(rs, F));
    wit.push_back(witness(rs, F));
  }
  p.leq.assign(L, std::vector<char>(L, 0));
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b) p.leq[a][b] = a == b || in_closure(rs, p.labels[b], wit[a]);
  for (std::size_t a = 0; a < L; ++a) {
    bool is_min = true;
    for (std::size_t b = 0; b < L && is_min; ++b) is_min = p.leq[a][b];
    if (is_min) p.minimum = static_cast<int>(a);
  }
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b) {
      if (a == b || !p.leq[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < L && cover; ++c)
        if (c != a && c != b && p.leq[a][c] && p.leq[c][b]) cover = false;
      if (cover) p.covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return p;
}

std::string label_name(const StratumLabel& F, const RootSystem& rs) {
  std::ostringstream os;
  os << "w=" << word_str(reduced_word(rs, F.w)) << ";I=[";
  for (std::size_t k = 0; k < F.I.size(); ++k) os << (k ? "," : "") << F.I[k];
  os << ']';
  return os.str();
}

std::string poset_dot(const RootSystem& rs, const FacePoset& p) {
  std::ostringstream os;
  os << "digraph strata {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t a = 0; a < p.labels.size(); ++a)
    os << "  \"" << label_name(p.labels[a], rs) << "\" [dim=" << p.dims[a] << "];\n";
  for (auto [lo, hi] : p.covers)
    os << "  \"" << label_name(p.labels[lo], rs) << "\" -> \"" << label_name(p.labels[hi], rs) << "\";\n";
  os << "}\n";
  return os.str();
}

long long euler_characteristic(const RootSystem& rs, int n, std::uint64_t limit) {
  long long chi = 0;
  for (const auto& F : enumerate_strata(rs, n, limit)) {
    bool bottom = std::all_of(F.I.begin(), F.I.end(), [&](ParabolicIndex I) { return I == full_index(rs.rank()); });
    if (bottom) continue;
    int N = stratum_dimension(rs, F) - 1;
    chi += (N % 2 == 0) ? 1 : -1;
  }
  return chi;
}

InducedCharacter::InducedCharacter(const RootSystem& rs, ParabolicIndex J, const std::vector<GroupElement>& group)
    : rs_(&rs) {
  auto members = index_members(J);
  // c[r] = <beta_r, p_J> where p_J is the sum of the coweights outside J.
  std::vector<int> c(rs.num_roots(), 0);
  for (int r = 0; r < rs.num_roots(); ++r)
    for (int k = 0; k < rs.rank(); ++k)
      if (!index_has(J, k)) c[r] += rs.coords(r)[k];
  for (const auto& x : group) {
    bool rep = std::all_of(members.begin(), members.end(), [&](int j) { return rs.is_positive(x.perm[rs.simple(j)]); });
    if (!rep) continue;
    GroupElement xinv = inverse(rs, x);
    std::vector<int> h(rs.num_roots());
    for (int r = 0; r < rs.num_roots(); ++r) h[r] = c[xinv.perm[r]];
    pairings_.push_back(std::move(h));
  }
}

long long InducedCharacter::operator()(const GroupElement& w) const {
  GroupElement winv = inverse(*rs_, w);
  long long count = 0;
  for (const auto& h : pairings_) {
    bool fixed = true;
    for (int j = 0; j < rs_->rank() && fixed; ++j) fixed = h[winv.perm[rs_->simple(j)]] == h[rs_->simple(j)];
    if (fixed) ++count;
  }
  return count;
}

long long induced_trivial_character(const RootSystem& rs, ParabolicIndex J, const GroupElement& w, std::uint64_t limit) {
  return InducedCharacter(rs, J, enumerate_group(rs, limit))(w);
}

long long induced_trivial_character_literal(const RootSystem& rs, ParabolicIndex J, const GroupElement& w,
                                            const std::vector<GroupElement>& group) {
  auto members = index_members(J);
  long long count = 0;
  for (const auto& x : group) {
    bool rep = std::all_of(members.begin(), members.end(), [&](int j) { return rs.is_positive(x.perm[rs.simple(j)]); });
    if (!rep) continue;
    GroupElement conj = compose(rs, inverse(rs, x), compose(rs, w, x));
    if (in_parabolic(rs, conj, J)) ++count;
  }
  return count;
}

namespace {

std::vector<InducedCharacter> all_characters(const RootSystem& rs, const std::vector<GroupElement>& group) {
  std::vector<InducedCharacter> chars;
  const ParabolicIndex S = full_index(rs.rank());
  for (ParabolicIndex J = 0;; ++J) {
    chars.emplace_back(rs, J, group);
    if (J == S) break;
  }
  return chars;
}

}  // namespace

CheckReport verify_solomon(const RootSystem& rs, std::uint64_t limit) {
  auto group = enumerate_group(rs, limit);
  auto chars = all_characters(rs, group);
  CheckReport rep;
  for (const auto& w : group) {
    long long sum = 0;
    for (std::size_t J = 0; J < chars.size(); ++J)
      sum += (index_size(J) % 2 ? -1 : 1) * chars[J](w);
    long long det = w.length % 2 ? -1 : 1;
    ++rep.checked;
    if (sum != det && rep.ok) {
      rep.ok = false;
      rep.message = "w=" + word_str(reduced_word(rs, w)) + ": det " + std::to_string(det) + " but alternating sum " +
                    std::to_string(sum);
    }
  }
  return rep;
}

CheckReport verify_solomon_power(const RootSystem& rs, int n, std::uint64_t limit) {
  auto group = enumerate_group(rs, limit);
  auto chars = all_characters(rs, group);
  const int S = rs.rank();
  std::vector<long long> coeff(chars.size(), 0);
  for (const auto& seq : enumerate_index_seqs(S, n)) {
    int total = 0;
    for (std::size_t k = 1; k < seq.size(); ++k) total += index_size(seq[k]);
    coeff[seq.back()] += total % 2 ? -1 : 1;
  }
  CheckReport rep;
  for (std::size_t J = 0; J < coeff.size(); ++J) {
    long long expect;
    if (J == full_index(S))
      expect = (n * S) % 2 ? -1 : 1;
    else if (n % 2 == 0)
      expect = 0;
    else
      expect = index_size(J) % 2 ? -1 : 1;
    if (coeff[J] != expect && rep.ok) {
      rep.ok = false;
      rep.message = "coefficient for I_n=" + std::to_string(J) + " is " + std::to_string(coeff[J]) + ", expected " +
                    std::to_string(expect);
    }
  }
  for (const auto& w : group) {
    long long sum = 0;
    for (std::size_t J = 0; J < chars.size(); ++J)
      if (coeff[J] != 0) sum += coeff[J] * chars[J](w);
    long long det = (w.length % 2 && n % 2) ? -1 : 1;
    ++rep.checked;
    if (sum != det && rep.ok) {
      rep.ok = false;
      rep.message = "w=" + word_str(reduced_word(rs, w)) + ": det^n " + std::to_string(det) + " but sum " +
                    std::to_string(sum);
    }
  }
  return rep;
}

}  // namespace weylfund
