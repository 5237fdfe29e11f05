#include "weylfund/serialize.hpp"

namespace weylfund {

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const VecPi& v) {
  Json a = Json::array();
  for (const auto& x : v.coords()) a.push_back(x.str());
  return a;
}

Json to_json(const TupleV& t) {
  Json a = Json::array();
  for (const auto& v : t) a.push_back(to_json(v));
  return a;
}

Json to_json(const MatRat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    a.push_back(row);
  }
  return a;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw InputError("expected a rational string or an integer, got " + j.dump());
}

TupleV tuple_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw InputError("a tuple must be a JSON array of vectors");
  TupleV t;
  for (const auto& v : j) {
    if (!v.is_array()) throw InputError("a vector must be a JSON array");
    if (static_cast<int>(v.size()) != rank)
      throw InputError("vector has " + std::to_string(v.size()) + " coordinates, rank is " + std::to_string(rank));
    VecPi x(rank);
    for (int i = 0; i < rank; ++i) x[i] = rat_from_json(v[i]);
    t.push_back(std::move(x));
  }
  return t;
}

TupleV parse_tuple(const std::string& text, int rank) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON tuple");
  return tuple_from_json(j, rank);
}

Json index_json(ParabolicIndex I, int rank) {
  Json a = Json::array();
  for (int j = 0; j < rank; ++j)
    if (index_has(I, j)) a.push_back(j + 1);
  return a;
}

Json roots_json(const RootSystem& rs, const std::vector<int>& roots) {
  Json a = Json::array();
  for (int r : roots) a.push_back(to_json(rs.root(r)));
  return a;
}

Json info_json(const RootSystem& rs, std::uint64_t limit) {
  Json j;
  j["type"] = rs.type().str();
  j["rank"] = rs.rank();
  j["roots"] = rs.num_roots();
  j["positive_roots"] = rs.positive_count();
  j["group_order"] = rs.group_order();
  // The enumerated order is only reported when it fits the limit.
  if (rs.group_order() <= limit) j["group_order_enumerated"] = enumerate_group(rs, limit).size();
  j["dominant_roots"] = roots_json(rs, dominant_roots(rs));
  j["cartan"] = to_json(rs.cartan());
  j["gram"] = to_json(rs.gram());
  return j;
}

Json canonical_json(const RootSystem& rs, const CanonicalResult& c) {
  Json j;
  j["word"] = word_str(c.word);
  j["canonical"] = to_json(c.canonical);
  Json chain = Json::array();
  for (auto I : c.chain) chain.push_back(index_json(I, rs.rank()));
  j["stabilizer_chain"] = chain;
  return j;
}

Json poset_json(const RootSystem& rs, const FacePoset& p) {
  Json j;
  Json labels = Json::array();
  for (std::size_t a = 0; a < p.labels.size(); ++a) {
    Json l;
    l["name"] = label_name(p.labels[a], rs);
    l["word"] = word_str(reduced_word(rs, p.labels[a].w));
    Json seq = Json::array();
    for (auto I : p.labels[a].I) seq.push_back(index_json(I, rs.rank()));
    l["I"] = seq;
    l["dim"] = p.dims[a];
    Json up = Json::array();
    for (auto [lo, hi] : p.covers)
      if (lo == static_cast<int>(a)) up.push_back(hi);
    l["covered_by"] = up;
    labels.push_back(l);
  }
  j["labels"] = labels;
  Json covers = Json::array();
  for (auto [lo, hi] : p.covers) covers.push_back(Json::array({lo, hi}));
  j["covers"] = covers;
  j["minimum"] = p.minimum;
  return j;
}

Json report_json(const RootSystem& rs, const ConjugacyClassReport& r) {
  Json j;
  j["ambient"] = r.ambient.str();
  j["subsystem"] = r.subsystem_type.str();
  j["genus_kind"] = r.kind == GenusKind::Cartan ? "cartan" : "gram";
  j["class_count"] = r.class_count;
  j["fiber_size"] = r.fiber.size();
  j["distinct_sets"] = r.distinct_sets;
  Json genera = Json::array();
  for (std::size_t g = 0; g < r.genera.size(); ++g) {
    Json e;
    e["genus"] = to_json(r.genera[g]);
    e["generators"] = r.generators[g];
    genera.push_back(e);
  }
  j["genera"] = genera;
  Json fiber = Json::array();
  for (std::size_t i = 0; i < r.fiber.size(); ++i) {
    Json e;
    e["tuple"] = roots_json(rs, r.fiber[i]);
    e["genus"] = r.fiber_genus[i];
    fiber.push_back(e);
  }
  j["fiber"] = fiber;
  j["dot_orbits"] = r.orbits;
  Json reps = Json::array();
  for (std::size_t o = 0; o < r.orbits.size(); ++o) {
    Json e;
    e["set"] = roots_json(rs, r.representative_set(o));
    e["tuple"] = roots_json(rs, r.representative_tuple(o));
    reps.push_back(e);
  }
  j["representatives"] = reps;
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    Json e;
    e["from"] = c.from;
    e["to"] = c.to;
    e["generator"] = c.generator;
    e["word"] = word_str(c.word);
    certs.push_back(e);
  }
  j["certificates"] = certs;
  if (r.certified) {
    j["certified"] = *r.certified;
    j["oracle_class_count"] = *r.oracle_count;
  }
  return j;
}

Json genus_type_json(const GenusType& gt) {
  Json j;
  j["canonical"] = to_json(gt.canonical);
  j["perm"] = gt.perm;
  j["orbit_size"] = gt.orbit_size;
  return j;
}

Json check_json(const CheckReport& c) {
  Json j;
  j["ok"] = c.ok;
  j["checked"] = c.checked;
  if (!c.message.empty()) j["message"] = c.message;
  return j;
}

}  // namespace weylfund
