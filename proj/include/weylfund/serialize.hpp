#pragma once

// JSON encodings. Rationals are strings "p" or "p/q" in lowest terms;
// vectors are arrays of such strings, tuples arrays of vectors.

#include "json.hpp"

#include "weylfund/classify.hpp"

namespace weylfund {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const VecPi& v);
Json to_json(const TupleV& t);
Json to_json(const MatRat& m);

/// Accepts strings ("3", "-1/2", "2/1") or integers.
Rat rat_from_json(const Json& j);
/// Throws InputError on malformed input or entries of the wrong length.
TupleV tuple_from_json(const Json& j, int rank);
TupleV parse_tuple(const std::string& text, int rank);

Json index_json(ParabolicIndex I, int rank);
Json roots_json(const RootSystem& rs, const std::vector<int>& roots);

Json info_json(const RootSystem& rs, std::uint64_t limit);
Json canonical_json(const RootSystem& rs, const CanonicalResult& c);
Json poset_json(const RootSystem& rs, const FacePoset& p);
Json report_json(const RootSystem& rs, const ConjugacyClassReport& r);
Json genus_type_json(const GenusType& gt);
Json check_json(const CheckReport& c);

}  // namespace weylfund
