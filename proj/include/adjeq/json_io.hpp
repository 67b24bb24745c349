#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "adjeq/adjoint.hpp"
#include "adjeq/equations.hpp"
#include "adjeq/errors.hpp"
#include "adjeq/ring.hpp"
#include "adjeq/root_system.hpp"
#include "adjeq/squares.hpp"
#include "adjeq/verifier.hpp"

namespace adjeq {

// Insertion-ordered so that every export is byte-stable.
using Json = nlohmann::ordered_json;

Json root_to_json(const RootSystem& rs, RootIndex r);
/// Array of l integers; throws InvalidRoot if it is not a root, ParseError on bad shape.
RootIndex root_from_json(const RootSystem& rs, const Json& j);

/// {"root":[...]} or {"zero":s}.
Json weight_to_json(const RootSystem& rs, Weight w);
Weight weight_from_json(const RootSystem& rs, const Json& j);

/// {"sigma":[...], "pairs":[[b1,b-1],[b2,b-2],...]}.
Json square_to_json(const RootSystem& rs, const MaximalSquare& sq);

/// {"kind", "key", "monomials":[{"a","b","c"}]}. The key is {"sigma"} for
/// pi/2 and {"alpha","beta"} otherwise.
Json form_to_json(const RootSystem& rs, const QuadraticForm& f);
QuadraticForm form_from_json(const RootSystem& rs, const Json& j);

/// {"system", "counts":{...}, "two_pi3_pairs":"ordered", "forms":[...]}.
Json equations_to_json(const RootSystem& rs, const EquationSet& eqs);
/// Throws Mismatch when the header names another system.
EquationSet equations_from_json(const RootSystem& rs, const Json& j);

/// Wall time is left out unless given, so equal seeds give equal bytes.
Json report_to_json(const VerificationReport& rep, std::optional<double> wall_seconds = {});

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

template <CommutativeRing R>
Json vector_to_json(const R& ring, const AdjointVector<R>& v) {
  Json coords = Json::array();
  for (const auto& c : v.coords) coords.push_back(ring.to_string(c));
  return Json{{"system", v.system.name()}, {"ring", ring.name()}, {"coords", coords}};
}

template <CommutativeRing R>
AdjointVector<R> vector_from_json(const RootSystem& rs, const R& ring, const Json& j) {
  try {
    if (SystemId::parse(j.at("system").get<std::string>()) != rs.id()) throw Mismatch("vector is for another system");
    if (j.at("ring").get<std::string>() != ring.name()) throw Mismatch("vector is over another ring");
    AdjointVector<R> v{rs.id(), {}};
    for (const auto& c : j.at("coords")) v.coords.push_back(ring.parse(c.get<std::string>()));
    check_compatible(rs, v);
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad vector: ") + e.what());
  }
}

template <CommutativeRing R>
Json word_to_json(const RootSystem& rs, const R& ring, const Word<R>& w) {
  Json out = Json::array();
  for (const auto& x : w) out.push_back(Json{{"rho", root_to_json(rs, x.rho)}, {"xi", ring.to_string(x.xi)}});
  return out;
}

template <CommutativeRing R>
Word<R> word_from_json(const RootSystem& rs, const R& ring, const Json& j) {
  if (!j.is_array()) throw ParseError("word must be an array");
  Word<R> w;
  try {
    for (const auto& x : j) w.push_back({root_from_json(rs, x.at("rho")), ring.parse(x.at("xi").get<std::string>())});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad word: ") + e.what());
  }
  return w;
}

}  // namespace adjeq
