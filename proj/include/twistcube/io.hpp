#pragma once

// JSON file formats.
//
//   instance   {"type":"A2","word":[1,2,1],"weight":[2,1]}
//   raw        {"n":2,"c":{"1,2":1},"ell":[3,5]}      omitted c entries are 0
//   census     one {"x":[-1,5],"rho":-1} per line, then
//              {"positive":10,"negative":1,"signed":9}
//   twist      {"untwisted":false,"sigma":"-+-","k":1,"m":[-2,0,2]}
//   walk       {"kind":"hesitant_lambda_walk","positions":[1,3],"subword":[1,1],"minimal":true}

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistcube/cartier.hpp"
#include "twistcube/errors.hpp"
#include "twistcube/rootdata.hpp"
#include "twistcube/twistedcube.hpp"
#include "twistcube/walks.hpp"
#include "twistcube/weightword.hpp"
#include "twistcube/witness.hpp"

namespace twistcube {

using json = nlohmann::ordered_json;

/// A (type, word, weight) triple.
struct Instance {
  LieType type;
  Word word;
  DominantWeight weight;

  TwistData twist_data() const { return derive_twist_data(type, word, weight); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Either shape of an instance file.
using InstanceFile = std::variant<Instance, TwistData>;

namespace detail {

inline void require_only(const json& j, const std::set<std::string>& allowed, const char* what) {
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) throw ParseError(std::string("unexpected key '") + key + "' in " + what);
  }
}

inline std::vector<std::int64_t> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must contain only integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

inline std::size_t parse_index(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  std::size_t v = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    v = v * 10 + static_cast<std::size_t>(s[pos] - '0');
    if (v > 1'000'000) throw ParseError("c key index too large in '" + s + "'");
    ++pos;
  }
  if (pos == start) throw ParseError("malformed c key '" + s + "', expected \"j,k\"");
  return v;
}

}  // namespace detail

inline json to_json(const Instance& inst) {
  json j;
  j["type"] = inst.type.to_string();
  j["word"] = std::vector<int>(inst.word.letters().begin(), inst.word.letters().end());
  j["weight"] = std::vector<std::int64_t>(inst.weight.coefficients().begin(), inst.weight.coefficients().end());
  return j;
}

inline Instance instance_from_json(const json& j, int max_rank = kDefaultMaxRank) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  detail::require_only(j, {"type", "word", "weight"}, "instance");
  if (!j.contains("type") || !j.contains("word") || !j.contains("weight")) {
    throw ParseError("instance needs \"type\", \"word\" and \"weight\"");
  }
  if (!j["type"].is_string()) throw ParseError("\"type\" must be a string like \"A2\"");
  Instance inst;
  inst.type = parse_lie_type(j["type"].get<std::string>(), max_rank);
  std::vector<int> letters;
  for (std::int64_t v : detail::int_array(j["word"], "\"word\"")) {
    if (v < 1 || v > inst.type.rank()) {
      throw ParseError("word letter " + std::to_string(v) + " is not a root index of " + inst.type.to_string());
    }
    letters.push_back(static_cast<int>(v));
  }
  inst.word = Word(std::move(letters));
  std::vector<std::int64_t> weight = detail::int_array(j["weight"], "\"weight\"");
  if (static_cast<int>(weight.size()) != inst.type.rank()) {
    throw ParseError("\"weight\" needs " + std::to_string(inst.type.rank()) + " coefficients");
  }
  for (std::int64_t v : weight) {
    if (v < 0) throw ParseError("weight coefficients must be nonnegative");
  }
  inst.weight = DominantWeight(std::move(weight));
  return inst;
}

inline json to_json(const TwistData& d) {
  json c = json::object();
  for (std::size_t j = 1; j <= d.size(); ++j) {
    for (std::size_t k = j + 1; k <= d.size(); ++k) {
      if (d.c(j, k) != 0) c[std::to_string(j) + "," + std::to_string(k)] = d.c(j, k);
    }
  }
  json out;
  out["n"] = d.size();
  out["c"] = c;
  out["ell"] = std::vector<std::int64_t>(d.ells().begin(), d.ells().end());
  return out;
}

inline TwistData twist_data_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("raw instance must be a JSON object");
  detail::require_only(j, {"n", "c", "ell"}, "raw instance");
  if (!j.contains("n") || !j.contains("ell")) throw ParseError("raw instance needs \"n\" and \"ell\"");
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0 || j["n"].get<std::int64_t>() > 4096) {
    throw ParseError("\"n\" must be a nonnegative integer");
  }
  const auto n = j["n"].get<std::size_t>();
  std::vector<std::int64_t> ell = detail::int_array(j["ell"], "\"ell\"");
  if (ell.size() != n) throw ParseError("\"ell\" must have n entries");
  TwistData d(std::move(ell));
  if (j.contains("c")) {
    if (!j["c"].is_object()) throw ParseError("\"c\" must be an object keyed by \"j,k\"");
    for (const auto& [key, value] : j["c"].items()) {
      std::size_t pos = 0;
      const std::size_t a = detail::parse_index(key, pos);
      if (pos >= key.size() || key[pos] != ',') throw ParseError("malformed c key '" + key + "', expected \"j,k\"");
      ++pos;
      const std::size_t b = detail::parse_index(key, pos);
      if (pos != key.size()) throw ParseError("malformed c key '" + key + "', expected \"j,k\"");
      if (a < 1 || a >= b || b > n) throw ParseError("c key '" + key + "' needs 1 <= j < k <= n");
      if (!value.is_number_integer()) throw ParseError("c entries must be integers");
      d.set_c(a, b, value.get<std::int64_t>());
    }
  }
  return d;
}

/// Accepts exactly one of the two instance shapes.
inline InstanceFile instance_file_from_json(const json& j, int max_rank = kDefaultMaxRank) {
  if (!j.is_object()) throw ParseError("instance file must hold a JSON object");
  const bool rep = j.contains("type") || j.contains("word") || j.contains("weight");
  const bool raw = j.contains("n") || j.contains("c") || j.contains("ell");
  if (rep == raw) throw ParseError("instance file must be either {type, word, weight} or {n, c, ell}");
  if (rep) return instance_from_json(j, max_rank);
  return twist_data_from_json(j);
}

inline InstanceFile read_instance_file(std::istream& in, int max_rank = kDefaultMaxRank) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return instance_file_from_json(j, max_rank);
}

inline void write_census(std::ostream& out, const LatticeCensus& census) {
  for (const auto& p : census.points) out << json{{"x", p.x}, {"rho", p.rho}}.dump() << '\n';
  out << json{{"positive", census.positive}, {"negative", census.negative}, {"signed", census.signed_count()}}.dump()
      << '\n';
}

inline json to_json(const UntwistResult& r) {
  json j;
  j["untwisted"] = r.untwisted;
  if (r.witness) {
    j["sigma"] = r.witness->sigma.to_string();
    j["k"] = r.witness->k;
    j["m"] = r.witness->m;
  }
  return j;
}

inline json to_json(const WalkWitness& w, const Word& word, std::optional<bool> minimal = std::nullopt) {
  json j;
  j["kind"] = std::string(to_string(w.kind));
  j["positions"] = w.positions;
  const Word sub = word.subword(w.positions);
  j["subword"] = std::vector<int>(sub.letters().begin(), sub.letters().end());
  if (minimal) j["minimal"] = *minimal;
  return j;
}

}  // namespace twistcube
