#pragma once

// Sweeps over (type, word, weight) instances, cross-checking the Cartier-data
// verdict against hesitant lambda-walk avoidance and every witness round trip.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistcube/cartier.hpp"
#include "twistcube/errors.hpp"
#include "twistcube/io.hpp"
#include "twistcube/limits.hpp"
#include "twistcube/rootdata.hpp"
#include "twistcube/twistedcube.hpp"
#include "twistcube/walks.hpp"
#include "twistcube/weightword.hpp"

namespace twistcube {

struct SweepEntry {
  LieType type;
  std::size_t max_length = 0;
  std::optional<std::vector<std::int64_t>> alphabet;   // overrides SweepSpec::alphabet
  std::optional<std::vector<DominantWeight>> weights;  // explicit weights instead of an alphabet
};

struct SweepSpec {
  std::vector<SweepEntry> entries;
  std::vector<std::int64_t> alphabet{0, 1};
  // When samples > 0 each entry contributes that many random instances
  // (length uniform in [0, max_length]) instead of the exhaustive sweep.
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Limits limits;
  std::size_t naive_check_length = 10;  // cross-check the naive detector up to this n
};

struct Counterexample {
  Instance instance;
  std::string reason;
};

struct SweepReport {
  std::size_t instances = 0;
  std::vector<Counterexample> counterexamples;
  std::size_t untwisted_count = 0;
  std::size_t twisted_count = 0;
  std::int64_t wall_ms = 0;

  bool ok() const { return counterexamples.empty(); }
};

struct InstanceOutcome {
  bool untwisted = false;
  std::optional<std::string> discrepancy;
};

using InstanceChecker = std::function<InstanceOutcome(const Instance&, const SweepSpec&)>;

/// Instances of a spec in canonical order: entries in order, then length,
/// then word lexicographically, then weight lexicographically.
inline std::vector<Instance> enumerate_instances(const SweepSpec& spec) {
  std::vector<Instance> out;
  for (const SweepEntry& e : spec.entries) {
    if (e.max_length > spec.limits.max_length) {
      throw CapExceeded("sweep word length " + std::to_string(e.max_length) + " exceeds the cap " +
                        std::to_string(spec.limits.max_length));
    }
    const int r = e.type.rank();
    std::vector<DominantWeight> weights;
    if (e.weights) {
      for (const auto& w : *e.weights) validate_weight(e.type, w);
      weights = *e.weights;
    } else {
      const auto& alpha = e.alphabet ? *e.alphabet : spec.alphabet;
      if (!alpha.empty()) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
        while (true) {
          std::vector<std::int64_t> coeffs;
          for (std::size_t i : idx) coeffs.push_back(alpha[i]);
          weights.emplace_back(std::move(coeffs));
          int pos = r - 1;
          while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == alpha.size()) idx[static_cast<std::size_t>(pos--)] = 0;
          if (pos < 0) break;
        }
      }
    }

    if (spec.samples > 0) {
      std::mt19937_64 rng(spec.seed);
      std::uniform_int_distribution<std::size_t> len_dist(0, e.max_length);
      std::uniform_int_distribution<int> letter_dist(1, r);
      if (weights.empty()) continue;
      std::uniform_int_distribution<std::size_t> weight_dist(0, weights.size() - 1);
      for (std::size_t s = 0; s < spec.samples; ++s) {
        std::vector<int> letters(len_dist(rng));
        for (int& l : letters) l = letter_dist(rng);
        out.push_back({e.type, Word(std::move(letters)), weights[weight_dist(rng)]});
      }
      continue;
    }

    for (std::size_t n = 0; n <= e.max_length; ++n) {
      std::vector<int> letters(n, 1);
      while (true) {
        for (const auto& w : weights) out.push_back({e.type, Word(letters), w});
        std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(n) - 1;
        while (pos >= 0 && ++letters[static_cast<std::size_t>(pos)] > r) letters[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0) break;
      }
    }
  }
  return out;
}

/// Every cross-module property of one instance; the first failure is reported.
inline InstanceOutcome check_instance(const Instance& inst, const SweepSpec& spec = {}) {
  InstanceOutcome out;
  try {
    const TwistData d = inst.twist_data();
    const UntwistResult hy = is_untwisted(d, spec.limits);
    const auto walk = find_hesitant_lambda_walk(inst.type, inst.word, inst.weight);
    out.untwisted = hy.untwisted;

    if (hy.untwisted != !walk.has_value()) {
      out.discrepancy = hy.untwisted ? "untwisted but a hesitant lambda-walk exists"
                                     : "twisted but the word avoids hesitant lambda-walks";
      return out;
    }

    if (!hy.untwisted) {
      const auto& tw = *hy.witness;
      const WalkWitness back = hesitant_walk_from_twist_witness(d, inst.word, tw.sigma, tw.k);
      if (!validates(inst.type, inst.word, inst.weight, back)) {
        out.discrepancy = "walk built from sigma " + tw.sigma.to_string() + " does not validate";
        return out;
      }
      if (!validates(inst.type, inst.word, inst.weight, *walk)) {
        out.discrepancy = "detector witness does not validate";
        return out;
      }
      const WalkWitness small = minimize(inst.type, inst.word, *walk, inst.weight);
      if (!validates(inst.type, inst.word, inst.weight, small) || !is_minimal(inst.type, inst.word, small, inst.weight)) {
        out.discrepancy = "minimized walk is not a minimal hesitant lambda-walk";
        return out;
      }
      witness_sigma_from_walk(d, small.positions);  // throws unless m_{sigma,j0} < 0
    } else {
      const LatticeCensus census = lattice_points(d, spec.limits);
      for (const auto& p : census.points) {
        if (p.rho != 1) {
          out.discrepancy = "untwisted but a lattice point has density " + std::to_string(p.rho);
          return out;
        }
        if (!contains_PD(d, p.x)) {
          out.discrepancy = "untwisted but a lattice point of C lies outside P_D";
          return out;
        }
      }
    }

    if (inst.word.size() <= spec.naive_check_length) {
      const auto naive = find_hesitant_lambda_walk_naive(inst.type, inst.word, inst.weight, spec.limits);
      if (naive.has_value() != walk.has_value()) {
        out.discrepancy = "efficient and naive detectors disagree";
        return out;
      }
      if (naive && !validates(inst.type, inst.word, inst.weight, *naive)) {
        out.discrepancy = "naive detector witness does not validate";
        return out;
      }
    }
  } catch (const std::exception& e) {
    out.discrepancy = std::string("exception: ") + e.what();
  }
  return out;
}

/// Checks every instance of the spec. Outcomes are collected per instance so
/// the report does not depend on `jobs`.
inline SweepReport verify_equivalence(const SweepSpec& spec, unsigned jobs = 1,
                                      const InstanceChecker& checker = check_instance) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Instance> instances = enumerate_instances(spec);
  std::vector<InstanceOutcome> outcomes(instances.size());

  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) outcomes[i] = checker(instances[i], spec);
  };
  if (jobs <= 1 || instances.size() < 2) {
    run(0, instances.size());
  } else {
    const std::size_t workers = std::min<std::size_t>(jobs, instances.size());
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(run, instances.size() * w / workers, instances.size() * (w + 1) / workers);
    }
  }

  SweepReport report;
  report.instances = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (outcomes[i].untwisted) {
      ++report.untwisted_count;
    } else {
      ++report.twisted_count;
    }
    if (outcomes[i].discrepancy) report.counterexamples.push_back({instances[i], *outcomes[i].discrepancy});
  }
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

struct AtlasRow {
  LieType type;
  DominantWeight weight;
  std::size_t length = 0;
  std::size_t total = 0;
  std::size_t avoiding = 0;
};

/// Per (type, weight, length): how many words avoid hesitant lambda-walks.
/// Rows follow the canonical instance order (entry, length, weight).
inline std::vector<AtlasRow> atlas(const SweepSpec& spec) {
  std::vector<AtlasRow> rows;
  for (const Instance& inst : enumerate_instances(spec)) {
    const bool avoids = !find_hesitant_lambda_walk(inst.type, inst.word, inst.weight).has_value();
    AtlasRow* row = nullptr;
    for (auto& r : rows) {
      if (r.type == inst.type && r.weight == inst.weight && r.length == inst.word.size()) row = &r;
    }
    if (row == nullptr) {
      rows.push_back({inst.type, inst.weight, inst.word.size(), 0, 0});
      row = &rows.back();
    }
    ++row->total;
    if (avoids) ++row->avoiding;
  }
  return rows;
}

/// A1-A3, B2-B3, C3 up to length 5, D4 and F4 up to 4, G2 up to 6; weight
/// coefficients {0,1}, or {0,1,2} in rank <= 2.
inline SweepSpec default_sweep_spec() {
  SweepSpec spec;
  const std::pair<const char*, std::size_t> plan[] = {{"A1", 5}, {"A2", 5}, {"A3", 5}, {"B2", 5}, {"B3", 5},
                                                      {"C3", 5}, {"D4", 4}, {"F4", 4}, {"G2", 6}};
  for (const auto& [name, len] : plan) {
    SweepEntry e;
    e.type = parse_lie_type(name);
    e.max_length = len;
    if (e.type.rank() <= 2) e.alphabet = std::vector<std::int64_t>{0, 1, 2};
    spec.entries.push_back(std::move(e));
  }
  return spec;
}

// ---- JSON ----

inline json to_json(const SweepReport& r, bool with_timing = true) {
  json j;
  j["instances"] = r.instances;
  j["counterexamples"] = json::array();
  for (const auto& c : r.counterexamples) {
    json e = to_json(c.instance);
    e["reason"] = c.reason;
    j["counterexamples"].push_back(std::move(e));
  }
  j["untwisted_count"] = r.untwisted_count;
  j["twisted_count"] = r.twisted_count;
  if (with_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

inline json to_json(const AtlasRow& row) {
  return json{{"type", row.type.to_string()},
              {"weight", row.weight.coefficients()},
              {"length", row.length},
              {"total", row.total},
              {"avoiding", row.avoiding}};
}

/// Spec file:
///   {"entries":[{"type":"A2","max_length":4,"alphabet":[0,1],"weights":[[1,0]]}],
///    "alphabet":[0,1],"seed":1,"samples":0,"max_n":20}
/// or the shorthand {"types":["A2","G2"],"max_length":4,...}; {"default":true}
/// starts from the default sweep.
inline SweepSpec sweep_spec_from_json(const json& j, int max_rank = kDefaultMaxRank) {
  if (!j.is_object()) throw ParseError("sweep spec must be a JSON object");
  detail::require_only(j, {"default", "entries", "types", "max_length", "alphabet", "seed", "samples", "max_n"},
                       "sweep spec");
  SweepSpec spec;
  if (j.contains("default")) {
    if (!j["default"].is_boolean()) throw ParseError("\"default\" must be a boolean");
    if (j["default"].get<bool>()) spec = default_sweep_spec();
  }
  if (j.contains("alphabet")) {
    spec.alphabet = detail::int_array(j["alphabet"], "\"alphabet\"");
    for (auto v : spec.alphabet) {
      if (v < 0) throw ParseError("alphabet entries must be nonnegative");
    }
  }
  auto get_size = [&](const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw ParseError(std::string(what) + " must be a nonnegative integer");
    }
    return v.get<std::size_t>();
  };
  if (j.contains("seed")) spec.seed = get_size(j["seed"], "\"seed\"");
  if (j.contains("samples")) spec.samples = get_size(j["samples"], "\"samples\"");
  if (j.contains("max_n")) spec.limits.max_length = get_size(j["max_n"], "\"max_n\"");

  if (j.contains("types")) {
    if (!j["types"].is_array()) throw ParseError("\"types\" must be an array");
    if (!j.contains("max_length")) throw ParseError("\"types\" needs \"max_length\"");
    const std::size_t len = get_size(j["max_length"], "\"max_length\"");
    for (const auto& t : j["types"]) {
      if (!t.is_string()) throw ParseError("\"types\" must contain strings like \"A2\"");
      spec.entries.push_back({parse_lie_type(t.get<std::string>(), max_rank), len, std::nullopt, std::nullopt});
    }
  } else if (j.contains("max_length")) {
    throw ParseError("\"max_length\" only applies with \"types\"");
  }

  if (j.contains("entries")) {
    if (!j["entries"].is_array()) throw ParseError("\"entries\" must be an array");
    for (const auto& e : j["entries"]) {
      if (!e.is_object()) throw ParseError("sweep entries must be objects");
      detail::require_only(e, {"type", "max_length", "alphabet", "weights"}, "sweep entry");
      if (!e.contains("type") || !e["type"].is_string() || !e.contains("max_length")) {
        throw ParseError("sweep entry needs \"type\" and \"max_length\"");
      }
      SweepEntry entry;
      entry.type = parse_lie_type(e["type"].get<std::string>(), max_rank);
      entry.max_length = get_size(e["max_length"], "\"max_length\"");
      if (e.contains("alphabet")) {
        entry.alphabet = detail::int_array(e["alphabet"], "\"alphabet\"");
        for (auto v : *entry.alphabet) {
          if (v < 0) throw ParseError("alphabet entries must be nonnegative");
        }
      }
      if (e.contains("weights")) {
        if (!e["weights"].is_array()) throw ParseError("\"weights\" must be an array of weights");
        entry.weights.emplace();
        for (const auto& w : e["weights"]) {
          auto coeffs = detail::int_array(w, "a weight");
          if (static_cast<int>(coeffs.size()) != entry.type.rank()) {
            throw ParseError("weight for " + entry.type.to_string() + " needs " + std::to_string(entry.type.rank()) +
                             " coefficients");
          }
          for (auto v : coeffs) {
            if (v < 0) throw ParseError("weight coefficients must be nonnegative");
          }
          entry.weights->emplace_back(std::move(coeffs));
        }
      }
      spec.entries.push_back(std::move(entry));
    }
  }

  for (const auto& e : spec.entries) {
    if (e.max_length > spec.limits.max_length) {
      throw ParseError("max_length " + std::to_string(e.max_length) + " for " + e.type.to_string() +
                       " exceeds the sweep cap " + std::to_string(spec.limits.max_length));
    }
  }
  return spec;
}

}  // namespace twistcube
