#ifndef SATLAB_JSON_IO_HPP
#define SATLAB_JSON_IO_HPP

// JSON views of results. Counts are written as decimal strings so that
// consumers limited to 64-bit or double integers never truncate them.

#include <json.hpp>

#include "extremal.hpp"
#include "saturation.hpp"
#include "verify.hpp"

namespace satlab {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const MotifSpec &m) {
  ordered_json j;
  j["kind"] = to_string(m.kind);
  j["size"] = m.size;
  return j;
}

inline ordered_json to_json(const SaturationReport &r, int n) {
  ordered_json j;
  j["n"] = n;
  j["s"] = r.s;
  j["is_free"] = r.is_free;
  j["is_saturated"] = r.is_saturated;
  j["vacuous"] = r.vacuous;
  j["degenerate"] = r.degenerate;
  ordered_json failures = ordered_json::array();
  for (auto [u, v] : r.missing_edge_failures)
    failures.push_back({u, v});
  j["missing_edge_failures"] = std::move(failures);
  return j;
}

/// {n, s, motif:{kind,size}, mode, optimum, extremal, unique, classes, histogram}
inline ordered_json to_json(const ExtremalResult &r) {
  ordered_json j;
  j["n"] = r.n;
  j["s"] = r.s;
  j["motif"] = to_json(r.motif);
  j["mode"] = to_string(r.mode);
  j["optimum"] = r.optimum.to_string();
  ordered_json extremal = ordered_json::array();
  for (const auto &c : r.extremal_graphs)
    extremal.push_back(c.bytes);
  j["extremal"] = std::move(extremal);
  j["unique"] = r.unique;
  j["classes"] = r.saturated_class_count;
  ordered_json hist = ordered_json::object();
  for (const auto &[value, classes] : r.histogram)
    hist[value.to_string()] = classes;
  j["histogram"] = std::move(hist);
  return j;
}

inline ordered_json to_json(const VerifyRow &row) {
  ordered_json j;
  j["n"] = row.n;
  j["formula"] = row.formula ? ordered_json(row.formula->to_string()) : ordered_json(nullptr);
  j["optimum"] = row.optimum.to_string();
  j["classes"] = row.classes;
  j["equal"] = row.equal;
  j["unique"] = row.unique;
  j["split_extremal"] = row.split_extremal;
  j["asserted"] = row.asserted;
  j["pass"] = row.pass;
  return j;
}

inline ordered_json to_json(const ProbeRow &row) {
  ordered_json j;
  j["n"] = row.n;
  j["samples"] = row.samples;
  j["split_value"] = row.split_value.to_string();
  j["sampled_min"] = row.sampled_min.to_string();
  j["min_sampled_edges"] = row.min_sampled_edges;
  j["sampled_min_at_least_split"] = row.sampled_min_at_least_split;
  return j;
}

} // namespace satlab

#endif
