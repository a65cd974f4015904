#ifndef SATLAB_VERIFY_HPP
#define SATLAB_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "count.hpp"
#include "extremal.hpp"
#include "formulas.hpp"

namespace satlab {

/// ehm: minimum edge count; cliques: minimum K_r count; main: minimum M_k count.
enum class Theorem { ehm, cliques, main };

inline Theorem parse_theorem(const std::string &name) {
  if (name == "ehm")
    return Theorem::ehm;
  if (name == "cliques")
    return Theorem::cliques;
  if (name == "main")
    return Theorem::main;
  throw ParameterError("unknown theorem '" + name + "' (expected ehm, cliques or main)");
}

inline std::string to_string(Theorem t) {
  switch (t) {
  case Theorem::ehm:
    return "ehm";
  case Theorem::cliques:
    return "cliques";
  case Theorem::main:
    return "main";
  }
  return "?";
}

struct VerifyRow {
  int n = 0;
  /// Closed-form value at S_{n,s-2}; empty when the formula is undefined.
  std::optional<Count> formula;
  Count optimum = 0;
  std::uint64_t classes = 0;
  bool equal = false;
  bool unique = false;
  /// certificate(S_{n,s-2}) is among the extremal classes.
  bool split_extremal = false;
  /// Rows checked as hard claims; the rest are report-only.
  bool asserted = false;
  bool pass = true;
};

struct VerifyRequest {
  Theorem theorem = Theorem::ehm;
  int n_lo = 0;
  int n_hi = 0;
  int s = 3;
  /// Motif size: k for main, r for cliques; ignored for ehm.
  int size = 2;
};

inline MotifSpec verify_motif(const VerifyRequest &req) {
  switch (req.theorem) {
  case Theorem::ehm:
    return {MotifKind::clique, 2};
  case Theorem::cliques:
    return {MotifKind::clique, req.size};
  case Theorem::main:
    return {MotifKind::matching, req.size};
  }
  return {};
}

/// Evaluates one row from the enumerated classes for (n, s).
inline VerifyRow verify_row(const VerifyRequest &req, int n,
                            const std::vector<SaturatedClass> &classes) {
  const MotifSpec motif = verify_motif(req);
  const ExtremalResult res = extremal_over(classes, n, req.s, motif, SearchMode::min);

  VerifyRow row;
  row.n = n;
  row.optimum = res.optimum;
  row.classes = res.saturated_class_count;
  row.unique = res.unique;

  if (n >= req.s) {
    switch (req.theorem) {
    case Theorem::ehm:
      row.formula = sat_edges_formula(n, req.s);
      break;
    case Theorem::cliques:
      if (req.size >= 2 && req.size < req.s)
        row.formula = sat_cliques_formula(n, req.size, req.s);
      break;
    case Theorem::main:
      row.formula = matchings_in_split_exact(n, req.s, req.size);
      break;
    }
    const auto split = canonical_certificate(make_split({n, req.s - 2}));
    for (const auto &c : res.extremal_graphs)
      if (c == split)
        row.split_extremal = true;
  }
  row.equal = row.formula && *row.formula == row.optimum;

  row.asserted = n >= req.s && (req.theorem == Theorem::ehm ||
                                (req.theorem == Theorem::main && req.s == 3 && req.size == 2));
  if (row.asserted)
    row.pass = row.equal && row.unique && row.split_extremal;
  return row;
}

inline std::vector<VerifyRow> verify_theorem(const VerifyRequest &req, SearchBudget budget = {}) {
  if (req.n_lo < 1 || req.n_hi < req.n_lo)
    throw ParameterError("n range must satisfy 1 <= lo <= hi");
  if (req.theorem == Theorem::main && req.size < 2)
    throw ParameterError("main theorem rows need k >= 2");
  if (req.theorem == Theorem::cliques && (req.size < 2 || req.size >= req.s))
    throw ParameterError("cliques rows need 2 <= r < s");
  std::vector<VerifyRow> rows;
  for (int n = req.n_lo; n <= req.n_hi; ++n)
    rows.push_back(verify_row(req, n, enumerate_saturated(n, req.s, budget)));
  return rows;
}

} // namespace satlab

#endif
