#pragma once
// Bridge presentations of tangles and their disoriented chain complexes.
//
// A diagram lists underbridges (the arcs that stay low) and overbridges.  An
// overbridge runs from an underbridge endpoint to another, crossing over a
// recorded sequence of underbridges on the way, and carries a disorientation
// sign.  The complex it generates lives in degrees -1, 0, 1:
//
//   degree  1: one generator per overbridge
//   degree  0: one generator per underbridge
//   degree -1: a single generator; every underbridge maps to it
//
// The degree-1 boundary follows the alternating-walk rule (alternation.hpp).

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "alternation.hpp"
#include "complex.hpp"
#include "intmatrix.hpp"
#include "validation.hpp"

namespace braco {

// ---------------------------------------------------------------------------
// Model

struct Underbridge {
  std::string id;
  // Number of tangle endpoints (points of the tangle on the boundary sphere)
  // carried by this underbridge.  Annotation only; no map depends on it.
  std::optional<int> endpoints;
};

struct Overbridge {
  std::string id;
  std::string start;
  std::vector<std::string> crossings;  // underbridges passed under, in order
  std::string end;
  int disorientation = 1;  // +1 or -1
};

struct BridgeDiagram {
  std::vector<Underbridge> underbridges;
  std::vector<Overbridge> overbridges;
};

// ---------------------------------------------------------------------------
// Validation

inline ValidationReport validate_bridge_diagram(const BridgeDiagram& d) {
  ValidationReport report;
  std::unordered_map<std::string, std::size_t> index;
  for (const Underbridge& u : d.underbridges) {
    if (index.count(u.id))
      report.errors.push_back("duplicate underbridge id '" + u.id + "'");
    else
      index.emplace(u.id, index.size());
    if (u.endpoints && (*u.endpoints < 0 || *u.endpoints > 2))
      report.errors.push_back("underbridge '" + u.id + "' carries " +
                              std::to_string(*u.endpoints) +
                              " tangle endpoints; expected 0, 1 or 2");
  }
  if (d.underbridges.empty()) report.errors.push_back("diagram has no underbridges");

  std::unordered_set<std::string> over_ids;
  std::unordered_set<std::string> met;
  for (const Overbridge& o : d.overbridges) {
    if (!over_ids.insert(o.id).second)
      report.errors.push_back("duplicate overbridge id '" + o.id + "'");
    if (o.disorientation != 1 && o.disorientation != -1)
      report.errors.push_back("overbridge '" + o.id + "' has disorientation " +
                              std::to_string(o.disorientation) + "; expected +1 or -1");
    auto check = [&](const std::string& ref) {
      if (!index.count(ref))
        report.errors.push_back("overbridge '" + o.id + "' references unknown underbridge '" +
                                ref + "'");
      else
        met.insert(ref);
    };
    check(o.start);
    for (const std::string& c : o.crossings) check(c);
    check(o.end);
  }

  for (const Underbridge& u : d.underbridges)
    if (!met.count(u.id))
      report.warnings.push_back("underbridge '" + u.id + "' is not met by any overbridge");
  return report;
}

// ---------------------------------------------------------------------------
// Complexes

// Disoriented complex in degrees [-1, 1].
inline ChainComplex build_tangle_complex(const BridgeDiagram& d) {
  ValidationReport report = validate_bridge_diagram(d);
  if (!report.ok()) report.throw_errors();

  std::unordered_map<std::string, std::size_t> index;
  for (const Underbridge& u : d.underbridges) index.emplace(u.id, index.size());
  const std::size_t nu = d.underbridges.size(), no = d.overbridges.size();

  IntMatrix eps(1, nu);
  for (std::size_t j = 0; j < nu; ++j) eps(0, j) = 1;

  IntMatrix d1(nu, no);
  for (std::size_t j = 0; j < no; ++j) {
    const Overbridge& o = d.overbridges[j];
    std::vector<std::size_t> stops;
    stops.push_back(index.at(o.start));
    for (const std::string& c : o.crossings) stops.push_back(index.at(c));
    stops.push_back(index.at(o.end));
    detail::add_alternating_walk(d1, j, stops, o.disorientation);
  }
  return ChainComplex(-1, {1, nu, no}, {eps, d1});
}

// Chain complex of the double cover of B^3 branched along the tangle, in
// degrees [0, 2]: two lifts of the basepoint, one cell per underbridge whose
// boundary is their difference, and the disoriented degree-1 boundary one
// level up.
inline ChainComplex build_tangle_cover_complex(const BridgeDiagram& d) {
  ChainComplex dc = build_tangle_complex(d);
  const std::size_t nu = dc.rank_at(0), no = dc.rank_at(1);
  IntMatrix d1(2, nu);
  for (std::size_t j = 0; j < nu; ++j) {
    d1(0, j) = 1;
    d1(1, j) = -1;
  }
  return ChainComplex(0, {2, nu, no}, {d1, dc.boundary_at(1)});
}

// ---------------------------------------------------------------------------
// Homology

struct TangleHomologyReport {
  std::size_t underbridge_count = 0;
  std::size_t overbridge_count = 0;
  AbelianGroup h_minus_1, h_0, h_1;
};

inline TangleHomologyReport tangle_homology(const BridgeDiagram& d) {
  ChainComplex c = build_tangle_complex(d);
  TangleHomologyReport r;
  r.underbridge_count = d.underbridges.size();
  r.overbridge_count = d.overbridges.size();
  r.h_minus_1 = c.homology_at(-1);
  r.h_0 = c.homology_at(0);
  r.h_1 = c.homology_at(1);
  return r;
}

}  // namespace braco
