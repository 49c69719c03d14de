#pragma once
// Signature and determinant invariants computed from band diagrams and the
// homology of the diagram models.
//
// Two signature modes:
//   * boundary_signature: the signature of the boundary link of the surface,
//     sigma(L) = sigma(form) - lk(L, L^F)/2, where the form is the pairing
//     matrix (or its quotient by the capped classes) and lk is taken in the
//     surface framing.  Component orientations must be supplied for exactly
//     the uncapped boundary components.
//   * cobordism_signature_delta: for a diagram read as a cobordism between
//     the group-0 and group-1 sublinks of its boundary,
//     delta = sigma(form) + (lk_0 - lk_1)/2.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "band.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "intmatrix.hpp"
#include "signature.hpp"
#include "smith.hpp"
#include "surface.hpp"
#include "tangle.hpp"

namespace braco {

// ---------------------------------------------------------------------------
// Link signature from a band diagram

struct SignatureReport {
  PairingReport pairing;
  std::vector<std::string> components;      // all boundary components
  std::vector<std::string> capped_components;
  Int framing = 0;                          // lk(L, L^F) over the uncapped components
  long long form_signature = 0;             // sigma of the form actually used
  Int link_signature = 0;                   // sigma(L)
};

inline SignatureReport boundary_signature(const BandDiagram& d) {
  SignatureReport out;
  out.pairing = gl_pairing_matrix(d);
  BoundaryLinking bl = boundary_parallel_linking(d);
  out.components = bl.trace.component_names;
  const std::size_t n = out.components.size();
  std::unordered_map<std::string, std::size_t> comp_index;
  for (std::size_t i = 0; i < n; ++i) comp_index.emplace(out.components[i], i);

  std::set<std::string> capped;
  for (std::size_t c = 0; c < d.capped.size(); ++c) {
    if (d.capped[c].component.empty())
      throw validation_error("capped class #" + std::to_string(c) +
                             " does not name its boundary component");
    if (!comp_index.count(d.capped[c].component))
      throw validation_error("capped class names unknown boundary component '" +
                             d.capped[c].component + "'");
    capped.insert(d.capped[c].component);
  }
  out.capped_components.assign(capped.begin(), capped.end());

  std::vector<int> eps(n, 0);  // 0 marks a capped (excluded) component
  for (const std::string& name : out.components) {
    if (capped.count(name)) continue;
    if (!d.boundary || !d.boundary->orientations.count(name))
      throw validation_error("missing orientation for boundary component '" + name + "'");
    eps[comp_index.at(name)] = d.boundary->orientations.at(name);
  }
  if (d.boundary)
    for (const auto& [name, o] : d.boundary->orientations) {
      if (!comp_index.count(name))
        throw validation_error("orientation given for unknown boundary component '" + name + "'");
      if (capped.count(name))
        throw validation_error("orientation given for capped boundary component '" + name + "'");
    }

  Int twice = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) twice += Int(eps[u]) * eps[v] * bl.twice_lk(u, v);
  if (twice % 4 != 0)
    throw validation_error("the boundary framing lk(L, L~) is not an even integer");
  out.framing = twice / 2;

  const IntMatrix& form =
      out.pairing.capped_quotient ? *out.pairing.capped_quotient : out.pairing.lambda;
  out.form_signature = signature_of_form(form).signature();
  out.link_signature = Int(out.form_signature) - out.framing / 2;
  return out;
}

// ---------------------------------------------------------------------------
// Cobordism signature difference

struct CobordismReport {
  PairingReport pairing;
  std::vector<std::string> components;
  Int lk_bottom = 0, lk_top = 0;  // self-linking of the group-0 / group-1 sublinks
  long long form_signature = 0;
  Int delta = 0;  // sigma(form) + (lk_bottom - lk_top)/2
};

inline CobordismReport cobordism_signature_delta(const BandDiagram& d) {
  for (const Band& b : d.bands)
    for (const BandEvent& e : b.events)
      if (e.kind == BandEvent::Kind::ribbon_pass)
        throw validation_error("cobordism signature does not support ribbon passes");
  if (!d.capped.empty())
    throw validation_error("cobordism signature does not support capped classes");
  if (!d.boundary || !d.boundary->groups)
    throw validation_error("cobordism signature requires boundary groups");

  CobordismReport out;
  out.pairing = gl_pairing_matrix(d);
  BoundaryLinking bl = boundary_parallel_linking(d);
  out.components = bl.trace.component_names;
  const std::size_t n = out.components.size();
  std::unordered_map<std::string, std::size_t> comp_index;
  for (std::size_t i = 0; i < n; ++i) comp_index.emplace(out.components[i], i);

  std::vector<int> eps(n, 0), group(n, -1);
  for (const std::string& name : out.components) {
    if (!d.boundary->orientations.count(name))
      throw validation_error("missing orientation for boundary component '" + name + "'");
    eps[comp_index.at(name)] = d.boundary->orientations.at(name);
    if (!d.boundary->groups->count(name))
      throw validation_error("missing group for boundary component '" + name + "'");
    group[comp_index.at(name)] = d.boundary->groups->at(name);
  }
  for (const auto& [name, o] : d.boundary->orientations)
    if (!comp_index.count(name))
      throw validation_error("orientation given for unknown boundary component '" + name + "'");
  for (const auto& [name, g] : *d.boundary->groups)
    if (!comp_index.count(name))
      throw validation_error("group given for unknown boundary component '" + name + "'");

  auto sublink_lk = [&](int g) -> Int {
    Int twice = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (group[u] == g && group[v] == g) twice += Int(eps[u]) * eps[v] * bl.twice_lk(u, v);
    if (twice % 4 != 0)
      throw validation_error("the group-" + std::to_string(g) +
                             " boundary self-linking is not an even integer");
    return twice / 2;
  };
  out.lk_bottom = sublink_lk(0);
  out.lk_top = sublink_lk(1);
  out.form_signature = signature_of_form(out.pairing.lambda).signature();
  out.delta = Int(out.form_signature) + (out.lk_bottom - out.lk_top) / 2;
  return out;
}

// ---------------------------------------------------------------------------
// Determinants

struct DeterminantReport {
  bool infinite = false;  // the relevant degree-0 homology has positive rank
  Int value = 0;          // torsion order, or |det| of the pairing form
};

inline DeterminantReport determinant_from_group(const AbelianGroup& g) {
  DeterminantReport r;
  if (g.free_rank > 0) {
    r.infinite = true;
    return r;
  }
  r.value = 1;
  for (const Int& t : g.torsion) r.value *= t;
  return r;
}

inline DeterminantReport determinant_of_tangle(const BridgeDiagram& d) {
  return determinant_from_group(build_tangle_complex(d).homology_at(0));
}

inline DeterminantReport determinant_of_surface(const SurfaceDescription& s) {
  return determinant_from_group(build_cellular_complex(s).homology_at(0));
}

inline DeterminantReport determinant_of_band(const BandDiagram& d) {
  PairingReport p = gl_pairing_matrix(d);
  const IntMatrix& form = p.capped_quotient ? *p.capped_quotient : p.lambda;
  DeterminantReport r;
  r.value = abs(form.determinant());
  return r;
}

}  // namespace braco
