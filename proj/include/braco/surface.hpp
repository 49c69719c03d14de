#pragma once
// Handle descriptions of surfaces in B^4 pushed into the boundary sphere:
// the cellular disoriented complex, the branched-cover complex, and — for
// ribbon surfaces — the cut surface and the virtual-band complex.
//
// A surface is given by 0-handles (disks), 1-handles (bands; the ribbon_word
// lists, in core order, the 0-handles containing the interior arcs of the
// ribbon singularities the band passes through) and 2-handles (each a signed,
// weighted traversal list over the 1-handles).  The cellular complex lives in
// degrees [-1, 2]; its degree-1 boundary follows the same alternating-walk
// rule as tangle overbridges, so a ribbon singularity contributes +-2 to the
// 0-handle containing its interior arc.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
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

struct OneHandle {
  std::string id;
  std::string start;  // zero-handle id
  std::string end;    // zero-handle id
  std::vector<std::string> ribbon_word;  // zero-handles passed through, in order
  int disorientation = 1;
};

struct TwoHandleTraversal {
  std::string one_handle;
  int sign = 1;    // +1 or -1
  int weight = 1;  // 1 for a boundary edge, 2 for an interior edge
};

struct TwoHandle {
  std::string id;
  std::vector<TwoHandleTraversal> traversals;
};

struct SurfaceDescription {
  std::vector<std::string> zero_handles;
  std::vector<OneHandle> one_handles;
  std::vector<TwoHandle> two_handles;
};

// Virtual bands join components of the cut surface; each records the two
// components it attaches to (by canonical component name) and an orientation
// of its core.
struct VirtualBand {
  std::string id;
  std::array<std::string, 2> attaches;
  int orientation = 1;
};

// How often a declared degree-1 generator passes over a virtual band, counted
// with sign in the band's chosen direction.
struct VirtualCrossing {
  std::string generator;
  std::string band;
  long long count = 0;
};

struct VirtualBandData {
  std::vector<std::string> generators;
  std::vector<VirtualBand> bands;
  std::vector<VirtualCrossing> crossings;
};

// ---------------------------------------------------------------------------
// Validation

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

inline ValidationReport validate_surface_description(const SurfaceDescription& s) {
  ValidationReport report;
  std::unordered_map<std::string, std::size_t> zeros;
  for (const std::string& id : s.zero_handles) {
    if (zeros.count(id))
      report.errors.push_back("duplicate zero-handle id '" + id + "'");
    else
      zeros.emplace(id, zeros.size());
  }
  if (s.zero_handles.empty()) report.errors.push_back("surface has no zero-handles");

  std::unordered_map<std::string, std::size_t> ones;
  for (const OneHandle& h : s.one_handles) {
    if (ones.count(h.id))
      report.errors.push_back("duplicate one-handle id '" + h.id + "'");
    else
      ones.emplace(h.id, ones.size());
    if (h.disorientation != 1 && h.disorientation != -1)
      report.errors.push_back("one-handle '" + h.id + "' has disorientation " +
                              std::to_string(h.disorientation) + "; expected +1 or -1");
    auto check = [&](const std::string& ref) {
      if (!zeros.count(ref))
        report.errors.push_back("one-handle '" + h.id + "' references unknown zero-handle '" +
                                ref + "'");
    };
    check(h.start);
    for (const std::string& w : h.ribbon_word) check(w);
    check(h.end);
  }

  std::unordered_set<std::string> two_ids;
  for (const TwoHandle& t : s.two_handles) {
    if (!two_ids.insert(t.id).second)
      report.errors.push_back("duplicate two-handle id '" + t.id + "'");
    for (const TwoHandleTraversal& tr : t.traversals) {
      if (!ones.count(tr.one_handle))
        report.errors.push_back("two-handle '" + t.id + "' references unknown one-handle '" +
                                tr.one_handle + "'");
      if (tr.sign != 1 && tr.sign != -1)
        report.errors.push_back("two-handle '" + t.id + "' has traversal sign " +
                                std::to_string(tr.sign) + "; expected +1 or -1");
      if (tr.weight != 1 && tr.weight != 2)
        report.errors.push_back("two-handle '" + t.id + "' has traversal weight " +
                                std::to_string(tr.weight) + "; expected 1 or 2");
    }
  }

  // Cycle condition: the boundary image of each two-handle must be killed by
  // the degree-1 boundary.  Only meaningful once all references resolve.
  if (report.errors.empty() && !s.two_handles.empty()) {
    IntMatrix d1(s.zero_handles.size(), s.one_handles.size());
    for (std::size_t j = 0; j < s.one_handles.size(); ++j) {
      const OneHandle& h = s.one_handles[j];
      std::vector<std::size_t> stops;
      stops.push_back(zeros.at(h.start));
      for (const std::string& w : h.ribbon_word) stops.push_back(zeros.at(w));
      stops.push_back(zeros.at(h.end));
      detail::add_alternating_walk(d1, j, stops, h.disorientation);
    }
    for (const TwoHandle& t : s.two_handles) {
      IntMatrix chain(s.one_handles.size(), 1);
      for (const TwoHandleTraversal& tr : t.traversals)
        chain(ones.at(tr.one_handle), 0) += Int(tr.sign) * tr.weight;
      if (!(d1 * chain).is_zero())
        report.errors.push_back("two-handle '" + t.id + "' boundary is not a cycle");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Cellular complexes

// Disoriented cellular complex in degrees [-1, 2].
inline ChainComplex build_cellular_complex(const SurfaceDescription& s) {
  ValidationReport report = validate_surface_description(s);
  if (!report.ok()) report.throw_errors();

  std::unordered_map<std::string, std::size_t> zeros, ones;
  for (const std::string& id : s.zero_handles) zeros.emplace(id, zeros.size());
  for (const OneHandle& h : s.one_handles) ones.emplace(h.id, ones.size());
  const std::size_t n0 = s.zero_handles.size(), n1 = s.one_handles.size(),
                    n2 = s.two_handles.size();

  IntMatrix eps(1, n0);
  for (std::size_t j = 0; j < n0; ++j) eps(0, j) = 1;

  IntMatrix d1(n0, n1);
  for (std::size_t j = 0; j < n1; ++j) {
    const OneHandle& h = s.one_handles[j];
    std::vector<std::size_t> stops;
    stops.push_back(zeros.at(h.start));
    for (const std::string& w : h.ribbon_word) stops.push_back(zeros.at(w));
    stops.push_back(zeros.at(h.end));
    detail::add_alternating_walk(d1, j, stops, h.disorientation);
  }

  IntMatrix d2(n1, n2);
  for (std::size_t j = 0; j < n2; ++j)
    for (const TwoHandleTraversal& tr : s.two_handles[j].traversals)
      d2(ones.at(tr.one_handle), j) += Int(tr.sign) * tr.weight;

  return ChainComplex(-1, {1, n0, n1, n2}, {eps, d1, d2});
}

// Chain complex of the double cover of B^4 branched along the surface, in
// degrees [0, 3]: two lifts of the basepoint, then one cell per 0-, 1- and
// 2-handle with the disoriented boundaries shifted up one degree.
inline ChainComplex build_surface_cover_complex(const SurfaceDescription& s) {
  ChainComplex dc = build_cellular_complex(s);
  const std::size_t n0 = dc.rank_at(0);
  IntMatrix d1(2, n0);
  for (std::size_t j = 0; j < n0; ++j) {
    d1(0, j) = 1;
    d1(1, j) = -1;
  }
  return ChainComplex(0, {2, n0, dc.rank_at(1), dc.rank_at(2)},
                      {d1, dc.boundary_at(1), dc.boundary_at(2)});
}

struct SurfaceHomologyReport {
  std::size_t zero_handle_count = 0;
  std::size_t one_handle_count = 0;
  std::size_t two_handle_count = 0;
  AbelianGroup dh_minus_1, dh_0, dh_1, dh_2;
};

inline SurfaceHomologyReport surface_homology(const SurfaceDescription& s) {
  ChainComplex c = build_cellular_complex(s);
  SurfaceHomologyReport r;
  r.zero_handle_count = s.zero_handles.size();
  r.one_handle_count = s.one_handles.size();
  r.two_handle_count = s.two_handles.size();
  r.dh_minus_1 = c.homology_at(-1);
  r.dh_0 = c.homology_at(0);
  r.dh_1 = c.homology_at(1);
  r.dh_2 = c.homology_at(2);
  return r;
}

// ---------------------------------------------------------------------------
// Cut surface
//
// Cutting a ribbon surface along its ribbon singularities splits each band
// with r passes into r+1 segments, named "<band>:0" .. "<band>:r" from the
// start.  The first segment keeps the start disk, the last keeps the end disk
// (with r = 0 a single segment bridges both); passes never glue anything.

struct CutComponentInfo {
  std::string name;                 // canonical: smallest member name, disks first
  std::vector<std::string> pieces;  // sorted member names
  bool exempt = false;              // topological disk carrying exactly two cut ends
  bool has_interior_arc = false;    // contains a 0-handle some band passes through
};

inline std::vector<CutComponentInfo> cut_surface_components(const SurfaceDescription& s) {
  ValidationReport report = validate_surface_description(s);
  if (!report.ok()) report.throw_errors();

  std::vector<std::string> piece_names;       // disks, then segments per band
  std::vector<bool> piece_is_disk;
  std::vector<int> piece_cut_ends;
  std::unordered_map<std::string, std::size_t> disk_index;
  for (const std::string& id : s.zero_handles) {
    disk_index.emplace(id, piece_names.size());
    piece_names.push_back(id);
    piece_is_disk.push_back(true);
    piece_cut_ends.push_back(0);
  }
  std::vector<std::array<std::size_t, 2>> glue_edges;
  for (const OneHandle& h : s.one_handles) {
    const std::size_t r = h.ribbon_word.size();
    const std::size_t first = piece_names.size();
    for (std::size_t i = 0; i <= r; ++i) {
      piece_names.push_back(h.id + ":" + std::to_string(i));
      piece_is_disk.push_back(false);
      piece_cut_ends.push_back((i > 0 ? 1 : 0) + (i < r ? 1 : 0));
    }
    glue_edges.push_back({disk_index.at(h.start), first});
    glue_edges.push_back({disk_index.at(h.end), first + r});
  }

  detail::UnionFind uf(piece_names.size());
  for (const auto& e : glue_edges) uf.unite(e[0], e[1]);

  struct Accum {
    std::vector<std::size_t> members;
    std::size_t edge_count = 0;
    int cut_ends = 0;
    bool interior = false;
  };
  std::map<std::size_t, Accum> by_root;
  for (std::size_t p = 0; p < piece_names.size(); ++p) {
    Accum& a = by_root[uf.find(p)];
    a.members.push_back(p);
    a.cut_ends += piece_cut_ends[p];
  }
  for (const auto& e : glue_edges) ++by_root[uf.find(e[0])].edge_count;
  for (const OneHandle& h : s.one_handles)
    for (const std::string& w : h.ribbon_word)
      by_root[uf.find(disk_index.at(w))].interior = true;

  std::vector<CutComponentInfo> out;
  for (auto& [root, a] : by_root) {
    CutComponentInfo info;
    std::vector<std::string> disk_names, segment_names;
    for (std::size_t p : a.members)
      (piece_is_disk[p] ? disk_names : segment_names).push_back(piece_names[p]);
    std::sort(disk_names.begin(), disk_names.end());
    std::sort(segment_names.begin(), segment_names.end());
    info.name = disk_names.empty() ? segment_names.front() : disk_names.front();
    info.pieces = disk_names;
    info.pieces.insert(info.pieces.end(), segment_names.begin(), segment_names.end());
    // A tree of disks glued along arcs is a disk; a gluing cycle is not.
    info.exempt = (a.members.size() == a.edge_count + 1) && a.cut_ends == 2;
    info.has_interior_arc = a.interior;
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end(),
            [](const CutComponentInfo& a, const CutComponentInfo& b) { return a.name < b.name; });
  return out;
}

// ---------------------------------------------------------------------------
// Virtual-band complex
//
// For a ribbon surface (no 2-handles) with disconnected cut surface or ribbon
// singularities, a set of virtual bands turns the degree-1 generators into a
// two-term complex: degree 1 is free on the declared generators, degree 0 on
// the virtual bands, and the boundary is the supplied table of signed pass
// counts.  The bands must
//   (i)   touch every component that is not a disk with two cut ends,
//   (ii)  touch every component containing an interior arc, and
//   (iii) connect the touched components into one piece.
// An empty band set is accepted only when the cut surface is connected and
// carries no ribbon singularities at all.

inline ChainComplex build_virtual_band_complex(const SurfaceDescription& ribbon,
                                               const VirtualBandData& v) {
  if (!ribbon.two_handles.empty())
    throw validation_error("virtual-band complex requires a ribbon description (no two-handles)");
  std::vector<CutComponentInfo> components = cut_surface_components(ribbon);

  ValidationReport report;
  std::unordered_map<std::string, std::size_t> comp_index;
  for (std::size_t i = 0; i < components.size(); ++i) comp_index.emplace(components[i].name, i);

  std::unordered_map<std::string, std::size_t> band_index;
  std::vector<std::unordered_set<std::size_t>> touched_by;  // band -> components
  for (const VirtualBand& b : v.bands) {
    if (band_index.count(b.id))
      report.errors.push_back("duplicate virtual band id '" + b.id + "'");
    else
      band_index.emplace(b.id, band_index.size());
    if (b.orientation != 1 && b.orientation != -1)
      report.errors.push_back("virtual band '" + b.id + "' has orientation " +
                              std::to_string(b.orientation) + "; expected +1 or -1");
    std::unordered_set<std::size_t> ends;
    for (const std::string& c : b.attaches) {
      auto it = comp_index.find(c);
      if (it == comp_index.end())
        report.errors.push_back("virtual band '" + b.id + "' attaches to unknown cut component '" +
                                c + "'");
      else
        ends.insert(it->second);
    }
    touched_by.push_back(std::move(ends));
  }

  std::unordered_map<std::string, std::size_t> gen_index;
  for (const std::string& g : v.generators) {
    if (gen_index.count(g))
      report.errors.push_back("duplicate generator id '" + g + "'");
    else
      gen_index.emplace(g, gen_index.size());
  }
  for (const VirtualCrossing& c : v.crossings) {
    if (!gen_index.count(c.generator))
      report.errors.push_back("crossing references unknown generator '" + c.generator + "'");
    if (!band_index.count(c.band))
      report.errors.push_back("crossing references unknown virtual band '" + c.band + "'");
  }

  if (report.errors.empty()) {
    const bool has_singularities = std::any_of(
        ribbon.one_handles.begin(), ribbon.one_handles.end(),
        [](const OneHandle& h) { return !h.ribbon_word.empty(); });
    if (v.bands.empty()) {
      if (components.size() > 1)
        report.errors.push_back("virtual bands are required: the cut surface is disconnected");
      if (has_singularities)
        report.errors.push_back("virtual bands are required: the surface has ribbon singularities");
    } else {
      std::unordered_set<std::size_t> touched;
      for (const auto& ends : touched_by) touched.insert(ends.begin(), ends.end());
      for (std::size_t i = 0; i < components.size(); ++i) {
        if (touched.count(i)) continue;
        if (!components[i].exempt)
          report.errors.push_back("cut component '" + components[i].name +
                                  "' is not a disk with two cut ends and has no virtual band");
        else if (components[i].has_interior_arc)
          report.errors.push_back("cut component '" + components[i].name +
                                  "' contains an interior arc and has no virtual band");
      }
      detail::UnionFind uf(components.size());
      for (const auto& ends : touched_by) {
        auto it = ends.begin();
        if (it == ends.end()) continue;
        const std::size_t a = *it;
        for (; it != ends.end(); ++it) uf.unite(a, *it);
      }
      std::unordered_set<std::size_t> roots;
      for (std::size_t c : touched) roots.insert(uf.find(c));
      if (roots.size() > 1)
        report.errors.push_back("the virtual bands do not connect the components they touch");
    }
  }
  if (!report.ok()) report.throw_errors();

  IntMatrix boundary(v.bands.size(), v.generators.size());
  for (const VirtualCrossing& c : v.crossings)
    boundary(band_index.at(c.band), gen_index.at(c.generator)) += c.count;
  return ChainComplex(0, {v.bands.size(), v.generators.size()}, {boundary});
}

}  // namespace braco
