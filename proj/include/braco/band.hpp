#pragma once
// Band presentations: disks in a row with bands attached to their boundaries,
// each band carrying an ordered event list (half twists, crossings with other
// bands, ribbon passes through disks).  From this we compute
//
//   * the boundary link of the surface (as abstract strand cycles),
//   * a generating set for the degree-1 disoriented homology,
//   * the symmetric pairing matrix lambda via weighted crossing diagrams,
//   * the bucketed self-linking data of the boundary with its neighborhood
//     framing, used by the signature formulas.
//
// Orientation conventions are fixed once: band edges are canonically oriented
// along the core (start to end), disk boundary arcs counterclockwise, and a
// crossing contributes its stored sign times the directions of the two
// strands involved.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "intmatrix.hpp"
#include "surface.hpp"
#include "validation.hpp"

namespace braco {

// ---------------------------------------------------------------------------
// Model

struct BandSlot {
  std::string disk;
  long long position = 0;  // boundary position index, counterclockwise
};

struct BandEvent {
  enum class Kind { half_twist, cross, ribbon_pass };
  Kind kind = Kind::half_twist;
  int sign = 1;       // half_twist: twist sign; cross: crossing sign
  std::string with;   // cross: the other band (possibly this one)
  bool over = false;  // cross: whether this band is the over strand
  std::string xid;    // cross: id pairing the two records of one crossing
  std::string disk;   // ribbon_pass: disk passed through
  char config = 'R';  // ribbon_pass: 'L' or 'R'
};

struct Band {
  std::string id;
  BandSlot start_slot, end_slot;
  std::vector<BandEvent> events;
};

// A class of the pairing lattice capped off by a disk in the complement:
// an integer combination of generator bands, optionally naming the boundary
// component the capping disk is glued along.
struct CappedClass {
  std::string component;  // empty when not named
  std::map<std::string, long long> combo;
};

struct BandBoundaryData {
  std::map<std::string, int> orientations;          // component name -> +1/-1
  std::optional<std::map<std::string, int>> groups;  // component name -> 0/1
};

struct BandDiagram {
  std::vector<std::string> disks;
  std::vector<Band> bands;
  std::vector<CappedClass> capped;
  std::optional<BandBoundaryData> boundary;
};

// ---------------------------------------------------------------------------
// Validation

inline ValidationReport validate_band_diagram(const BandDiagram& d) {
  ValidationReport report;
  std::unordered_set<std::string> disk_ids;
  for (const std::string& id : d.disks)
    if (!disk_ids.insert(id).second)
      report.errors.push_back("duplicate disk id '" + id + "'");
  if (d.disks.empty()) report.errors.push_back("diagram has no disks");

  std::unordered_set<std::string> band_ids;
  for (const Band& b : d.bands)
    if (!band_ids.insert(b.id).second)
      report.errors.push_back("duplicate band id '" + b.id + "'");

  std::map<std::string, std::set<long long>> used_positions;
  auto check_slot = [&](const Band& b, const BandSlot& s, const char* which) {
    if (!disk_ids.count(s.disk)) {
      report.errors.push_back("band '" + b.id + "' " + which + " references unknown disk '" +
                              s.disk + "'");
      return;
    }
    if (!used_positions[s.disk].insert(s.position).second)
      report.errors.push_back("disk '" + s.disk + "' has two slots at position " +
                              std::to_string(s.position));
  };

  struct XidRecord {
    std::string band, with;
    int sign = 1;
    bool over = false;
    int seen = 0;
  };
  std::map<std::string, XidRecord> xids;

  for (const Band& b : d.bands) {
    check_slot(b, b.start_slot, "start slot");
    check_slot(b, b.end_slot, "end slot");
    for (const BandEvent& e : b.events) {
      switch (e.kind) {
        case BandEvent::Kind::half_twist:
          if (e.sign != 1 && e.sign != -1)
            report.errors.push_back("band '" + b.id + "' has a half twist of sign " +
                                    std::to_string(e.sign) + "; expected +1 or -1");
          break;
        case BandEvent::Kind::ribbon_pass:
          if (!disk_ids.count(e.disk))
            report.errors.push_back("band '" + b.id + "' passes through unknown disk '" + e.disk +
                                    "'");
          if (e.config != 'L' && e.config != 'R')
            report.errors.push_back("band '" + b.id + "' has a ribbon pass of config '" +
                                    std::string(1, e.config) + "'; expected L or R");
          break;
        case BandEvent::Kind::cross: {
          if (e.sign != 1 && e.sign != -1)
            report.errors.push_back("band '" + b.id + "' has a crossing of sign " +
                                    std::to_string(e.sign) + "; expected +1 or -1");
          if (!band_ids.count(e.with))
            report.errors.push_back("band '" + b.id + "' crosses unknown band '" + e.with + "'");
          if (e.xid.empty()) {
            report.errors.push_back("band '" + b.id + "' has a crossing without an id");
            break;
          }
          auto [it, fresh] = xids.try_emplace(e.xid);
          XidRecord& rec = it->second;
          ++rec.seen;
          if (fresh) {
            rec = {b.id, e.with, e.sign, e.over, 1};
          } else if (rec.seen == 2) {
            if (rec.band != e.with || rec.with != b.id)
              report.errors.push_back("crossing '" + e.xid + "' pairs band '" + rec.band +
                                      "' over '" + rec.with + "' with band '" + b.id + "' over '" +
                                      e.with + "'");
            if (rec.sign != e.sign)
              report.errors.push_back("crossing '" + e.xid + "' has mismatched signs");
            if (rec.over == e.over)
              report.errors.push_back("crossing '" + e.xid +
                                      "' does not have one over and one under record");
          }
          break;
        }
      }
    }
  }
  for (const auto& [xid, rec] : xids)
    if (rec.seen != 2)
      report.errors.push_back("crossing '" + xid + "' appears " + std::to_string(rec.seen) +
                              " times; expected exactly 2");

  for (const CappedClass& c : d.capped)
    for (const auto& [band, coef] : c.combo)
      if (!band_ids.count(band))
        report.errors.push_back("capped class references unknown band '" + band + "'");
  if (d.boundary) {
    for (const auto& [comp, o] : d.boundary->orientations)
      if (o != 1 && o != -1)
        report.errors.push_back("boundary component '" + comp + "' has orientation " +
                                std::to_string(o) + "; expected +1 or -1");
    if (d.boundary->groups)
      for (const auto& [comp, g] : *d.boundary->groups)
        if (g != 0 && g != 1)
          report.errors.push_back("boundary component '" + comp + "' is in group " +
                                  std::to_string(g) + "; expected 0 or 1");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Boundary trace
//
// The boundary of the surface decomposes into strands: per disk either a full
// boundary circle (no slots) or one arc between consecutive slots, plus the
// two edges of every band.  Arcs run counterclockwise, edges from start to
// end.  At a band end the left/right edges splice into the arcs around the
// slot; a band with an odd number of half twists plus ribbon passes swaps its
// two edges at the far end.

struct TracedStrand {
  std::size_t component = 0;
  int direction = 1;  // +1 if traversed along the strand's canonical orientation
};

struct BoundaryTrace {
  std::vector<std::string> component_names;      // "b0", "b1", ... in discovery order
  std::map<std::string, TracedStrand> strands;   // "arc:<disk>:<i>", "circle:<disk>",
                                                 // "edge:<band>:L", "edge:<band>:R"
  std::unordered_map<std::string, std::array<TracedStrand, 2>> band_edges;  // {L, R}
  std::unordered_map<std::string, TracedStrand> wrap_strand;  // disk -> strand past slot 0
};

inline BoundaryTrace trace_boundary(const BandDiagram& d) {
  ValidationReport report = validate_band_diagram(d);
  if (!report.ok()) report.throw_errors();

  struct SlotRef {
    long long position;
    std::size_t band;
    bool is_start;
  };
  std::map<std::string, std::vector<SlotRef>> slots;
  for (std::size_t b = 0; b < d.bands.size(); ++b) {
    slots[d.bands[b].start_slot.disk].push_back({d.bands[b].start_slot.position, b, true});
    slots[d.bands[b].end_slot.disk].push_back({d.bands[b].end_slot.position, b, false});
  }
  for (auto& [disk, list] : slots)
    std::sort(list.begin(), list.end(),
              [](const SlotRef& a, const SlotRef& b) { return a.position < b.position; });

  // Strand table.  Ends are addressed as 2*strand for the tail, 2*strand+1
  // for the head; `match` is the perfect matching given by the junctions.
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> arc_base;  // disk -> first arc strand
  std::unordered_map<std::string, std::size_t> edge_base;  // band -> L strand (R follows)
  for (const std::string& disk : d.disks) {
    const std::size_t k = slots.count(disk) ? slots[disk].size() : 0;
    arc_base[disk] = names.size();
    if (k == 0)
      names.push_back("circle:" + disk);
    else
      for (std::size_t i = 0; i < k; ++i)
        names.push_back("arc:" + disk + ":" + std::to_string(i));
  }
  for (const Band& b : d.bands) {
    edge_base[b.id] = names.size();
    names.push_back("edge:" + b.id + ":L");
    names.push_back("edge:" + b.id + ":R");
  }

  const std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match(2 * names.size(), kNone);
  auto tie_ends = [&](std::size_t a, std::size_t b) {
    if (match[a] != kNone || match[b] != kNone)
      throw internal_error("boundary junction used twice");
    match[a] = b;
    match[b] = a;
  };
  auto tail = [](std::size_t strand) { return 2 * strand; };
  auto head = [](std::size_t strand) { return 2 * strand + 1; };

  for (const std::string& disk : d.disks)
    if (!slots.count(disk) || slots[disk].empty()) {
      const std::size_t c = arc_base[disk];
      tie_ends(head(c), tail(c));  // a free circle closes on itself
    }

  // Flank ends around slot j of a disk with k slots: the incoming arc head
  // (arc j-1) and the outgoing arc tail (arc j).
  auto prev_flank = [&](const std::string& disk, std::size_t j) {
    const std::size_t k = slots[disk].size();
    return head(arc_base[disk] + (j + k - 1) % k);
  };
  auto next_flank = [&](const std::string& disk, std::size_t j) {
    return tail(arc_base[disk] + j);
  };
  auto slot_index = [&](const std::string& disk, std::size_t band, bool is_start) {
    const std::vector<SlotRef>& list = slots[disk];
    for (std::size_t j = 0; j < list.size(); ++j)
      if (list[j].band == band && list[j].is_start == is_start) return j;
    throw internal_error("slot lookup failed");
  };

  for (std::size_t b = 0; b < d.bands.size(); ++b) {
    const Band& band = d.bands[b];
    int parity = 0;
    for (const BandEvent& e : band.events)
      if (e.kind != BandEvent::Kind::cross) ++parity;  // twists and passes both flip sides
    parity %= 2;
    const std::size_t L = edge_base[band.id], R = L + 1;
    const std::size_t js = slot_index(band.start_slot.disk, b, true);
    tie_ends(prev_flank(band.start_slot.disk, js), tail(L));
    tie_ends(next_flank(band.start_slot.disk, js), tail(R));
    const std::size_t je = slot_index(band.end_slot.disk, b, false);
    if (parity == 0) {
      tie_ends(head(L), next_flank(band.end_slot.disk, je));
      tie_ends(head(R), prev_flank(band.end_slot.disk, je));
    } else {
      tie_ends(head(L), prev_flank(band.end_slot.disk, je));
      tie_ends(head(R), next_flank(band.end_slot.disk, je));
    }
  }

  // Walk the boundary.  Seeds follow the canonical enumeration: disks in
  // input order (their strands by index), then band edges L, R.
  std::vector<TracedStrand> traced(names.size());
  std::vector<bool> assigned(names.size(), false);
  BoundaryTrace out;
  auto walk = [&](std::size_t seed) {
    const std::size_t comp = out.component_names.size();
    out.component_names.push_back("b" + std::to_string(comp));
    std::size_t strand = seed;
    int dir = 1;
    do {
      if (assigned[strand]) throw internal_error("boundary trace revisited a strand");
      assigned[strand] = true;
      traced[strand] = {comp, dir};
      const std::size_t exit = dir > 0 ? head(strand) : tail(strand);
      const std::size_t enter = match[exit];
      if (enter == kNone) throw internal_error("boundary trace fell off a strand");
      strand = enter / 2;
      dir = (enter % 2 == 0) ? 1 : -1;
    } while (!(strand == seed && dir == 1));
  };
  std::vector<std::size_t> seeds;
  for (const std::string& disk : d.disks) {
    const std::size_t k = slots.count(disk) ? slots[disk].size() : 0;
    for (std::size_t i = 0; i < std::max<std::size_t>(k, 1); ++i)
      seeds.push_back(arc_base[disk] + i);
  }
  for (const Band& b : d.bands) {
    seeds.push_back(edge_base[b.id]);
    seeds.push_back(edge_base[b.id] + 1);
  }
  for (std::size_t s : seeds)
    if (!assigned[s]) walk(s);

  for (std::size_t s = 0; s < names.size(); ++s) out.strands.emplace(names[s], traced[s]);
  for (const Band& b : d.bands)
    out.band_edges.emplace(b.id, std::array<TracedStrand, 2>{traced[edge_base[b.id]],
                                                             traced[edge_base[b.id] + 1]});
  for (const std::string& disk : d.disks) {
    const std::size_t k = slots.count(disk) ? slots[disk].size() : 0;
    // The wrap-around strand past slot 0: the arc from the highest slot back
    // to the first, or the full circle.
    out.wrap_strand.emplace(disk, traced[arc_base[disk] + (k == 0 ? 0 : k - 1)]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators of the degree-1 homology
//
// When the cut surface stays connected through the disks, the degree-1
// homology of the surface is free on the bands outside a spanning tree of the
// disk graph (pass-free bands only; a band interrupted by a ribbon pass never
// joins two disks of the cut surface).  Each generator cycle runs along its
// band once and closes up through the tree.

struct GeneratorCycle {
  std::string band;  // the generator (non-tree) band
  std::map<std::string, long long> coefficients;  // band -> signed pass count
};

struct GeneratorBasis {
  std::vector<GeneratorCycle> cycles;     // in band input order
  std::vector<std::string> tree_bands;    // in the order chosen
};

inline GeneratorBasis generator_cycles(const BandDiagram& d) {
  ValidationReport report = validate_band_diagram(d);
  if (!report.ok()) report.throw_errors();

  std::unordered_map<std::string, std::size_t> disk_index;
  for (const std::string& disk : d.disks) disk_index.emplace(disk, disk_index.size());

  auto pass_count = [](const Band& b) {
    std::size_t n = 0;
    for (const BandEvent& e : b.events)
      if (e.kind == BandEvent::Kind::ribbon_pass) ++n;
    return n;
  };
  for (const Band& b : d.bands)
    if (pass_count(b) >= 2)
      throw validation_error("band '" + b.id +
                             "' has more than one ribbon pass, so the cut surface is "
                             "disconnected; describe the surface with virtual bands instead");

  // BFS spanning tree of the disk graph over pass-free bands, in input order.
  const std::size_t nd = d.disks.size();
  std::vector<bool> visited(nd, false);
  std::vector<std::size_t> parent_disk(nd, 0), parent_band(nd, 0), depth(nd, 0);
  std::vector<bool> in_tree(d.bands.size(), false);
  std::vector<std::size_t> queue{0};
  visited[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::size_t disk = queue[qi];
    for (std::size_t b = 0; b < d.bands.size(); ++b) {
      if (pass_count(d.bands[b]) != 0) continue;
      const std::size_t s = disk_index.at(d.bands[b].start_slot.disk);
      const std::size_t e = disk_index.at(d.bands[b].end_slot.disk);
      std::size_t other;
      if (s == disk && !visited[e])
        other = e;
      else if (e == disk && !visited[s])
        other = s;
      else
        continue;
      visited[other] = true;
      parent_disk[other] = disk;
      parent_band[other] = b;
      depth[other] = depth[disk] + 1;
      in_tree[b] = true;
      queue.push_back(other);
    }
  }
  if (std::find(visited.begin(), visited.end(), false) != visited.end())
    throw validation_error(
        "the cut surface is disconnected (the disks are not joined by pass-free bands); "
        "describe the surface with virtual bands instead");

  GeneratorBasis out;
  for (std::size_t b = 0; b < d.bands.size(); ++b)
    if (in_tree[b]) out.tree_bands.push_back(d.bands[b].id);

  // A tree step from disk X to disk Y over band t counts +1 if t runs X->Y.
  auto add_tree_step = [&](GeneratorCycle& cycle, std::size_t band, std::size_t from) {
    const bool along = disk_index.at(d.bands[band].start_slot.disk) == from;
    cycle.coefficients[d.bands[band].id] += along ? 1 : -1;
  };

  for (std::size_t b = 0; b < d.bands.size(); ++b) {
    if (in_tree[b]) continue;
    GeneratorCycle cycle;
    cycle.band = d.bands[b].id;
    cycle.coefficients[cycle.band] = 1;
    std::size_t from = disk_index.at(d.bands[b].end_slot.disk);
    std::size_t to = disk_index.at(d.bands[b].start_slot.disk);
    std::vector<std::pair<std::size_t, std::size_t>> down;  // (band, upper disk) on the to-side
    while (from != to) {
      if (depth[from] >= depth[to]) {
        add_tree_step(cycle, parent_band[from], from);
        from = parent_disk[from];
      } else {
        down.push_back({parent_band[to], parent_disk[to]});
        to = parent_disk[to];
      }
    }
    for (auto it = down.rbegin(); it != down.rend(); ++it) add_tree_step(cycle, it->first, it->second);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weighted crossing diagrams
//
// A weighted diagram is a set of abstract strands (each with a multiplicity
// and a direction) plus a list of signed crossings referencing strands by id.
// Crossings may reference strands of another diagram; linking_number counts
// exactly the crossings joining its two operands.

struct WeightedArc {
  std::string id;
  Int weight;
  int direction = 1;
};

struct WeightedCrossing {
  std::string over, under;
  int sign = 1;
};

struct WeightedDiagram {
  std::vector<WeightedArc> arcs;
  std::vector<WeightedCrossing> crossings;
};

// The core of a cycle: one strand per band it passes over, no crossings.
inline WeightedDiagram core_diagram(const BandDiagram& d, const GeneratorCycle& cycle) {
  WeightedDiagram out;
  for (const Band& b : d.bands) {
    auto it = cycle.coefficients.find(b.id);
    if (it == cycle.coefficients.end() || it->second == 0) continue;
    const long long n = it->second;
    out.arcs.push_back({"core:" + b.id, Int(n < 0 ? -n : n), n < 0 ? -1 : 1});
  }
  return out;
}

// The double pushoff of a cycle: two parallel copies pushed off the surface,
// crossing the cores of the bands at every twist, pass and band crossing.
// Crossing entries reference the "core:" strands of a core diagram.
inline WeightedDiagram double_pushoff(const BandDiagram& d, const GeneratorCycle& cycle) {
  auto coeff = [&](const std::string& band) -> long long {
    auto it = cycle.coefficients.find(band);
    return it == cycle.coefficients.end() ? 0 : it->second;
  };

  WeightedDiagram out;
  for (const Band& b : d.bands) {
    const long long n = coeff(b.id);
    if (n == 0) continue;
    const Int w(n < 0 ? -n : n);
    const int dir = n < 0 ? -1 : 1;
    out.arcs.push_back({"tau:" + b.id + ":a", w, dir});
    out.arcs.push_back({"tau:" + b.id + ":b", w, dir});
  }

  // A pushoff copy is reflected every time its band dives through a disk, so
  // a crossing's contribution carries the pass parity accumulated before it
  // on each participating band.
  std::unordered_map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> xid_sites;
  for (std::size_t b = 0; b < d.bands.size(); ++b)
    for (std::size_t e = 0; e < d.bands[b].events.size(); ++e)
      if (d.bands[b].events[e].kind == BandEvent::Kind::cross)
        xid_sites[d.bands[b].events[e].xid].push_back({b, e});
  auto pass_parity_before = [&](std::size_t band, std::size_t event) {
    int p = 1;
    for (std::size_t e = 0; e < event; ++e)
      if (d.bands[band].events[e].kind == BandEvent::Kind::ribbon_pass) p = -p;
    return p;
  };

  auto both_copies = [&](const std::string& band, const std::string& target, int sign) {
    out.crossings.push_back({"tau:" + band + ":a", "core:" + target, sign});
    out.crossings.push_back({"tau:" + band + ":b", "core:" + target, sign});
  };

  std::unordered_set<std::string> done;
  for (std::size_t bi = 0; bi < d.bands.size(); ++bi) {
    const Band& b = d.bands[bi];
    for (std::size_t ei = 0; ei < b.events.size(); ++ei) {
      const BandEvent& e = b.events[ei];
      switch (e.kind) {
        case BandEvent::Kind::half_twist:
          if (coeff(b.id) != 0) both_copies(b.id, b.id, e.sign);
          break;
        case BandEvent::Kind::ribbon_pass:
          if (coeff(b.id) != 0) both_copies(b.id, b.id, e.config == 'R' ? 1 : -1);
          break;
        case BandEvent::Kind::cross: {
          if (!done.insert(e.xid).second) break;
          const auto& sites = xid_sites.at(e.xid);
          if (sites.size() != 2) throw internal_error("unpaired crossing survived validation");
          const int dd = pass_parity_before(sites[0].first, sites[0].second) *
                         pass_parity_before(sites[1].first, sites[1].second);
          const int sign = e.sign * dd;
          const std::string& other = e.with;
          if (other == b.id) {
            if (coeff(b.id) != 0) {
              both_copies(b.id, b.id, sign);
              both_copies(b.id, b.id, sign);
            }
          } else {
            if (coeff(b.id) != 0) both_copies(b.id, other, sign);
            if (coeff(other) != 0) both_copies(other, b.id, sign);
          }
          break;
        }
      }
    }
  }
  return out;
}

// Linking number between the strands of `a` and the strands of `b`: each
// listed crossing joining one strand of each contributes its sign times the
// two directions times the two weights; crossings internal to one diagram or
// involving absent strands are ambient and ignored.
inline Int linking_number(const WeightedDiagram& a, const WeightedDiagram& b) {
  struct StrandData {
    int which;
    Int weight;
    int direction;
  };
  std::unordered_map<std::string, StrandData> strands;
  auto load = [&](const WeightedDiagram& d, int which) {
    for (const WeightedArc& arc : d.arcs)
      if (!strands.emplace(arc.id, StrandData{which, arc.weight, arc.direction}).second)
        throw validation_error("weighted diagrams share strand id '" + arc.id + "'");
  };
  load(a, 0);
  load(b, 1);

  Int twice = 0;
  auto tally = [&](const WeightedDiagram& d) {
    for (const WeightedCrossing& c : d.crossings) {
      auto over = strands.find(c.over);
      auto under = strands.find(c.under);
      if (over == strands.end() || under == strands.end()) continue;      // ambient
      if (over->second.which == under->second.which) continue;            // internal
      twice += Int(c.sign) * over->second.direction * under->second.direction *
               over->second.weight * under->second.weight;
    }
  };
  tally(a);
  tally(b);
  if (twice % 2 != 0)
    throw validation_error("malformed weighted diagram: crossings do not pair up");
  return twice / 2;
}

// ---------------------------------------------------------------------------
// The pairing matrix

struct PairingReport {
  std::vector<std::string> generators;   // band ids, in input order
  std::vector<std::string> tree_bands;
  IntMatrix lambda;                      // symmetric pairing on the generators
  std::optional<IntMatrix> capped_quotient;  // present when capped classes are given
};

inline PairingReport gl_pairing_matrix(const BandDiagram& d) {
  GeneratorBasis basis = generator_cycles(d);
  const std::size_t n = basis.cycles.size();

  PairingReport out;
  out.tree_bands = basis.tree_bands;
  for (const GeneratorCycle& c : basis.cycles) out.generators.push_back(c.band);

  out.lambda = IntMatrix(n, n);
  std::vector<WeightedDiagram> cores;
  cores.reserve(n);
  for (const GeneratorCycle& c : basis.cycles) cores.push_back(core_diagram(d, c));
  for (std::size_t j = 0; j < n; ++j) {
    WeightedDiagram pushoff = double_pushoff(d, basis.cycles[j]);
    for (std::size_t i = 0; i < n; ++i) out.lambda(i, j) = linking_number(cores[i], pushoff);
  }
  if (!out.lambda.is_symmetric()) throw internal_error("pairing matrix is not symmetric");

  if (!d.capped.empty()) {
    std::unordered_map<std::string, std::size_t> gen_index;
    for (std::size_t i = 0; i < n; ++i) gen_index.emplace(out.generators[i], i);
    IntMatrix caps(n, d.capped.size());
    for (std::size_t c = 0; c < d.capped.size(); ++c) {
      for (const auto& [band, coef] : d.capped[c].combo) {
        auto it = gen_index.find(band);
        if (it == gen_index.end())
          throw validation_error("capped class references band '" + band +
                                 "' which is not a pairing generator");
        caps(it->second, c) = coef;
      }
    }
    IntMatrix image = out.lambda * caps;
    for (std::size_t c = 0; c < d.capped.size(); ++c)
      for (std::size_t i = 0; i < n; ++i)
        if (image(i, c) != 0) {
          const std::string label = d.capped[c].component.empty()
                                        ? "#" + std::to_string(c)
                                        : "'" + d.capped[c].component + "'";
          throw validation_error("capped class " + label +
                                 " does not pair to zero with every generator");
        }
    out.capped_quotient = quotient_form(out.lambda, caps);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boundary-parallel linking
//
// Linking data between the boundary link and its pushoff in the surface
// framing, bucketed by (component, component) so callers can apply component
// orientations and grouping afterwards.  Entries hold twice the linking
// contribution; with orientations e the total is
//     lk(L, L^F) = (1/2) * sum_{u,v} e_u e_v twice_lk(u, v).

struct BoundaryLinking {
  BoundaryTrace trace;
  IntMatrix twice_lk;  // component x component, before orientations
};

inline BoundaryLinking boundary_parallel_linking(const BandDiagram& d) {
  BoundaryLinking out{trace_boundary(d), IntMatrix()};
  const std::size_t n = out.trace.component_names.size();
  out.twice_lk = IntMatrix(n, n);

  auto add = [&](const TracedStrand& u, const TracedStrand& v, int sign) {
    out.twice_lk(u.component, v.component) += Int(sign) * u.direction * v.direction;
  };

  std::unordered_set<std::string> done;
  for (const Band& b : d.bands) {
    const auto& eb = out.trace.band_edges.at(b.id);
    for (const BandEvent& e : b.events) {
      switch (e.kind) {
        case BandEvent::Kind::half_twist:
          for (const TracedStrand& u : eb)
            for (const TracedStrand& v : eb) add(u, v, e.sign);
          break;
        case BandEvent::Kind::ribbon_pass: {
          const TracedStrand& g = out.trace.wrap_strand.at(e.disk);
          const int c = e.config == 'R' ? 1 : -1;
          for (const TracedStrand& u : eb) {
            add(u, g, c);
            add(g, u, c);
          }
          break;
        }
        case BandEvent::Kind::cross: {
          if (!done.insert(e.xid).second) break;
          const auto& eo = out.trace.band_edges.at(e.with);
          for (const TracedStrand& u : eb)
            for (const TracedStrand& v : eo) {
              add(u, v, e.sign);
              add(v, u, e.sign);
            }
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Underlying surface description

// Forget twists and crossings: disks become 0-handles, bands become 1-handles
// whose ribbon words record the disks passed through.  Homology of the
// surface depends only on this incidence data.
inline SurfaceDescription band_to_surface(const BandDiagram& d) {
  SurfaceDescription s;
  s.zero_handles = d.disks;
  for (const Band& b : d.bands) {
    OneHandle h;
    h.id = b.id;
    h.start = b.start_slot.disk;
    h.end = b.end_slot.disk;
    for (const BandEvent& e : b.events)
      if (e.kind == BandEvent::Kind::ribbon_pass) h.ribbon_word.push_back(e.disk);
    h.disorientation = 1;
    s.one_handles.push_back(std::move(h));
  }
  return s;
}

}  // namespace braco
