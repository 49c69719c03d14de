#pragma once
// Input documents and command output.
//
// Input is a single JSON document:
//   { "schema": 1, "kind": "tangle" | "surface" | "band_diagram",
//     "name"?: ..., "description"?: ..., "<kind>": { ... } }
// Parsing is strict: unknown fields are rejected by name, field types are
// checked, and JSON syntax errors are reported with line and column.
//
// run_command produces byte-stable text or JSON output for the commands
// validate, homology, pairing, signature, det and cover.  JSON output echoes
// the parsed document in canonical form under "input", so parsing the echo
// reproduces the document.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "band.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "intmatrix.hpp"
#include "invariants.hpp"
#include "surface.hpp"
#include "tangle.hpp"
#include "validation.hpp"

namespace braco::io {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Documents

enum class DocumentKind { tangle, surface, band_diagram };

inline std::string kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::tangle: return "tangle";
    case DocumentKind::surface: return "surface";
    case DocumentKind::band_diagram: return "band_diagram";
  }
  throw internal_error("unhandled document kind");
}

struct Document {
  DocumentKind kind = DocumentKind::tangle;
  std::string name;
  std::string description;
  BridgeDiagram tangle;
  SurfaceDescription surface;
  std::optional<VirtualBandData> virtual_bands;  // surface documents only
  BandDiagram band;
};

// ---------------------------------------------------------------------------
// Parsing helpers

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline void expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw validation_error(where + " must be an object");
}

inline void expect_keys(const json& j, const std::string& where,
                        std::initializer_list<std::string_view> allowed) {
  expect_object(j, where);
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::string_view a : allowed)
      if (key == a) {
        known = true;
        break;
      }
    if (!known) throw validation_error("unknown field '" + key + "' in " + where);
  }
}

inline const json& require(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    throw validation_error("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

inline std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw validation_error(what + " must be a string");
  return j.get<std::string>();
}

inline long long as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw validation_error(what + " must be an integer");
  return j.get<long long>();
}

inline bool as_bool(const json& j, const std::string& what) {
  if (!j.is_boolean()) throw validation_error(what + " must be a boolean");
  return j.get<bool>();
}

inline const json& as_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw validation_error(what + " must be an array");
  return j;
}

inline std::vector<std::string> string_list(const json& j, const std::string& what) {
  std::vector<std::string> out;
  for (const json& e : as_array(j, what)) out.push_back(as_string(e, "entry of " + what));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsing

inline BridgeDiagram parse_tangle(const json& j) {
  detail::expect_keys(j, "'tangle'", {"underbridges", "overbridges"});
  BridgeDiagram d;
  for (const json& u : detail::as_array(detail::require(j, "underbridges", "'tangle'"),
                                        "'underbridges'")) {
    detail::expect_keys(u, "underbridge", {"id", "endpoints"});
    Underbridge ub;
    ub.id = detail::as_string(detail::require(u, "id", "underbridge"), "underbridge 'id'");
    if (u.contains("endpoints"))
      ub.endpoints = static_cast<int>(detail::as_int(u["endpoints"], "underbridge 'endpoints'"));
    d.underbridges.push_back(std::move(ub));
  }
  for (const json& o : detail::as_array(detail::require(j, "overbridges", "'tangle'"),
                                        "'overbridges'")) {
    detail::expect_keys(o, "overbridge", {"id", "start", "crossings", "end", "disorientation"});
    Overbridge ob;
    ob.id = detail::as_string(detail::require(o, "id", "overbridge"), "overbridge 'id'");
    ob.start = detail::as_string(detail::require(o, "start", "overbridge"), "overbridge 'start'");
    ob.crossings = detail::string_list(detail::require(o, "crossings", "overbridge"),
                                       "overbridge 'crossings'");
    ob.end = detail::as_string(detail::require(o, "end", "overbridge"), "overbridge 'end'");
    ob.disorientation = static_cast<int>(detail::as_int(
        detail::require(o, "disorientation", "overbridge"), "overbridge 'disorientation'"));
    d.overbridges.push_back(std::move(ob));
  }
  return d;
}

inline SurfaceDescription parse_surface_payload(const json& j) {
  SurfaceDescription s;
  s.zero_handles = detail::string_list(detail::require(j, "zero_handles", "'surface'"),
                                       "'zero_handles'");
  for (const json& h : detail::as_array(detail::require(j, "one_handles", "'surface'"),
                                        "'one_handles'")) {
    detail::expect_keys(h, "one-handle", {"id", "start", "end", "ribbon_word", "disorientation"});
    OneHandle oh;
    oh.id = detail::as_string(detail::require(h, "id", "one-handle"), "one-handle 'id'");
    oh.start = detail::as_string(detail::require(h, "start", "one-handle"), "one-handle 'start'");
    oh.end = detail::as_string(detail::require(h, "end", "one-handle"), "one-handle 'end'");
    oh.ribbon_word = detail::string_list(detail::require(h, "ribbon_word", "one-handle"),
                                         "one-handle 'ribbon_word'");
    oh.disorientation = static_cast<int>(detail::as_int(
        detail::require(h, "disorientation", "one-handle"), "one-handle 'disorientation'"));
    s.one_handles.push_back(std::move(oh));
  }
  for (const json& t : detail::as_array(detail::require(j, "two_handles", "'surface'"),
                                        "'two_handles'")) {
    detail::expect_keys(t, "two-handle", {"id", "traversals"});
    TwoHandle th;
    th.id = detail::as_string(detail::require(t, "id", "two-handle"), "two-handle 'id'");
    for (const json& tr : detail::as_array(detail::require(t, "traversals", "two-handle"),
                                           "two-handle 'traversals'")) {
      detail::expect_keys(tr, "traversal", {"one_handle", "sign", "weight"});
      TwoHandleTraversal ev;
      ev.one_handle = detail::as_string(detail::require(tr, "one_handle", "traversal"),
                                        "traversal 'one_handle'");
      ev.sign = static_cast<int>(detail::as_int(detail::require(tr, "sign", "traversal"),
                                                "traversal 'sign'"));
      ev.weight = static_cast<int>(detail::as_int(detail::require(tr, "weight", "traversal"),
                                                  "traversal 'weight'"));
      th.traversals.push_back(std::move(ev));
    }
    s.two_handles.push_back(std::move(th));
  }
  return s;
}

inline VirtualBandData parse_virtual(const json& j) {
  detail::expect_keys(j, "'virtual'", {"generators", "bands", "crossings"});
  VirtualBandData v;
  v.generators = detail::string_list(detail::require(j, "generators", "'virtual'"),
                                     "'generators'");
  for (const json& b : detail::as_array(detail::require(j, "bands", "'virtual'"),
                                        "virtual 'bands'")) {
    detail::expect_keys(b, "virtual band", {"id", "attaches", "orientation"});
    VirtualBand vb;
    vb.id = detail::as_string(detail::require(b, "id", "virtual band"), "virtual band 'id'");
    const json& at = detail::as_array(detail::require(b, "attaches", "virtual band"),
                                      "virtual band 'attaches'");
    if (at.size() != 2)
      throw validation_error("virtual band 'attaches' must list exactly two components");
    vb.attaches = {detail::as_string(at[0], "virtual band 'attaches'"),
                   detail::as_string(at[1], "virtual band 'attaches'")};
    vb.orientation = static_cast<int>(detail::as_int(
        detail::require(b, "orientation", "virtual band"), "virtual band 'orientation'"));
    v.bands.push_back(std::move(vb));
  }
  for (const json& c : detail::as_array(detail::require(j, "crossings", "'virtual'"),
                                        "virtual 'crossings'")) {
    detail::expect_keys(c, "virtual crossing", {"generator", "band", "count"});
    VirtualCrossing vc;
    vc.generator = detail::as_string(detail::require(c, "generator", "virtual crossing"),
                                     "virtual crossing 'generator'");
    vc.band = detail::as_string(detail::require(c, "band", "virtual crossing"),
                                "virtual crossing 'band'");
    vc.count = detail::as_int(detail::require(c, "count", "virtual crossing"),
                              "virtual crossing 'count'");
    v.crossings.push_back(std::move(vc));
  }
  return v;
}

inline BandDiagram parse_band_diagram(const json& j) {
  detail::expect_keys(j, "'band_diagram'", {"disks", "bands", "capped", "boundary"});
  BandDiagram d;
  d.disks = detail::string_list(detail::require(j, "disks", "'band_diagram'"), "'disks'");

  auto parse_slot = [&](const json& s, const std::string& where) {
    detail::expect_keys(s, where, {"disk", "position"});
    BandSlot slot;
    slot.disk = detail::as_string(detail::require(s, "disk", where), where + " 'disk'");
    slot.position = detail::as_int(detail::require(s, "position", where), where + " 'position'");
    return slot;
  };

  for (const json& b : detail::as_array(detail::require(j, "bands", "'band_diagram'"),
                                        "'bands'")) {
    detail::expect_keys(b, "band", {"id", "start_slot", "end_slot", "events"});
    Band band;
    band.id = detail::as_string(detail::require(b, "id", "band"), "band 'id'");
    band.start_slot = parse_slot(detail::require(b, "start_slot", "band"), "start_slot");
    band.end_slot = parse_slot(detail::require(b, "end_slot", "band"), "end_slot");
    for (const json& e : detail::as_array(detail::require(b, "events", "band"),
                                          "band 'events'")) {
      detail::expect_object(e, "band event");
      const std::string type = detail::as_string(detail::require(e, "type", "band event"),
                                                 "event 'type'");
      BandEvent ev;
      if (type == "half_twist") {
        detail::expect_keys(e, "half_twist event", {"type", "sign"});
        ev.kind = BandEvent::Kind::half_twist;
        ev.sign = static_cast<int>(detail::as_int(detail::require(e, "sign", "half_twist event"),
                                                  "half_twist 'sign'"));
      } else if (type == "cross") {
        detail::expect_keys(e, "cross event", {"type", "with", "over", "sign", "id"});
        ev.kind = BandEvent::Kind::cross;
        ev.with = detail::as_string(detail::require(e, "with", "cross event"), "cross 'with'");
        ev.over = detail::as_bool(detail::require(e, "over", "cross event"), "cross 'over'");
        ev.sign = static_cast<int>(detail::as_int(detail::require(e, "sign", "cross event"),
                                                  "cross 'sign'"));
        ev.xid = detail::as_string(detail::require(e, "id", "cross event"), "cross 'id'");
      } else if (type == "ribbon_pass") {
        detail::expect_keys(e, "ribbon_pass event", {"type", "disk", "config"});
        ev.kind = BandEvent::Kind::ribbon_pass;
        ev.disk = detail::as_string(detail::require(e, "disk", "ribbon_pass event"),
                                    "ribbon_pass 'disk'");
        const std::string cfg = detail::as_string(
            detail::require(e, "config", "ribbon_pass event"), "ribbon_pass 'config'");
        if (cfg != "L" && cfg != "R")
          throw validation_error("ribbon_pass 'config' must be \"L\" or \"R\"");
        ev.config = cfg[0];
      } else {
        throw validation_error("unknown band event type '" + type + "'");
      }
      band.events.push_back(std::move(ev));
    }
    d.bands.push_back(std::move(band));
  }

  if (j.contains("capped")) {
    for (const json& c : detail::as_array(j["capped"], "'capped'")) {
      detail::expect_keys(c, "capped class", {"component", "combo"});
      CappedClass cc;
      if (c.contains("component"))
        cc.component = detail::as_string(c["component"], "capped 'component'");
      const json& combo = detail::require(c, "combo", "capped class");
      detail::expect_object(combo, "capped 'combo'");
      for (const auto& [band, coef] : combo.items())
        cc.combo[band] = detail::as_int(coef, "capped 'combo' entry '" + band + "'");
      d.capped.push_back(std::move(cc));
    }
  }
  if (j.contains("boundary")) {
    const json& b = j["boundary"];
    detail::expect_keys(b, "'boundary'", {"orientations", "groups"});
    BandBoundaryData bd;
    const json& orient = detail::require(b, "orientations", "'boundary'");
    detail::expect_object(orient, "boundary 'orientations'");
    for (const auto& [comp, o] : orient.items())
      bd.orientations[comp] =
          static_cast<int>(detail::as_int(o, "orientation of component '" + comp + "'"));
    if (b.contains("groups")) {
      detail::expect_object(b["groups"], "boundary 'groups'");
      std::map<std::string, int> groups;
      for (const auto& [comp, g] : b["groups"].items())
        groups[comp] = static_cast<int>(detail::as_int(g, "group of component '" + comp + "'"));
      bd.groups = std::move(groups);
    }
    d.boundary = std::move(bd);
  }
  return d;
}

inline Document parse_document(const json& j) {
  detail::expect_object(j, "the document");
  const std::string kind = detail::as_string(detail::require(j, "kind", "the document"),
                                             "'kind'");
  if (kind != "tangle" && kind != "surface" && kind != "band_diagram")
    throw validation_error("unknown document kind '" + kind + "'");
  detail::expect_keys(j, "the document",
                      {"schema", "kind", "name", "description", kind.c_str()});
  const long long schema = detail::as_int(detail::require(j, "schema", "the document"),
                                          "'schema'");
  if (schema != 1)
    throw validation_error("unsupported schema version " + std::to_string(schema));

  Document doc;
  if (j.contains("name")) doc.name = detail::as_string(j["name"], "'name'");
  if (j.contains("description"))
    doc.description = detail::as_string(j["description"], "'description'");

  const json& payload = detail::require(j, kind.c_str(), "the document");
  if (kind == "tangle") {
    doc.kind = DocumentKind::tangle;
    doc.tangle = parse_tangle(payload);
  } else if (kind == "surface") {
    doc.kind = DocumentKind::surface;
    detail::expect_keys(payload, "'surface'",
                        {"zero_handles", "one_handles", "two_handles", "virtual"});
    doc.surface = parse_surface_payload(payload);
    if (payload.contains("virtual")) doc.virtual_bands = parse_virtual(payload["virtual"]);
  } else {
    doc.kind = DocumentKind::band_diagram;
    doc.band = parse_band_diagram(payload);
  }
  return doc;
}

inline Document parse_input(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw validation_error("invalid JSON at line " + std::to_string(line) + ", column " +
                           std::to_string(col));
  }
  return parse_document(j);
}

// ---------------------------------------------------------------------------
// Canonical emission

namespace detail {

inline json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

inline json document_to_json(const Document& doc) {
  json j;
  j["schema"] = 1;
  j["kind"] = kind_name(doc.kind);
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.description.empty()) j["description"] = doc.description;

  if (doc.kind == DocumentKind::tangle) {
    json t;
    t["underbridges"] = json::array();
    for (const Underbridge& u : doc.tangle.underbridges) {
      json ju;
      ju["id"] = u.id;
      if (u.endpoints) ju["endpoints"] = *u.endpoints;
      t["underbridges"].push_back(std::move(ju));
    }
    t["overbridges"] = json::array();
    for (const Overbridge& o : doc.tangle.overbridges) {
      json jo;
      jo["id"] = o.id;
      jo["start"] = o.start;
      jo["crossings"] = o.crossings;
      jo["end"] = o.end;
      jo["disorientation"] = o.disorientation;
      t["overbridges"].push_back(std::move(jo));
    }
    j["tangle"] = std::move(t);
  } else if (doc.kind == DocumentKind::surface) {
    json s;
    s["zero_handles"] = doc.surface.zero_handles;
    s["one_handles"] = json::array();
    for (const OneHandle& h : doc.surface.one_handles) {
      json jh;
      jh["id"] = h.id;
      jh["start"] = h.start;
      jh["end"] = h.end;
      jh["ribbon_word"] = h.ribbon_word;
      jh["disorientation"] = h.disorientation;
      s["one_handles"].push_back(std::move(jh));
    }
    s["two_handles"] = json::array();
    for (const TwoHandle& t : doc.surface.two_handles) {
      json jt;
      jt["id"] = t.id;
      jt["traversals"] = json::array();
      for (const TwoHandleTraversal& tr : t.traversals) {
        json je;
        je["one_handle"] = tr.one_handle;
        je["sign"] = tr.sign;
        je["weight"] = tr.weight;
        jt["traversals"].push_back(std::move(je));
      }
      s["two_handles"].push_back(std::move(jt));
    }
    if (doc.virtual_bands) {
      json v;
      v["generators"] = doc.virtual_bands->generators;
      v["bands"] = json::array();
      for (const VirtualBand& b : doc.virtual_bands->bands) {
        json jb;
        jb["id"] = b.id;
        jb["attaches"] = {b.attaches[0], b.attaches[1]};
        jb["orientation"] = b.orientation;
        v["bands"].push_back(std::move(jb));
      }
      v["crossings"] = json::array();
      for (const VirtualCrossing& c : doc.virtual_bands->crossings) {
        json jc;
        jc["generator"] = c.generator;
        jc["band"] = c.band;
        jc["count"] = c.count;
        v["crossings"].push_back(std::move(jc));
      }
      s["virtual"] = std::move(v);
    }
    j["surface"] = std::move(s);
  } else {
    json b;
    b["disks"] = doc.band.disks;
    b["bands"] = json::array();
    for (const Band& band : doc.band.bands) {
      json jb;
      jb["id"] = band.id;
      jb["start_slot"] = {{"disk", band.start_slot.disk}, {"position", band.start_slot.position}};
      jb["end_slot"] = {{"disk", band.end_slot.disk}, {"position", band.end_slot.position}};
      jb["events"] = json::array();
      for (const BandEvent& e : band.events) {
        json je;
        switch (e.kind) {
          case BandEvent::Kind::half_twist:
            je["type"] = "half_twist";
            je["sign"] = e.sign;
            break;
          case BandEvent::Kind::cross:
            je["type"] = "cross";
            je["with"] = e.with;
            je["over"] = e.over;
            je["sign"] = e.sign;
            je["id"] = e.xid;
            break;
          case BandEvent::Kind::ribbon_pass:
            je["type"] = "ribbon_pass";
            je["disk"] = e.disk;
            je["config"] = std::string(1, e.config);
            break;
        }
        jb["events"].push_back(std::move(je));
      }
      b["bands"].push_back(std::move(jb));
    }
    if (!doc.band.capped.empty()) {
      b["capped"] = json::array();
      for (const CappedClass& c : doc.band.capped) {
        json jc;
        if (!c.component.empty()) jc["component"] = c.component;
        jc["combo"] = json::object();
        for (const auto& [band, coef] : c.combo) jc["combo"][band] = coef;
        b["capped"].push_back(std::move(jc));
      }
    }
    if (doc.band.boundary) {
      json jb;
      jb["orientations"] = json::object();
      for (const auto& [comp, o] : doc.band.boundary->orientations) jb["orientations"][comp] = o;
      if (doc.band.boundary->groups) {
        jb["groups"] = json::object();
        for (const auto& [comp, g] : *doc.band.boundary->groups) jb["groups"][comp] = g;
      }
      b["boundary"] = std::move(jb);
    }
    j["band_diagram"] = std::move(b);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Output rendering

namespace detail {

inline void matrix_lines(const IntMatrix& m, std::vector<std::string>& out) {
  if (m.rows() == 0) {
    out.push_back("  []");
    return;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string line = "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) line += ' ';
      line += m(i, j).str();
    }
    line += ']';
    out.push_back(std::move(line));
  }
}

inline std::string join(const std::vector<std::string>& parts) {
  if (parts.empty()) return "(none)";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " " + parts[i];
  return out;
}

// The cover chain complex block shared by `homology` (surface) and `cover`.
inline void complex_lines(const ChainComplex& c, std::vector<std::string>& out) {
  std::string ranks = "ranks:";
  for (int k = c.lowest_degree(); k <= c.highest_degree(); ++k)
    ranks += " " + std::to_string(c.rank_at(k));
  out.push_back(ranks);
  for (int k = c.lowest_degree() + 1; k <= c.highest_degree(); ++k) {
    out.push_back("d_" + std::to_string(k) + " =");
    matrix_lines(c.boundary_at(k), out);
  }
}

inline json complex_to_json(const ChainComplex& c) {
  json out;
  out["lowest_degree"] = c.lowest_degree();
  json ranks = json::array();
  for (int k = c.lowest_degree(); k <= c.highest_degree(); ++k)
    ranks.push_back(c.rank_at(k));
  out["ranks"] = std::move(ranks);
  json boundaries = json::object();
  for (int k = c.lowest_degree() + 1; k <= c.highest_degree(); ++k)
    boundaries["d_" + std::to_string(k)] = matrix_to_json(c.boundary_at(k));
  out["boundaries"] = std::move(boundaries);
  return out;
}

}  // namespace detail

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

inline ValidationReport validate_document(const Document& doc) {
  switch (doc.kind) {
    case DocumentKind::tangle:
      return validate_bridge_diagram(doc.tangle);
    case DocumentKind::surface: {
      ValidationReport r = validate_surface_description(doc.surface);
      if (r.ok() && doc.virtual_bands) {
        try {
          build_virtual_band_complex(doc.surface, *doc.virtual_bands);
        } catch (const validation_error& e) {
          r.errors.push_back(e.what());
        }
      }
      return r;
    }
    case DocumentKind::band_diagram:
      return validate_band_diagram(doc.band);
  }
  throw internal_error("unhandled document kind");
}

namespace detail {

inline CommandResult render(const std::string& format, const std::vector<std::string>& lines,
                            json result, const Document& doc, const std::string& command,
                            int exit_code = 0) {
  if (format == "json") {
    json out;
    out["command"] = command;
    out["input"] = document_to_json(doc);
    out["result"] = std::move(result);
    return {out.dump(2) + "\n", exit_code};
  }
  std::string text;
  for (const std::string& line : lines) text += line + "\n";
  return {text, exit_code};
}

inline void header_lines(const Document& doc, std::vector<std::string>& lines) {
  lines.push_back("kind: " + kind_name(doc.kind));
  if (!doc.name.empty()) lines.push_back("name: " + doc.name);
}

inline CommandResult run_validate(const Document& doc, const std::string& format) {
  ValidationReport r = validate_document(doc);
  std::vector<std::string> lines;
  header_lines(doc, lines);
  lines.push_back(std::string("valid: ") + (r.ok() ? "yes" : "no"));
  for (const std::string& e : r.errors) lines.push_back("error: " + e);
  for (const std::string& w : r.warnings) lines.push_back("warning: " + w);
  json result;
  result["valid"] = r.ok();
  result["errors"] = r.errors;
  result["warnings"] = r.warnings;
  return render(format, lines, std::move(result), doc, "validate", r.ok() ? 0 : 1);
}

inline CommandResult run_homology(const Document& doc, const std::string& format) {
  std::vector<std::string> lines;
  header_lines(doc, lines);
  json result;

  if (doc.kind == DocumentKind::tangle) {
    TangleHomologyReport r = tangle_homology(doc.tangle);
    lines.push_back("underbridges: " + std::to_string(r.underbridge_count));
    lines.push_back("overbridges: " + std::to_string(r.overbridge_count));
    lines.push_back("H_-1 = " + r.h_minus_1.to_string());
    lines.push_back("H_0 = " + r.h_0.to_string());
    lines.push_back("H_1 = " + r.h_1.to_string());
    lines.push_back("branched double cover of B^3:");
    lines.push_back("  H~_1 = " + r.h_0.to_string());
    lines.push_back("  H~_2 = " + r.h_1.to_string());
    result["underbridges"] = r.underbridge_count;
    result["overbridges"] = r.overbridge_count;
    result["groups"] = {{"H_-1", r.h_minus_1.to_string()},
                        {"H_0", r.h_0.to_string()},
                        {"H_1", r.h_1.to_string()}};
    result["cover"] = {{"H~_1", r.h_0.to_string()}, {"H~_2", r.h_1.to_string()}};
    return render(format, lines, std::move(result), doc, "homology");
  }

  // Surface documents and band diagrams (through their underlying surface).
  SurfaceDescription surface =
      doc.kind == DocumentKind::surface ? doc.surface : band_to_surface(doc.band);
  SurfaceHomologyReport r = surface_homology(surface);
  lines.push_back("zero-handles: " + std::to_string(r.zero_handle_count));
  lines.push_back("one-handles: " + std::to_string(r.one_handle_count));
  lines.push_back("two-handles: " + std::to_string(r.two_handle_count));
  lines.push_back("DH_-1 = " + r.dh_minus_1.to_string());
  lines.push_back("DH_0 = " + r.dh_0.to_string());
  lines.push_back("DH_1 = " + r.dh_1.to_string());
  lines.push_back("DH_2 = " + r.dh_2.to_string());
  lines.push_back("branched double cover of B^4:");
  lines.push_back("  H~_1 = " + r.dh_0.to_string());
  lines.push_back("  H~_2 = " + r.dh_1.to_string());
  lines.push_back("  H~_3 = " + r.dh_2.to_string());
  result["handle_counts"] = {{"zero", r.zero_handle_count},
                             {"one", r.one_handle_count},
                             {"two", r.two_handle_count}};
  result["groups"] = {{"DH_-1", r.dh_minus_1.to_string()},
                      {"DH_0", r.dh_0.to_string()},
                      {"DH_1", r.dh_1.to_string()},
                      {"DH_2", r.dh_2.to_string()}};
  result["cover"] = {{"H~_1", r.dh_0.to_string()},
                     {"H~_2", r.dh_1.to_string()},
                     {"H~_3", r.dh_2.to_string()}};

  ChainComplex cover = build_surface_cover_complex(surface);
  lines.push_back("cover chain complex:");
  complex_lines(cover, lines);
  result["cover_complex"] = complex_to_json(cover);

  if (doc.kind == DocumentKind::surface && doc.virtual_bands) {
    ChainComplex vc = build_virtual_band_complex(doc.surface, *doc.virtual_bands);
    lines.push_back("virtual-band complex:");
    lines.push_back("  H_1 = " + vc.homology_at(1).to_string());
    lines.push_back("  H_0 = " + vc.homology_at(0).to_string());
    result["virtual_complex"] = {{"H_1", vc.homology_at(1).to_string()},
                                 {"H_0", vc.homology_at(0).to_string()}};
  }
  return render(format, lines, std::move(result), doc, "homology");
}

inline CommandResult run_pairing(const Document& doc, const std::string& format) {
  if (doc.kind != DocumentKind::band_diagram)
    throw validation_error("the 'pairing' command applies to band_diagram documents");
  PairingReport r = gl_pairing_matrix(doc.band);
  std::vector<std::string> lines;
  header_lines(doc, lines);
  lines.push_back("generators: " + join(r.generators));
  lines.push_back("tree bands: " + join(r.tree_bands));
  lines.push_back("lambda =");
  matrix_lines(r.lambda, lines);
  json result;
  result["generators"] = r.generators;
  result["tree_bands"] = r.tree_bands;
  result["lambda"] = matrix_to_json(r.lambda);
  if (r.capped_quotient) {
    lines.push_back("capped quotient =");
    matrix_lines(*r.capped_quotient, lines);
    result["capped_quotient"] = matrix_to_json(*r.capped_quotient);
  }
  return render(format, lines, std::move(result), doc, "pairing");
}

inline CommandResult run_signature(const Document& doc, const std::string& format) {
  if (doc.kind != DocumentKind::band_diagram)
    throw validation_error("the 'signature' command applies to band_diagram documents");
  std::vector<std::string> lines;
  header_lines(doc, lines);
  json result;
  if (doc.band.boundary && doc.band.boundary->groups) {
    CobordismReport r = cobordism_signature_delta(doc.band);
    lines.push_back("mode: cobordism");
    lines.push_back("components: " + join(r.components));
    lines.push_back("sigma(form) = " + std::to_string(r.form_signature));
    lines.push_back("lk_bottom = " + r.lk_bottom.str());
    lines.push_back("lk_top = " + r.lk_top.str());
    lines.push_back("delta = " + r.delta.str());
    result["mode"] = "cobordism";
    result["components"] = r.components;
    result["form_signature"] = r.form_signature;
    result["lk_bottom"] = int_to_json(r.lk_bottom);
    result["lk_top"] = int_to_json(r.lk_top);
    result["delta"] = int_to_json(r.delta);
  } else {
    SignatureReport r = boundary_signature(doc.band);
    lines.push_back("mode: boundary");
    lines.push_back("components: " + join(r.components));
    lines.push_back("capped: " + join(r.capped_components));
    lines.push_back("sigma(form) = " + std::to_string(r.form_signature));
    lines.push_back("lk(L, L~) = " + r.framing.str());
    lines.push_back("sigma(L) = " + r.link_signature.str());
    result["mode"] = "boundary";
    result["components"] = r.components;
    result["capped"] = r.capped_components;
    result["form_signature"] = r.form_signature;
    result["framing"] = int_to_json(r.framing);
    result["signature"] = int_to_json(r.link_signature);
  }
  return render(format, lines, std::move(result), doc, "signature");
}

inline CommandResult run_det(const Document& doc, const std::string& format) {
  DeterminantReport r;
  switch (doc.kind) {
    case DocumentKind::tangle: r = determinant_of_tangle(doc.tangle); break;
    case DocumentKind::surface: r = determinant_of_surface(doc.surface); break;
    case DocumentKind::band_diagram: r = determinant_of_band(doc.band); break;
  }
  std::vector<std::string> lines;
  header_lines(doc, lines);
  lines.push_back("determinant = " + (r.infinite ? std::string("infinite") : r.value.str()));
  json result;
  result["infinite"] = r.infinite;
  if (!r.infinite) result["value"] = int_to_json(r.value);
  return render(format, lines, std::move(result), doc, "det");
}

inline CommandResult run_cover(const Document& doc, const std::string& format) {
  if (doc.kind == DocumentKind::band_diagram)
    throw validation_error("the 'cover' command applies to tangle and surface documents");
  ChainComplex c = doc.kind == DocumentKind::tangle
                       ? build_tangle_cover_complex(doc.tangle)
                       : build_surface_cover_complex(doc.surface);
  std::vector<std::string> lines;
  header_lines(doc, lines);
  const std::string space =
      doc.kind == DocumentKind::tangle ? "B^3" : "B^4";
  lines.push_back("branched double cover of " + space + ":");
  complex_lines(c, lines);
  json groups_json = json::object();
  for (int k = c.lowest_degree(); k <= c.highest_degree(); ++k) {
    const std::string label = "H_" + std::to_string(k);
    lines.push_back(label + " = " + c.homology_at(k).to_string());
    groups_json[label] = c.homology_at(k).to_string();
  }
  json result;
  result["space"] = space;
  result["complex"] = complex_to_json(c);
  result["groups"] = std::move(groups_json);
  return render(format, lines, std::move(result), doc, "cover");
}

}  // namespace detail

inline CommandResult run_command(const std::string& command, const Document& doc,
                                 const std::string& format) {
  if (format != "text" && format != "json")
    throw validation_error("unknown output format '" + format + "'");
  if (command == "validate") return detail::run_validate(doc, format);
  if (command == "homology") return detail::run_homology(doc, format);
  if (command == "pairing") return detail::run_pairing(doc, format);
  if (command == "signature") return detail::run_signature(doc, format);
  if (command == "det") return detail::run_det(doc, format);
  if (command == "cover") return detail::run_cover(doc, format);
  throw validation_error("unknown command '" + command + "'");
}

}  // namespace braco::io
