// JSON input documents and command output: strict parsing, canonical
// round-trips, command dispatch, and byte-stable rendering.

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braco/errors.hpp"
#include "braco/io.hpp"
#include "diagram_builders.hpp"

namespace {

using braco::io::Document;
using braco::io::json;

const std::vector<std::string> kFixtureFiles = {
    "annulus_band.json",  "arc.json",           "capped_annulus.json",
    "disk.json",          "fig8.json",          "fig8_band.json",
    "hopf.json",          "hopf_band.json",     "mobius_1.json",
    "mobius_growth.json", "pants_saddle.json",  "pp_minus.json",
    "pp_plus.json",       "product_annulus.json", "projective_plane.json",
    "ribbon_annulus.json", "torus24_band.json", "torus25.json",
    "torus25_band.json",  "trefoil.json",       "trefoil_band.json",
    "twist_band_saddle.json", "two_disk_ribbon.json", "unknot_circle.json",
    "unknot_disk.json"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture_text(const std::string& file) {
  return read_file(std::string(BRACO_FIXTURE_DIR) + "/" + file);
}

std::vector<std::string> commands_for(const Document& doc) {
  if (doc.kind == braco::io::DocumentKind::band_diagram)
    return {"validate", "homology", "pairing", "signature", "det"};
  return {"validate", "homology", "det", "cover"};
}

void expect_parse_error(const std::string& text, const std::string& message) {
  try {
    braco::io::parse_input(text);
    ADD_FAILURE() << "parse accepted input; wanted: " << message;
  } catch (const braco::validation_error& e) {
    EXPECT_EQ(std::string(e.what()), message);
  }
}

TEST(Parsing, FixturesRoundTripThroughCanonicalForm) {
  for (const std::string& file : kFixtureFiles) {
    SCOPED_TRACE(file);
    Document doc = braco::io::parse_input(fixture_text(file));
    json canon = braco::io::document_to_json(doc);
    Document again = braco::io::parse_input(canon.dump(2));
    EXPECT_EQ(braco::io::document_to_json(again), canon);
    EXPECT_EQ(braco::io::document_to_json(again).dump(2), canon.dump(2));
  }
}

TEST(Parsing, ReportsSyntaxErrorsWithLineAndColumn) {
  expect_parse_error("{\n\"schema\": 1,\n}", "invalid JSON at line 3, column 1");
  try {
    braco::io::parse_input("not json");
    ADD_FAILURE() << "parse accepted garbage";
  } catch (const braco::validation_error& e) {
    EXPECT_EQ(std::string(e.what()).rfind("invalid JSON at line 1, column ", 0), 0u);
  }
}

TEST(Parsing, ReportsDocumentShapeErrors) {
  expect_parse_error("[]", "the document must be an object");
  expect_parse_error(R"({"schema": 1})", "missing field 'kind' in the document");
  expect_parse_error(R"({"schema": 1, "kind": "pretzel", "pretzel": {}})",
                     "unknown document kind 'pretzel'");
  expect_parse_error(
      R"({"schema": 2, "kind": "tangle", "tangle": {"underbridges": [], "overbridges": []}})",
      "unsupported schema version 2");
  expect_parse_error(
      R"({"schema": "1", "kind": "tangle", "tangle": {"underbridges": [], "overbridges": []}})",
      "'schema' must be an integer");
  expect_parse_error(
      R"({"schema": 1, "kind": "tangle", "extra": 0,
          "tangle": {"underbridges": [], "overbridges": []}})",
      "unknown field 'extra' in the document");
  expect_parse_error(R"({"schema": 1, "kind": "tangle"})",
                     "missing field 'tangle' in the document");
  expect_parse_error(
      R"({"schema": 1, "kind": "tangle", "name": 7,
          "tangle": {"underbridges": [], "overbridges": []}})",
      "'name' must be a string");
}

TEST(Parsing, ReportsTangleFieldErrors) {
  expect_parse_error(R"({"schema": 1, "kind": "tangle", "tangle": {"underbridges": 3}})",
                     "'underbridges' must be an array");
  expect_parse_error(
      R"({"schema": 1, "kind": "tangle",
          "tangle": {"underbridges": [{"id": "u", "color": "red"}], "overbridges": []}})",
      "unknown field 'color' in underbridge");
  expect_parse_error(
      R"({"schema": 1, "kind": "tangle",
          "tangle": {"underbridges": [{"id": "u"}],
                     "overbridges": [{"id": "o", "start": "u", "crossings": [], "end": "u"}]}})",
      "missing field 'disorientation' in overbridge");
  expect_parse_error(
      R"({"schema": 1, "kind": "tangle",
          "tangle": {"underbridges": [{"id": "u"}],
                     "overbridges": [{"id": "o", "start": "u", "crossings": [3], "end": "u",
                                      "disorientation": 1}]}})",
      "entry of overbridge 'crossings' must be a string");
}

TEST(Parsing, ReportsSurfaceFieldErrors) {
  expect_parse_error(
      R"({"schema": 1, "kind": "surface",
          "surface": {"zero_handles": ["m"], "one_handles": [], "two_handles": [], "xx": 1}})",
      "unknown field 'xx' in 'surface'");
  expect_parse_error(
      R"({"schema": 1, "kind": "surface",
          "surface": {"zero_handles": ["m"], "one_handles": [],
                      "two_handles": [{"id": "d", "traversals":
                        [{"one_handle": "h", "sign": 1, "weight": "two"}]}]}})",
      "traversal 'weight' must be an integer");
  expect_parse_error(
      R"({"schema": 1, "kind": "surface",
          "surface": {"zero_handles": ["m"], "one_handles": [], "two_handles": [],
                      "virtual": {"generators": [],
                                  "bands": [{"id": "vb", "attaches": ["m"], "orientation": 1}],
                                  "crossings": []}}})",
      "virtual band 'attaches' must list exactly two components");
}

TEST(Parsing, ReportsBandFieldErrors) {
  const std::string head =
      R"({"schema": 1, "kind": "band_diagram", "band_diagram": {"disks": ["m"], "bands": [)";
  const std::string slots =
      R"("start_slot": {"disk": "m", "position": 0}, "end_slot": {"disk": "m", "position": 1})";
  expect_parse_error(head + R"({"id": "A", )" + slots +
                         R"(, "events": [{"type": "warp"}]}]}})",
                     "unknown band event type 'warp'");
  expect_parse_error(head + R"({"id": "A", )" + slots +
                         R"(, "events": [{"type": "ribbon_pass", "disk": "m", "config": "Q"}]}]}})",
                     "ribbon_pass 'config' must be \"L\" or \"R\"");
  expect_parse_error(
      head + R"({"id": "A", )" + slots +
          R"(, "events": [{"type": "cross", "with": "A", "over": 1, "sign": 1, "id": "x"}]}]}})",
      "cross 'over' must be a boolean");
  expect_parse_error(head + R"({"id": "A", )" + slots +
                         R"(, "events": []}], "capped": [{"combo": {"A": "one"}}]}})",
                     "capped 'combo' entry 'A' must be an integer");
  expect_parse_error(head + R"({"id": "A", )" + slots +
                         R"(, "events": []}], "boundary": {"orientations": []}}})",
                     "boundary 'orientations' must be an object");
}

// ---------------------------------------------------------------------------
// Commands

TEST(Commands, DispatchErrors) {
  Document tangle;
  tangle.kind = braco::io::DocumentKind::tangle;
  tangle.tangle = builders::trefoil_tangle();
  Document band;
  band.kind = braco::io::DocumentKind::band_diagram;
  band.band = builders::annulus_band();

  try {
    braco::io::run_command("pairing", tangle, "text");
    ADD_FAILURE();
  } catch (const braco::validation_error& e) {
    EXPECT_EQ(std::string(e.what()), "the 'pairing' command applies to band_diagram documents");
  }
  try {
    braco::io::run_command("signature", tangle, "text");
    ADD_FAILURE();
  } catch (const braco::validation_error& e) {
    EXPECT_EQ(std::string(e.what()), "the 'signature' command applies to band_diagram documents");
  }
  try {
    braco::io::run_command("cover", band, "text");
    ADD_FAILURE();
  } catch (const braco::validation_error& e) {
    EXPECT_EQ(std::string(e.what()), "the 'cover' command applies to tangle and surface documents");
  }
  try {
    braco::io::run_command("frobnicate", tangle, "text");
    ADD_FAILURE();
  } catch (const braco::validation_error& e) {
    EXPECT_EQ(std::string(e.what()), "unknown command 'frobnicate'");
  }
  try {
    braco::io::run_command("homology", tangle, "yaml");
    ADD_FAILURE();
  } catch (const braco::validation_error& e) {
    EXPECT_EQ(std::string(e.what()), "unknown output format 'yaml'");
  }
}

TEST(Commands, ValidateSetsTheExitCode) {
  Document good;
  good.kind = braco::io::DocumentKind::tangle;
  good.tangle = builders::trefoil_tangle();
  braco::io::CommandResult ok = braco::io::run_command("validate", good, "text");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_NE(ok.output.find("valid: yes"), std::string::npos);

  Document bad = good;
  bad.tangle.overbridges[0].start = "w";
  braco::io::CommandResult res = braco::io::run_command("validate", bad, "text");
  EXPECT_EQ(res.exit_code, 1);
  EXPECT_NE(res.output.find("valid: no"), std::string::npos);
  EXPECT_NE(res.output.find("error: overbridge 'o1' references unknown underbridge 'w'"),
            std::string::npos);
}

TEST(Commands, PinnedTangleHomologyText) {
  Document doc;
  doc.kind = braco::io::DocumentKind::tangle;
  doc.name = "trefoil";
  doc.tangle = builders::trefoil_tangle();
  braco::io::CommandResult res = braco::io::run_command("homology", doc, "text");
  EXPECT_EQ(res.output,
            "kind: tangle\n"
            "name: trefoil\n"
            "underbridges: 3\n"
            "overbridges: 3\n"
            "H_-1 = 0\n"
            "H_0 = Z/3\n"
            "H_1 = Z\n"
            "branched double cover of B^3:\n"
            "  H~_1 = Z/3\n"
            "  H~_2 = Z\n");
}

TEST(Commands, PinnedPairingText) {
  Document doc;
  doc.kind = braco::io::DocumentKind::band_diagram;
  doc.name = "capped_annulus";
  doc.band = builders::capped_annulus_band();
  braco::io::CommandResult res = braco::io::run_command("pairing", doc, "text");
  EXPECT_EQ(res.output,
            "kind: band_diagram\n"
            "name: capped_annulus\n"
            "generators: A\n"
            "tree bands: (none)\n"
            "lambda =\n"
            "  [0]\n"
            "capped quotient =\n"
            "  []\n");
}

TEST(Commands, PinnedSignatureTexts) {
  Document doc;
  doc.kind = braco::io::DocumentKind::band_diagram;
  doc.name = "mobius_growth";
  doc.band = builders::mobius_growth_band();
  braco::io::CommandResult res = braco::io::run_command("signature", doc, "text");
  EXPECT_EQ(res.output,
            "kind: band_diagram\n"
            "name: mobius_growth\n"
            "mode: cobordism\n"
            "components: b0 b1\n"
            "sigma(form) = -1\n"
            "lk_bottom = 0\n"
            "lk_top = -6\n"
            "delta = 2\n");

  Document knot;
  knot.kind = braco::io::DocumentKind::band_diagram;
  knot.name = "trefoil_band";
  knot.band = builders::trefoil_band();
  braco::io::CommandResult sig = braco::io::run_command("signature", knot, "text");
  EXPECT_EQ(sig.output,
            "kind: band_diagram\n"
            "name: trefoil_band\n"
            "mode: boundary\n"
            "components: b0\n"
            "capped: (none)\n"
            "sigma(form) = -1\n"
            "lk(L, L~) = -6\n"
            "sigma(L) = 2\n");
}

TEST(Commands, PinnedCoverText) {
  Document doc;
  doc.kind = braco::io::DocumentKind::surface;
  doc.name = "projective_plane";
  doc.surface = builders::projective_plane_surface();
  braco::io::CommandResult res = braco::io::run_command("cover", doc, "text");
  EXPECT_EQ(res.output,
            "kind: surface\n"
            "name: projective_plane\n"
            "branched double cover of B^4:\n"
            "ranks: 2 1 1 1\n"
            "d_1 =\n"
            "  [1]\n"
            "  [-1]\n"
            "d_2 =\n"
            "  [0]\n"
            "d_3 =\n"
            "  [0]\n"
            "H_0 = Z\n"
            "H_1 = 0\n"
            "H_2 = Z\n"
            "H_3 = Z\n");
}

TEST(Commands, OutputsAreByteStableAcrossRuns) {
  for (const std::string& file : kFixtureFiles) {
    SCOPED_TRACE(file);
    Document doc = braco::io::parse_input(fixture_text(file));
    for (const std::string& command : commands_for(doc)) {
      for (const std::string format : {"text", "json"}) {
        braco::io::CommandResult a = braco::io::run_command(command, doc, format);
        braco::io::CommandResult b = braco::io::run_command(command, doc, format);
        EXPECT_EQ(a.output, b.output) << command << " " << format;
        EXPECT_EQ(a.exit_code, 0) << command;
        EXPECT_EQ(a.exit_code, b.exit_code);
      }
    }
  }
}

TEST(Commands, JsonOutputEchoesTheCanonicalDocument) {
  for (const std::string& file : kFixtureFiles) {
    SCOPED_TRACE(file);
    Document doc = braco::io::parse_input(fixture_text(file));
    braco::io::CommandResult res = braco::io::run_command("det", doc, "json");
    json out = json::parse(res.output);
    EXPECT_EQ(out["command"], "det");
    EXPECT_EQ(out["input"], braco::io::document_to_json(doc));
    Document echoed = braco::io::parse_input(out["input"].dump());
    EXPECT_EQ(braco::io::document_to_json(echoed), braco::io::document_to_json(doc));
  }
}

}  // namespace
