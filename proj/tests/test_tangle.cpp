// Bridge diagrams: validation, the disoriented complex, the branched double
// cover of B^3, and structural properties on random instances.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "braco/errors.hpp"
#include "braco/invariants.hpp"
#include "braco/tangle.hpp"
#include "diagram_builders.hpp"
#include "generators.hpp"
#include "oracle_goeritz.hpp"

namespace {

using braco::AbelianGroup;
using braco::BridgeDiagram;
using braco::ChainComplex;
using braco::IntMatrix;

bool has_error(const braco::ValidationReport& r, const std::string& text) {
  return std::find(r.errors.begin(), r.errors.end(), text) != r.errors.end();
}

TEST(TangleValidation, AcceptsTheFixtures) {
  for (const BridgeDiagram& d :
       {builders::trefoil_tangle(), builders::unknot_circle_tangle(), builders::arc_tangle(),
        builders::fig8_tangle(), builders::hopf_tangle(), builders::torus2_tangle(5)}) {
    EXPECT_TRUE(braco::validate_bridge_diagram(d).ok());
  }
  // The fixtures with overbridges meet every underbridge; the bare arc is the
  // legal-but-flagged case below.
  EXPECT_TRUE(braco::validate_bridge_diagram(builders::trefoil_tangle()).warnings.empty());
  braco::ValidationReport arc = braco::validate_bridge_diagram(builders::arc_tangle());
  ASSERT_EQ(arc.warnings.size(), 1u);
  EXPECT_EQ(arc.warnings[0], "underbridge 'a' is not met by any overbridge");
}

TEST(TangleValidation, ReportsStructuralErrors) {
  BridgeDiagram d;
  EXPECT_TRUE(has_error(braco::validate_bridge_diagram(d), "diagram has no underbridges"));

  d.underbridges = {{"u", {}}, {"u", {}}};
  EXPECT_TRUE(has_error(braco::validate_bridge_diagram(d), "duplicate underbridge id 'u'"));

  d.underbridges = {{"u", 3}};
  EXPECT_TRUE(has_error(braco::validate_bridge_diagram(d),
                        "underbridge 'u' carries 3 tangle endpoints; expected 0, 1 or 2"));

  d.underbridges = {{"u", {}}};
  d.overbridges = {{"o", "u", {"w"}, "u", 1}, {"o", "u", {}, "u", 2}};
  braco::ValidationReport r = braco::validate_bridge_diagram(d);
  EXPECT_TRUE(has_error(r, "duplicate overbridge id 'o'"));
  EXPECT_TRUE(has_error(r, "overbridge 'o' references unknown underbridge 'w'"));
  EXPECT_TRUE(has_error(r, "overbridge 'o' has disorientation 2; expected +1 or -1"));
}

TEST(TangleValidation, WarnsOnUnvisitedUnderbridge) {
  BridgeDiagram d;
  d.underbridges = {{"u1", {}}, {"u2", {}}};
  d.overbridges = {{"o", "u1", {}, "u1", 1}};
  braco::ValidationReport r = braco::validate_bridge_diagram(d);
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.warnings[0], "underbridge 'u2' is not met by any overbridge");
}

TEST(TangleComplex, BuilderRefusesInvalidDiagrams) {
  BridgeDiagram d;
  d.underbridges = {{"u", {}}};
  d.overbridges = {{"o", "u", {"w"}, "u", 1}};
  EXPECT_THROW(braco::build_tangle_complex(d), braco::validation_error);
}

TEST(TangleComplex, PinnedTrefoilBoundaryMatrix) {
  ChainComplex c = braco::build_tangle_complex(builders::trefoil_tangle());
  EXPECT_EQ(c.lowest_degree(), -1);
  EXPECT_EQ(c.highest_degree(), 1);
  EXPECT_EQ(c.boundary_at(0), (IntMatrix{{1, 1, 1}}));
  EXPECT_EQ(c.boundary_at(1), (IntMatrix{{1, -1, 2}, {1, 2, -1}, {-2, -1, -1}}));
}

TEST(TangleComplex, SingleCrossingColumnShape) {
  // One overbridge passing under one underbridge: column -s, +2s, -s.
  BridgeDiagram d;
  d.underbridges = {{"u1", {}}, {"u2", {}}, {"u3", {}}};
  d.overbridges = {{"o", "u1", {"u2"}, "u3", -1}};
  ChainComplex c = braco::build_tangle_complex(d);
  EXPECT_EQ(c.boundary_at(1), (IntMatrix{{1}, {-2}, {1}}));
}

TEST(TangleHomology, FixturePins) {
  {
    braco::TangleHomologyReport r = braco::tangle_homology(builders::trefoil_tangle());
    EXPECT_EQ(r.h_minus_1.to_string(), "0");
    EXPECT_EQ(r.h_0.to_string(), "Z/3");
    EXPECT_EQ(r.h_1.to_string(), "Z");
  }
  {
    braco::TangleHomologyReport r = braco::tangle_homology(builders::unknot_circle_tangle());
    EXPECT_EQ(r.h_minus_1.to_string(), "0");
    EXPECT_EQ(r.h_0.to_string(), "0");
    EXPECT_EQ(r.h_1.to_string(), "Z");
  }
  {
    braco::TangleHomologyReport r = braco::tangle_homology(builders::arc_tangle());
    EXPECT_EQ(r.h_minus_1.to_string(), "0");
    EXPECT_EQ(r.h_0.to_string(), "0");
    EXPECT_EQ(r.h_1.to_string(), "0");
  }
  {
    braco::TangleHomologyReport r = braco::tangle_homology(builders::hopf_tangle());
    EXPECT_EQ(r.h_0.to_string(), "Z/2");
    EXPECT_EQ(r.h_1.to_string(), "Z");
  }
  {
    braco::TangleHomologyReport r = braco::tangle_homology(builders::fig8_tangle());
    EXPECT_EQ(r.h_0.to_string(), "Z/5");
    EXPECT_EQ(r.h_1.to_string(), "Z");
  }
  {
    braco::TangleHomologyReport r = braco::tangle_homology(builders::torus2_tangle(5));
    EXPECT_EQ(r.h_0.to_string(), "Z/5");
    EXPECT_EQ(r.h_1.to_string(), "Z");
  }
}

TEST(TangleCover, PinnedTrefoilCover) {
  ChainComplex c = braco::build_tangle_cover_complex(builders::trefoil_tangle());
  EXPECT_EQ(c.lowest_degree(), 0);
  EXPECT_EQ(c.highest_degree(), 2);
  EXPECT_EQ(c.rank_at(0), 2u);
  EXPECT_EQ(c.boundary_at(1), (IntMatrix{{1, 1, 1}, {-1, -1, -1}}));
  // The top boundary is literally the disoriented degree-1 boundary.
  EXPECT_EQ(c.boundary_at(2),
            braco::build_tangle_complex(builders::trefoil_tangle()).boundary_at(1));
  EXPECT_EQ(c.homology_at(0).to_string(), "Z");
  EXPECT_EQ(c.homology_at(1).to_string(), "Z/3");
  EXPECT_EQ(c.homology_at(2).to_string(), "Z");
}

TEST(TangleCover, MatchesDisorientedHomologyOnRandomDiagrams) {
  gen::Rng rng(420001);
  for (int trial = 0; trial < 200; ++trial) {
    BridgeDiagram d = gen::random_bridge_diagram(rng);
    ChainComplex dc = braco::build_tangle_complex(d);
    ChainComplex cover = braco::build_tangle_cover_complex(d);
    EXPECT_EQ(cover.homology_at(0).to_string(), "Z");
    EXPECT_EQ(cover.homology_at(1), dc.homology_at(0));
    EXPECT_EQ(cover.homology_at(2), dc.homology_at(1));
  }
}

TEST(TangleProperties, AugmentationKillsEveryBoundary) {
  gen::Rng rng(420002);
  for (int trial = 0; trial < 200; ++trial) {
    BridgeDiagram d = gen::random_bridge_diagram(rng);
    ChainComplex c = braco::build_tangle_complex(d);
    EXPECT_TRUE((c.boundary_at(0) * c.boundary_at(1)).is_zero());
    // Every degree-1 column sums to zero: each stop is entered and left with
    // opposite signs.
    IntMatrix d1 = c.boundary_at(1);
    for (std::size_t j = 0; j < d1.cols(); ++j) {
      braco::Int sum = 0;
      for (std::size_t i = 0; i < d1.rows(); ++i) sum += d1(i, j);
      EXPECT_EQ(sum, 0);
    }
  }
}

TEST(TangleProperties, DisorientationFlipPreservesHomology) {
  gen::Rng rng(420003);
  for (int trial = 0; trial < 200; ++trial) {
    BridgeDiagram d = gen::random_bridge_diagram(rng);
    if (d.overbridges.empty()) continue;
    braco::TangleHomologyReport before = braco::tangle_homology(d);
    const int k = gen::pick(rng, 0, static_cast<int>(d.overbridges.size()) - 1);
    d.overbridges[static_cast<std::size_t>(k)].disorientation *= -1;
    braco::TangleHomologyReport after = braco::tangle_homology(d);
    EXPECT_EQ(before.h_minus_1, after.h_minus_1);
    EXPECT_EQ(before.h_0, after.h_0);
    EXPECT_EQ(before.h_1, after.h_1);
  }
}

TEST(TangleProperties, ListOrderDoesNotMatter) {
  gen::Rng rng(420004);
  for (int trial = 0; trial < 200; ++trial) {
    BridgeDiagram d = gen::random_bridge_diagram(rng);
    braco::TangleHomologyReport before = braco::tangle_homology(d);
    BridgeDiagram shuffled = d;
    std::shuffle(shuffled.underbridges.begin(), shuffled.underbridges.end(), rng);
    std::shuffle(shuffled.overbridges.begin(), shuffled.overbridges.end(), rng);
    braco::TangleHomologyReport after = braco::tangle_homology(shuffled);
    EXPECT_EQ(before.h_minus_1, after.h_minus_1);
    EXPECT_EQ(before.h_0, after.h_0);
    EXPECT_EQ(before.h_1, after.h_1);
  }
}

TEST(TangleProperties, HomologyInvariantUnderUnimodularBasisChange) {
  gen::Rng rng(420005);
  for (int trial = 0; trial < 200; ++trial) {
    BridgeDiagram d = gen::random_bridge_diagram(rng);
    ChainComplex c = braco::build_tangle_complex(d);
    const std::size_t nu = c.rank_at(0), no = c.rank_at(1);
    gen::UnimodularPair t = gen::random_unimodular(rng, nu);
    // Change basis in degree 0: conjugate the maps in and out of it.
    ChainComplex changed(-1, {1, nu, no},
                         {c.boundary_at(0) * t.pinv, t.p * c.boundary_at(1)});
    for (int k = -1; k <= 1; ++k) EXPECT_EQ(changed.homology_at(k), c.homology_at(k));
  }
}

TEST(TangleDeterminant, TwistChainFamilyMatchesGoeritzOracle) {
  for (int n = 2; n <= 8; ++n) {
    braco::DeterminantReport r = braco::determinant_of_tangle(builders::torus2_tangle(n));
    EXPECT_FALSE(r.infinite);
    long long expected = oracle::det(oracle::goeritz_matrix(oracle::twist_chain_diagram(n, +1)));
    if (expected < 0) expected = -expected;
    EXPECT_EQ(r.value, expected) << "(2," << n << ") torus link determinant";
  }
}

TEST(TangleDeterminant, FixturePins) {
  EXPECT_EQ(braco::determinant_of_tangle(builders::trefoil_tangle()).value, 3);
  EXPECT_EQ(braco::determinant_of_tangle(builders::fig8_tangle()).value, 5);
  EXPECT_EQ(braco::determinant_of_tangle(builders::unknot_circle_tangle()).value, 1);
  EXPECT_EQ(braco::determinant_of_tangle(builders::arc_tangle()).value, 1);
  EXPECT_EQ(braco::determinant_of_tangle(builders::hopf_tangle()).value, 2);
}

TEST(TangleDeterminant, InfiniteWhenDegreeZeroHasFreeRank) {
  // Two circles with no overbridges: H_0 = ker(eps) = Z.
  BridgeDiagram d;
  d.underbridges = {{"u1", {}}, {"u2", {}}};
  braco::DeterminantReport r = braco::determinant_of_tangle(d);
  EXPECT_TRUE(r.infinite);
}

}  // namespace
