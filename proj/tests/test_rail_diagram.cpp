#include <gtest/gtest.h>

#include "railknot/rail_diagram.hpp"
#include "railknot/rng.hpp"

using namespace railknot;

TEST(RailDiagram, TrivialValidates) {
  RailDiagram d = trivial_diagram();
  auto rep = validate(d);
  EXPECT_TRUE(rep.ok()) << rep.joined();
  EXPECT_EQ(d.dart_count(), 10);
  EXPECT_EQ(d.vertex_count(), 3);
  EXPECT_EQ(d.crossing_count(), 0);
}

// Hand enumeration of the trivial map's face orbits: with inf rotation
// l1t -> l2t -> l2b -> l1b, the four faces are (l1t, headup, legarc),
// (l1b, legup), (l2b, legdn, headarc-reverse) and (l2t, headdn); four in
// total, satisfying 3 - 5 + 4 = 2.
TEST(RailDiagram, TrivialFaceCount) {
  RailDiagram d = trivial_diagram();
  auto an = analyze(d);
  ASSERT_TRUE(an.ok());
  EXPECT_EQ(an.analysis.faces.size(), 4u);
  size_t total = 0;
  for (const auto& f : an.analysis.faces) total += f.size();
  EXPECT_EQ(total, 10u);
}

TEST(RailDiagram, BrokenAlphaRejected) {
  RailDiagram d = trivial_diagram();
  d.alpha[0] = 0;  // fixed point
  auto rep = validate(d);
  ASSERT_FALSE(rep.ok());
  EXPECT_NE(rep.joined().find("involution"), std::string::npos);
}

TEST(RailDiagram, WrongInfOrderRejected) {
  RailDiagram d = trivial_diagram();
  std::swap(d.inf_darts[0], d.inf_darts[1]);
  EXPECT_FALSE(validate(d).ok());
}

TEST(RailDiagram, AnalysisRoles) {
  RailDiagram d = trivial_diagram();
  auto res = analyze(d);
  ASSERT_TRUE(res.ok());
  const auto& an = res.analysis;
  EXPECT_EQ(an.rail_vertices[0].size(), 1u);
  EXPECT_EQ(an.rail_vertices[0][0], an.leg_vertex);
  EXPECT_EQ(an.rail_vertices[1][0], an.head_vertex);
  ASSERT_EQ(an.walk.size(), 2u);
  EXPECT_EQ(an.walk.front().v, an.leg_vertex);
  EXPECT_EQ(an.walk.back().v, an.head_vertex);
  // the leg's arc dart pairs with the head's arc dart in the trivial diagram
  EXPECT_EQ(d.alpha[an.arc_dart[an.leg_vertex]], an.arc_dart[an.head_vertex]);
}

TEST(RailDiagram, CanonicalCodeDeterministic) {
  EXPECT_EQ(canonical_code(trivial_diagram()), canonical_code(trivial_diagram()));
}

TEST(RailDiagram, CanonicalCodeRelabelInvariant) {
  RailDiagram d = trivial_diagram();
  std::string code = canonical_code(d);
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Dart> perm(d.dart_count());
    for (int i = 0; i < d.dart_count(); ++i) perm[i] = i;
    for (int i = d.dart_count() - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.below(i + 1)]);
    RailDiagram r = relabel(d, perm);
    EXPECT_TRUE(validate(r).ok());
    EXPECT_EQ(canonical_code(r), code);
  }
}

TEST(RailDiagram, SmoothOutKeepsNothingForEmptyList) {
  RailDiagram d = trivial_diagram();
  auto remap = d.smooth_out({});
  EXPECT_TRUE(validate(d).ok());
  EXPECT_EQ(remap.size(), 10u);
}
