#include <gtest/gtest.h>

#include "railknot/io.hpp"
#include "railknot/rng.hpp"
#include "test_support.hpp"

using namespace railknot;

TEST(ArcFormat, SpecExample) {
  auto p = parse_arc("rail-arc v1\nv 0 0 0\nv 1/2 1 1/2\nv 1 0 0\n");
  ASSERT_TRUE(p.ok()) << p.error.to_string();
  EXPECT_EQ(p.value->vertices.size(), 3u);
  EXPECT_EQ(p.value->vertices[1], Vec3(Rat(1) / 2, Rat(1), Rat(1) / 2));
}

TEST(ArcFormat, RoundTripByteIdentical) {
  std::string text = "rail-arc v1\nv 0 0 0\nv 1/2 1 1/2\nv 1 0 0\n";
  auto p = parse_arc(text);
  ASSERT_TRUE(p.ok());
  std::string once = serialize_arc(*p.value);
  auto p2 = parse_arc(once);
  ASSERT_TRUE(p2.ok());
  EXPECT_EQ(serialize_arc(*p2.value), once);
}

TEST(ArcFormat, BadRational) {
  auto p = parse_arc("rail-arc v1\nv 0 0 0\nv 1/0 1 1\nv 1 0 0\n");
  ASSERT_FALSE(p.ok());
  EXPECT_EQ(p.error.line, 3);
}

TEST(ArcFormat, MissingHeader) {
  EXPECT_FALSE(parse_arc("v 0 0 0\n").ok());
}

TEST(DiagramFormat, TrivialGoldenRoundTrip) {
  RailDiagram d = trivial_diagram();
  std::string text = serialize_diagram(d);
  auto p = parse_diagram(text);
  ASSERT_TRUE(p.ok()) << p.error.to_string();
  EXPECT_EQ(serialize_diagram(*p.value), text);
  EXPECT_EQ(canonical_code(*p.value), canonical_code(d));
}

TEST(DiagramFormat, RelabeledFileParsesToSameCode) {
  RailDiagram d = trivial_diagram();
  Rng rng(11);
  std::vector<Dart> perm(d.dart_count());
  for (int i = 0; i < d.dart_count(); ++i) perm[i] = i;
  for (int i = d.dart_count() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  RailDiagram r = relabel(d, perm);
  auto p = parse_diagram(serialize_diagram(r));
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(canonical_code(*p.value), canonical_code(d));
}

TEST(DiagramFormat, MissingInfSection) {
  RailDiagram d = trivial_diagram();
  std::string text = serialize_diagram(d);
  std::string removed;
  for (const auto& line : io_detail::lines_of(text)) {
    if (line.rfind("inf:", 0) == 0) continue;
    removed += line + "\n";
  }
  auto p = parse_diagram(removed);
  ASSERT_FALSE(p.ok());
  EXPECT_NE(p.error.message.find("inf"), std::string::npos);
}

TEST(DiagramFormat, ProjectedDiagramRoundTrips) {
  RailDiagram d = rktest::must_project(rktest::load_arc("w21.arc"));
  std::string text = serialize_diagram(d);
  auto p = parse_diagram(text);
  ASSERT_TRUE(p.ok()) << p.error.to_string();
  EXPECT_EQ(serialize_diagram(*p.value), text);
  EXPECT_EQ(canonical_code(*p.value), canonical_code(d));
}

TEST(DiagramFormat, KnotoidRoundTrip) {
  auto res = project_perpendicular(rktest::load_arc("wind3.arc"));
  ASSERT_TRUE(res.ok()) << res.report.joined();
  std::string text = serialize_diagram(*res.diagram);
  auto p = parse_knotoid(text);
  ASSERT_TRUE(p.ok()) << p.error.to_string();
  EXPECT_EQ(serialize_diagram(*p.value), text);
  EXPECT_EQ(canonical_code(*p.value), canonical_code(*res.diagram));
}

TEST(DiagramFormat, GarbageRejectedWithoutCrash) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::string junk = "rkd v1\n";
    int len = rng.int_in(0, 80);
    for (int i = 0; i < len; ++i) junk.push_back(static_cast<char>(rng.int_in(32, 126)));
    junk.push_back('\n');
    auto p = parse_diagram(junk);  // must not crash; almost surely fails
    if (p.ok()) EXPECT_TRUE(validate(*p.value).ok());
  }
}
