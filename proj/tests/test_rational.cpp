#include <gtest/gtest.h>

#include "railknot/rational.hpp"

using namespace railknot;

TEST(Rational, ParseFormat) {
  auto r = parse_rat("3/4");
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, Rat(3) / 4);
  EXPECT_EQ(format_rat(*r), "3/4");
  EXPECT_EQ(format_rat(Rat(-2)), "-2");
  EXPECT_FALSE(parse_rat("1/0").has_value());
  EXPECT_FALSE(parse_rat("").has_value());
  EXPECT_FALSE(parse_rat("x").has_value());
  EXPECT_EQ(format_rat(*parse_rat("-6/4")), "-3/2");
}

TEST(Rational, Orient2d) {
  Vec2 a(Rat(0), Rat(0)), b(Rat(1), Rat(0)), c(Rat(0), Rat(1));
  EXPECT_GT(orient2d(a, b, c), 0);
  EXPECT_LT(orient2d(a, c, b), 0);
  EXPECT_EQ(orient2d(a, b, Vec2(Rat(2), Rat(0))), 0);
}

TEST(Rational, AngleOrder) {
  Vec2 east(Rat(1), Rat(0)), north(Rat(0), Rat(1)), west(Rat(-1), Rat(0)), south(Rat(0), Rat(-1));
  EXPECT_TRUE(angle_less(east, north));
  EXPECT_TRUE(angle_less(north, west));
  EXPECT_TRUE(angle_less(west, south));
  EXPECT_FALSE(angle_less(south, east));  // east is angle 0
  EXPECT_TRUE(angle_less(Vec2(Rat(3), Rat(1)), Vec2(Rat(1), Rat(3))));
}

TEST(Rational, SegmentIntersect2) {
  auto r = intersect_segments2(Vec2(Rat(0), Rat(0)), Vec2(Rat(2), Rat(2)), Vec2(Rat(0), Rat(2)),
                               Vec2(Rat(2), Rat(0)));
  ASSERT_EQ(r.kind, SegIntersect2::Point);
  EXPECT_EQ(r.point, Vec2(Rat(1), Rat(1)));
  EXPECT_EQ(r.t1, Rat(1) / 2);

  auto none = intersect_segments2(Vec2(Rat(0), Rat(0)), Vec2(Rat(1), Rat(0)), Vec2(Rat(0), Rat(1)),
                                  Vec2(Rat(1), Rat(1)));
  EXPECT_EQ(none.kind, SegIntersect2::None);

  auto overlap = intersect_segments2(Vec2(Rat(0), Rat(0)), Vec2(Rat(2), Rat(0)),
                                     Vec2(Rat(1), Rat(0)), Vec2(Rat(3), Rat(0)));
  EXPECT_EQ(overlap.kind, SegIntersect2::Overlap);

  auto touch = intersect_segments2(Vec2(Rat(0), Rat(0)), Vec2(Rat(2), Rat(0)),
                                   Vec2(Rat(2), Rat(0)), Vec2(Rat(3), Rat(5)));
  EXPECT_EQ(touch.kind, SegIntersect2::Point);
  EXPECT_EQ(touch.t1, Rat(1));
}

TEST(Rational, Segments3) {
  Vec3 o(Rat(0), Rat(0), Rat(0));
  EXPECT_TRUE(segments_intersect3(o, Vec3(Rat(2), Rat(2), Rat(2)), Vec3(Rat(2), Rat(0), Rat(0)),
                                  Vec3(Rat(0), Rat(2), Rat(2))));
  EXPECT_FALSE(segments_intersect3(o, Vec3(Rat(1), Rat(0), Rat(0)), Vec3(Rat(0), Rat(0), Rat(1)),
                                   Vec3(Rat(1), Rat(0), Rat(1))));
  // collinear overlap
  EXPECT_TRUE(segments_intersect3(o, Vec3(Rat(2), Rat(0), Rat(0)), Vec3(Rat(1), Rat(0), Rat(0)),
                                  Vec3(Rat(3), Rat(0), Rat(0))));
  // skew
  EXPECT_FALSE(segments_intersect3(o, Vec3(Rat(1), Rat(0), Rat(0)), Vec3(Rat(0), Rat(1), Rat(1)),
                                   Vec3(Rat(1), Rat(1), Rat(1))));
}

TEST(Rational, Distances) {
  Vec3 a(Rat(0), Rat(0), Rat(0)), b(Rat(2), Rat(0), Rat(0));
  EXPECT_EQ(dist2_point_segment3(Vec3(Rat(1), Rat(3), Rat(0)), a, b), Rat(9));
  EXPECT_EQ(dist2_point_segment3(Vec3(Rat(5), Rat(0), Rat(0)), a, b), Rat(9));
  EXPECT_EQ(dist2_segments3(a, b, Vec3(Rat(0), Rat(1), Rat(0)), Vec3(Rat(2), Rat(1), Rat(0))),
            Rat(1));
  // line x=0,y=0 (the first rail), direction z
  EXPECT_EQ(dist2_segment_line3(Vec3(Rat(1), Rat(0), Rat(-5)), Vec3(Rat(1), Rat(0), Rat(7)),
                                Vec3(Rat(0), Rat(0), Rat(0)), Vec3(Rat(0), Rat(0), Rat(1))),
            Rat(1));
}
