#include <gtest/gtest.h>

#include <set>

#include "railknot/invariants.hpp"
#include "railknot/rng.hpp"
#include "test_support.hpp"

using namespace railknot;

static F2Word W(const std::string& s) {
  auto w = parse_word(s);
  EXPECT_TRUE(w.has_value()) << s;
  return *w;
}

TEST(F2, NormalFormExamples) {
  EXPECT_EQ(format_word(f2_normal_form(W("x1 x1^-1"))), "ε");
  EXPECT_EQ(format_word(f2_normal_form(W("x1 x1 x2 x1 x2 x2^-1 x2"))), "x2 x1");
  EXPECT_EQ(format_word(f2_normal_form(W("x1 x2"))), "ε");
  EXPECT_EQ(format_word(f2_normal_form(W("x2 x1"))), "x2 x1");
}

TEST(F2, NormalFormIdempotentAndInvariantShaped) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    F2Word w;
    int len = rng.int_in(0, 12);
    for (int i = 0; i < len; ++i) {
      int letters[4] = {1, -1, 2, -2};
      w.push_back(letters[rng.below(4)]);
    }
    F2Word nf = f2_normal_form(w);
    EXPECT_EQ(f2_normal_form(nf), nf);
    if (!nf.empty()) {
      EXPECT_NE(std::abs(nf.front()), 1);
      EXPECT_NE(std::abs(nf.back()), 2);
    }
    // freely reduced
    for (size_t i = 0; i + 1 < nf.size(); ++i) EXPECT_NE(nf[i], -nf[i + 1]);
  }
}

// brute-force cross-check: all words reachable from w by inserting canceling
// pairs and multiplying by x1 powers on the left / x2 powers on the right
// share one normal form
TEST(F2, NormalFormAgreesWithEquivalenceClosure) {
  std::vector<F2Word> seeds = {W("x2 x1"), W("x1 x1 x2 x1 x2 x2^-1 x2"), W("x1 x2"), {}};
  for (const auto& seed : seeds) {
    F2Word nf = f2_normal_form(seed);
    std::set<F2Word> seen{seed};
    std::vector<F2Word> frontier{seed};
    for (int depth = 0; depth < 2; ++depth) {
      std::vector<F2Word> next;
      for (const auto& w : frontier) {
        if (w.size() > 8) continue;
        std::vector<F2Word> neighbors;
        for (int g : {1, -1}) {
          F2Word left = w;
          left.insert(left.begin(), g);
          neighbors.push_back(left);
        }
        for (int g : {2, -2}) {
          F2Word right = w;
          right.push_back(g);
          neighbors.push_back(right);
        }
        for (size_t pos = 0; pos <= w.size(); ++pos) {
          for (int g : {1, -1, 2, -2}) {
            F2Word ins = w;
            ins.insert(ins.begin() + pos, -g);
            ins.insert(ins.begin() + pos, g);
            neighbors.push_back(ins);
          }
        }
        for (auto& nb : neighbors) {
          if (seen.insert(nb).second) next.push_back(nb);
        }
      }
      frontier = std::move(next);
    }
    for (const auto& w : seen) EXPECT_EQ(f2_normal_form(w), nf) << format_word(w);
  }
}

// hand-built one-crossing knotoids, all four kink variants
static KnotoidDiagram kink_knotoid(bool side, bool over) {
  KnotoidDiagram d;
  int leg = d.new_vertex({KKind::Leg});
  int head = d.new_vertex({KKind::Head});
  int X = d.new_vertex({KKind::Xing});
  Dart m = d.new_dart(leg), n = d.new_dart(head);
  d.set_cycle({m});
  d.set_cycle({n});
  Dart t0 = d.new_dart(X), t1 = d.new_dart(X), t2 = d.new_dart(X), t3 = d.new_dart(X);
  d.set_cycle({t0, t1, t2, t3});
  d.link(t0, t1);
  if (side) {
    d.link(m, t3);
    d.link(n, t2);
  } else {
    d.link(m, t2);
    d.link(n, t3);
  }
  d.verts[X].over_dart = over ? t1 : t0;
  return d;
}

TEST(Bracket, TrivialIsOne) {
  auto b = bracket(trivial_knotoid());
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(*b.poly, LaurentPoly::one());
  EXPECT_EQ(b.poly->to_string(), "1*A^0");
}

TEST(Bracket, KinkStates) {
  // two-state enumeration: one smoothing leaves a bare arc, the other adds a
  // loop, so the bracket is -A^(+-3) and the normalized bracket is 1
  for (bool side : {false, true}) {
    for (bool over : {false, true}) {
      KnotoidDiagram k = kink_knotoid(side, over);
      ASSERT_TRUE(validate(k).ok()) << validate(k).joined();
      auto b = bracket(k);
      ASSERT_TRUE(b.ok());
      int w = writhe(k);
      EXPECT_TRUE(w == 1 || w == -1);
      LaurentPoly expect = LaurentPoly::term(-1, 3 * w);
      EXPECT_EQ(*b.poly, expect) << "side=" << side << " over=" << over;
      auto nb = normalized_bracket(k);
      ASSERT_TRUE(nb.ok());
      EXPECT_EQ(*nb.poly, LaurentPoly::one());
      auto oracle = bracket_skein_oracle(k);
      ASSERT_TRUE(oracle.ok());
      EXPECT_EQ(*oracle.poly, *b.poly);
    }
  }
}

TEST(Bracket, StateSumMatchesSkeinOracleOnProjections) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RailArc3D a = random_arc(5 + static_cast<int>(seed % 5), seed * 1009 + 3);
    auto res = project_perpendicular(a);
    ASSERT_TRUE(res.ok());
    if (res.diagram->crossing_count() > 8) continue;
    auto b1 = bracket(*res.diagram);
    auto b2 = bracket_skein_oracle(*res.diagram);
    ASSERT_TRUE(b1.ok() && b2.ok());
    EXPECT_EQ(*b1.poly, *b2.poly);
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(Bracket, CrossingLimitReported) {
  auto b = bracket(trivial_knotoid(), -1);
  EXPECT_FALSE(b.ok());
  EXPECT_NE(b.error.find("limit"), std::string::npos);
}

TEST(Writhe, TrivialZero) {
  EXPECT_EQ(writhe(trivial_knotoid()), 0);
  RailDiagram d = trivial_diagram();
  EXPECT_EQ(writhe(d), 0);
}

TEST(Writhe, MirrorKinksOpposite) {
  // the four kink variants: flipping either choice flips the sign
  int s00 = writhe(kink_knotoid(false, false));
  int s01 = writhe(kink_knotoid(false, true));
  int s10 = writhe(kink_knotoid(true, false));
  int s11 = writhe(kink_knotoid(true, true));
  // flipping the over strand mirrors the kink; swapping the attachments
  // reverses the arc, which preserves the sign
  EXPECT_EQ(s00, -s01);
  EXPECT_EQ(s00, s10);
  EXPECT_EQ(s00, -s11);
}

TEST(F2, UnderCrossingsContributeNothing) {
  // wind3 crosses rail 2 in front twice, in opposite directions
  RailDiagram d = rktest::must_project(rktest::load_arc("wind3.arc"));
  F2Word w = f2_word(d);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], -w[1]);
  EXPECT_TRUE(f2_normal_form(w).empty());
}
