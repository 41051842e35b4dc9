#include <gtest/gtest.h>

#include <random>

#include "rootclust/geometry.hpp"

using namespace rootclust;

namespace {

Box box(long cx, long cy, long w, long e = 0) {
  return Box{{Dyadic(cx).mul_2exp(e), Dyadic(cy).mul_2exp(e)}, Dyadic(w).mul_2exp(e)};
}

const Box kRoi = box(0, 0, 8);

}  // namespace

TEST(BoxChildren, OrderAndGeometry) {
  const auto c = box_children(box(0, 0, 4));
  EXPECT_EQ(c[0], box(-1, -1, 2));
  EXPECT_EQ(c[1], box(1, -1, 2));
  EXPECT_EQ(c[2], box(-1, 1, 2));
  EXPECT_EQ(c[3], box(1, 1, 2));
  // Children tile the parent exactly.
  const Box parent = box(3, -5, 1, -3);
  for (const Box& b : box_children(parent)) {
    EXPECT_GE(b.xmin(), parent.xmin());
    EXPECT_LE(b.xmax(), parent.xmax());
    EXPECT_EQ(b.width, parent.width.mul_2exp(-1));
  }
}

TEST(ContainingDisc, ThreeQuartersWidth) {
  const Disc d = containing_disc(box(1, 2, 4));
  EXPECT_EQ(d.radius, Dyadic(3));
  EXPECT_EQ(d.center.re, Dyadic(1));
  // The box corners lie inside.
  EXPECT_TRUE(point_in_disc(mpq_class(3), mpq_class(4), d));
  EXPECT_FALSE(point_in_disc(mpq_class(4), mpq_class(5), d));
}

TEST(ExactTests, DiscBoxRelations) {
  const Box b = box(0, 0, 2);
  EXPECT_TRUE(disc_intersects_box(Disc{{Dyadic(2), Dyadic(0)}, Dyadic(1)}, b));
  EXPECT_FALSE(disc_intersects_box(Disc{{Dyadic(3), Dyadic(3)}, Dyadic(2)}, b));
  EXPECT_TRUE(disc_inside_box(Disc{{Dyadic(0), Dyadic(0)}, Dyadic(1)}, b));
  EXPECT_FALSE(disc_inside_box(Disc{{Dyadic(0), Dyadic(1).mul_2exp(-4)}, Dyadic(1)}, b));
  EXPECT_TRUE(discs_intersect(Disc{{Dyadic(0), Dyadic(0)}, Dyadic(1)}, Disc{{Dyadic(2), Dyadic(0)}, Dyadic(1)}));
  EXPECT_FALSE(discs_intersect(Disc{{Dyadic(0), Dyadic(0)}, Dyadic(1)}, Disc{{Dyadic(3), Dyadic(0)}, Dyadic(1)}));
}

TEST(ImaginarySign, ClosedBoxesTouchingTheAxisAreMixed) {
  EXPECT_EQ(imaginary_sign(box(0, 3, 2)), ImagSign::positive);
  EXPECT_EQ(imaginary_sign(box(0, -3, 2)), ImagSign::negative);
  EXPECT_EQ(imaginary_sign(box(0, 1, 2)), ImagSign::mixed);
  EXPECT_EQ(imaginary_sign(box(5, 0, 2)), ImagSign::mixed);
}

TEST(GroupComponents, EdgeAndCornerContact) {
  // Edge neighbours.
  EXPECT_EQ(group_components({box(1, 1, 2), box(3, 1, 2)}, kRoi).size(), 1u);
  // Corner contact only.
  EXPECT_EQ(group_components({box(1, 1, 2), box(3, 3, 2)}, kRoi).size(), 1u);
  // Separated by a gap.
  EXPECT_EQ(group_components({box(1, 1, 2), box(5, 1, 2)}, kRoi).size(), 2u);
}

TEST(GroupComponents, PartitionMatchesFloodFill) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 8;
    bool grid[n][n] = {};
    std::vector<Box> boxes;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (rng() % 3 == 0) {
          grid[i][j] = true;
          boxes.push_back(box(2 * i - n + 1, 2 * j - n + 1, 2, -1));
        }
      }
    }
    int label[n][n] = {};
    int count = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!grid[i][j] || label[i][j]) continue;
        ++count;
        std::vector<std::pair<int, int>> stack{{i, j}};
        label[i][j] = count;
        while (!stack.empty()) {
          auto [a, b] = stack.back();
          stack.pop_back();
          for (int da = -1; da <= 1; ++da) {
            for (int db = -1; db <= 1; ++db) {
              int x = a + da, y = b + db;
              if (x < 0 || y < 0 || x >= n || y >= n || !grid[x][y] || label[x][y]) continue;
              label[x][y] = count;
              stack.push_back({x, y});
            }
          }
        }
      }
    }
    const auto comps = group_components(boxes, kRoi);
    EXPECT_EQ(static_cast<int>(comps.size()), count);
    std::size_t total = 0;
    for (const auto& c : comps) total += c.boxes().size();
    EXPECT_EQ(total, boxes.size());
  }
}

TEST(Component, ComponentBoxCoversBoxesAndStaysInRoi) {
  const Component c({box(1, 1, 2), box(3, 1, 2), box(3, 3, 2)}, kRoi);
  EXPECT_EQ(c.width(), Dyadic(4));
  for (const Box& b : c.boxes()) {
    EXPECT_LE(c.component_box().xmin(), b.xmin());
    EXPECT_GE(c.component_box().xmax(), b.xmax());
    EXPECT_LE(c.component_box().ymin(), b.ymin());
    EXPECT_GE(c.component_box().ymax(), b.ymax());
  }
  // A 1x2 strip at the region edge gets a square box shifted inside.
  const Component edge({box(3, 3, 2), box(3, 1, 2)}, kRoi);
  EXPECT_EQ(edge.width(), Dyadic(4));
  EXPECT_LE(edge.component_box().xmax(), kRoi.xmax());
}

TEST(Predicates, CompactAndSeparated) {
  const Box roi = box(0, 0, 64);
  const Component single({box(1, 1, 2)}, roi);
  EXPECT_TRUE(is_compact(single));
  const Component strip({box(1, 1, 2), box(3, 1, 2), box(5, 1, 2), box(7, 1, 2)}, roi);
  EXPECT_FALSE(is_compact(strip));
  const Component far({box(25, 25, 2)}, roi);
  const Component near({box(5, 1, 2)}, roi);
  EXPECT_TRUE(is_separated(single, {&far}, roi));
  EXPECT_FALSE(is_separated(single, {&near}, roi));
  auto pr = component_predicates(single, {&far}, roi);
  EXPECT_TRUE(pr.is_compact);
  EXPECT_TRUE(pr.is_separated);
  // 4 * disc must stay inside 2 * roi.
  const Component corner({box(31, 31, 2)}, roi);
  EXPECT_TRUE(is_separated(corner, {}, roi));
  const Component big({box(16, 16, 32)}, roi);
  EXPECT_FALSE(is_separated(big, {}, roi));
}

TEST(ConjugateClosure, MirrorsAcrossTheAxis) {
  const Component c({box(1, 1, 2), box(1, -1, 2)}, kRoi);
  EXPECT_EQ(c.imaginary_sign(), ImagSign::mixed);
  // A closed box resting on the axis is mixed; its closure adds the mirror.
  const Component closed = conjugate_closure(Component({box(1, 1, 2)}, kRoi));
  EXPECT_EQ(closed.boxes().size(), 2u);
  const Component mixed({box(1, 1, 2), box(3, 1, 2), box(3, -1, 2)}, kRoi);
  const Component mc = conjugate_closure(mixed);
  EXPECT_EQ(mc.boxes().size(), 4u);
  EXPECT_EQ(mc.ymin(), -mc.ymax());
  EXPECT_THROW(conjugate_closure(Component({box(1, 3, 2)}, kRoi)), NotRealIntersecting);
}

TEST(ConjugateClosure, IsIdempotentAndSymmetric) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Box> boxes{box(1, 1, 2)};
    for (int i = 0; i < 4; ++i) {
      const Box& last = boxes.back();
      long dx = static_cast<long>(rng() % 3) - 1;
      long dy = static_cast<long>(rng() % 3) - 1;
      Box next{{last.center.re + Dyadic(2 * dx), last.center.im + Dyadic(2 * dy)}, Dyadic(2)};
      if (next.xmin() < kRoi.xmin() || next.xmax() > kRoi.xmax() || next.ymin() < kRoi.ymin() ||
          next.ymax() > kRoi.ymax() || next.ymin() < Dyadic(0))
        continue;
      bool dup = false;
      for (const Box& b : boxes) dup = dup || b == next;
      if (!dup) boxes.push_back(next);
    }
    const Component c(boxes, kRoi);
    const Component cc = conjugate_closure(c);
    const Component ccc = conjugate_closure(cc);
    EXPECT_EQ(cc.boxes().size(), ccc.boxes().size());
    EXPECT_EQ(cc.ymin(), -cc.ymax());
    for (const Box& b : cc.boxes()) {
      bool mirrored = false;
      for (const Box& o : cc.boxes()) mirrored = mirrored || o == b.conj();
      EXPECT_TRUE(mirrored);
    }
  }
}
