#include "oracles.hpp"
#include "parahilb/cells.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace parahilb;

namespace {

Poly from_dense(oracle::DensePoly const &p) {
  Poly r;
  for (std::size_t e = 0; e < p.size(); ++e) r.add_term(static_cast<int>(e), p[e]);
  return r;
}

} // namespace

TEST(Cells, Psi) {
  EXPECT_EQ(psi(CellLabel{}), IndexVector{});
  EXPECT_EQ(psi(CellLabel{{0, 2, 1}}), (IndexVector{{0, 2}}));
  EXPECT_EQ(psi(CellLabel{{1, 1, 1}, {0, 1, 1}}), (IndexVector{{0, 2}, {1, 1}}));
}

TEST(Cells, LabelValidation) {
  EXPECT_THROW(CellLabel({{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(CellLabel({{-1, 0, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(CellLabel({{1, 0, 1}}));
}

TEST(Cells, EnumerateExamples) {
  auto l = enumerate_labels({{0, 2}});
  ASSERT_EQ(l.size(), 2u);
  EXPECT_NE(std::find(l.begin(), l.end(), CellLabel{{0, 2, 1}}), l.end());
  EXPECT_NE(std::find(l.begin(), l.end(), CellLabel{{0, 1, 2}}), l.end());

  auto l2 = enumerate_labels({{0, 1}, {1, 1}});
  ASSERT_EQ(l2.size(), 2u);
  EXPECT_NE(std::find(l2.begin(), l2.end(), CellLabel({{0, 1, 1}, {1, 0, 1}})), l2.end());
  EXPECT_NE(std::find(l2.begin(), l2.end(), CellLabel{{1, 1, 1}}), l2.end());

  auto l3 = enumerate_labels({{0, 1}, {-1, 1}});
  ASSERT_EQ(l3.size(), 1u);
  EXPECT_EQ(l3[0], (CellLabel{{-1, 1, 1}}));

  EXPECT_TRUE(enumerate_labels({{-1, 1}}).empty());
  EXPECT_EQ(enumerate_labels({}).size(), 1u);
}

TEST(Cells, EnumerationIsExactAndDuplicateFree) {
  for (auto const &v : index_vectors_in_window(Window(-2, 3), 4, 2)) {
    if (!is_admissible(v)) continue;
    auto labels = enumerate_labels(v);
    std::set<std::vector<Part>> seen;
    for (auto const &eta : labels) {
      EXPECT_EQ(psi(eta), v) << eta.to_string();
      EXPECT_TRUE(seen.insert(eta.part_list()).second) << "duplicate " << eta.to_string();
      Count d = cell_dimension(eta);
      EXPECT_GE(d, 0);
      EXPECT_LE(d, rho0(v));
    }
    EXPECT_TRUE(std::is_sorted(labels.begin(), labels.end()));
  }
}

TEST(Cells, Seminorm) {
  EXPECT_EQ(seminorm(CellLabel{{0, 2, 1}}), 1);
  EXPECT_EQ(seminorm(CellLabel({{0, 1, 1}, {1, 0, 1}})), 1);
  EXPECT_EQ(seminorm(CellLabel{{-1, 1, 1}}), 1);
}

TEST(Cells, Dimension) {
  EXPECT_EQ(cell_dimension(CellLabel{{0, 2, 1}}), 1);
  EXPECT_EQ(cell_dimension(CellLabel{{0, 1, 2}}), 0);
  EXPECT_EQ(cell_dimension(CellLabel{{-1, 1, 1}}), 0);
}

TEST(Cells, PartitionNumbers) {
  for (int n = 0; n <= 7; ++n)
    EXPECT_EQ(static_cast<oracle::i64>(enumerate_labels(IndexVector::unit(0, n)).size()),
              oracle::partition_number(n))
        << "n=" << n;
}

TEST(Cells, PunctualPlaneMatchesPartitionOracle) {
  for (int n = 0; n <= 7; ++n)
    EXPECT_EQ(punctual_poincare(IndexVector::unit(0, n)), from_dense(oracle::punctual_plane_poincare(n)))
        << "n=" << n;
}

TEST(Cells, PoincareAndMotiveExamples) {
  EXPECT_EQ(punctual_poincare({{0, 2}}).to_string("z"), "1+z^2");
  EXPECT_EQ(punctual_poincare({{0, 2}, {1, 1}}).to_string("z"), "1+2z^2+z^4");
  EXPECT_EQ(punctual_poincare({}).to_string("z"), "1");
  EXPECT_EQ(punctual_motive({{0, 2}}).to_string("L"), "1+L");
  EXPECT_EQ(punctual_motive({{0, 2}, {1, 1}}).to_string("L"), "1+2L+L^2");
  EXPECT_EQ(punctual_motive({{0, 1}, {-1, 1}}).to_string("L"), "1");
  EXPECT_THROW(punctual_poincare({{-1, 1}}), std::invalid_argument);
}

TEST(Cells, PoincareIsMotiveAtZSquared) {
  for (auto const &v : index_vectors_in_window(Window(-1, 2), 4, 2))
    if (is_admissible(v)) {
      EXPECT_EQ(punctual_poincare(v), punctual_motive(v).dilate(2));
    }
}

TEST(Cells, TopCellExamples) {
  auto t = top_cells({{0, 2}, {1, 1}});
  EXPECT_EQ(t.dimension, 2);
  ASSERT_EQ(t.labels.size(), 1u);
  EXPECT_EQ(t.labels[0], (CellLabel{{1, 2, 1}}));

  auto t3 = top_cells({{0, 3}});
  EXPECT_EQ(t3.dimension, 2);
  ASSERT_EQ(t3.labels.size(), 1u);
  EXPECT_EQ(t3.labels[0], (CellLabel{{0, 3, 1}}));

  auto t0 = top_cells({});
  EXPECT_EQ(t0.dimension, 0);
  ASSERT_EQ(t0.labels.size(), 1u);
  EXPECT_TRUE(t0.labels[0].empty());
  EXPECT_THROW(top_cells({{0, 1}, {-1, 1}}), std::invalid_argument);
}

TEST(Cells, TopCellCharacterizationOverRange) {
  for (auto const &v : index_vectors_in_window(Window(-1, 3), 4, 2)) {
    if (!is_admissible(v) || norms(v).minus != 0) continue;
    auto t = top_cells(v);
    EXPECT_TRUE(t.characterization_ok) << v.to_string() << ": " << t.violation;
    EXPECT_EQ(t.dimension, t.bound) << v.to_string();
  }
}

TEST(Cells, UniqueTopCellForSingleJump) {
  for (Count n = 1; n <= 5; ++n)
    for (Level a = 1; a <= 2; ++a) {
      IndexVector v = IndexVector::unit(0, n) + IndexVector::unit(a);
      EXPECT_EQ(top_cells(v).labels.size(), 1u) << v.to_string();
    }
}
