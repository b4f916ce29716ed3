#include "parahilb/json.hpp"

#include <gtest/gtest.h>

using namespace parahilb;

TEST(Json, IndexVectorRoundTrip) {
  IndexVector v{{0, 3}, {-1, 1}, {2, 2}};
  Json j = to_json(v);
  EXPECT_EQ(j.dump(), R"({"-1":1,"0":3,"2":2})");
  EXPECT_EQ(index_vector_from_json(j), v);
  EXPECT_EQ(parse_index_vector(R"({"0":2})"), (IndexVector{{0, 2}}));
  EXPECT_EQ(parse_index_vector("{}"), IndexVector{});
}

TEST(Json, IndexVectorRejectsMalformed) {
  EXPECT_THROW(parse_index_vector("[1,2]"), std::invalid_argument);
  EXPECT_THROW(parse_index_vector(R"({"a":1})"), std::invalid_argument);
  EXPECT_THROW(parse_index_vector(R"({"1x":1})"), std::invalid_argument);
  EXPECT_THROW(parse_index_vector(R"({"0":"2"})"), std::invalid_argument);
  EXPECT_THROW(parse_index_vector("{"), std::invalid_argument);
}

TEST(Json, CellLabelRoundTrip) {
  CellLabel eta{{0, 1, 2}, {1, 0, 1}, {-1, 3, 1}};
  Json j = to_json(eta);
  EXPECT_EQ(j.dump(), "[[-1,3,1],[0,1,2],[1,0,1]]");
  EXPECT_EQ(cell_label_from_json(j), eta);
}

TEST(Json, SeriesRoundTripIsByteIdentical) {
  TruncationOrder o(3, Window(-1, 2), 2);
  auto s = parabolic_poincare_series(BettiData{}, o);
  Json j = to_json(s);
  auto back = series_from_json(j);
  EXPECT_EQ(back, s);
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Json, BigIntegersAreStrings) {
  TruncationOrder o(40, Window(-1, 1), 0);
  auto s = expand_factor(-1, MultiDegree(0, 1), -30, o);
  Json j = to_json(s);
  EXPECT_TRUE(j["terms"].back()[3].is_string());
  EXPECT_EQ(series_from_json(j), s);
}

TEST(Json, Betti) {
  BettiData b;
  b.D = {1, 2, 1};
  EXPECT_EQ(to_json(b).dump(), R"({"D":[1,2,1],"X":[1,0,1,0,1]})");
  EXPECT_EQ(betti_from_json(to_json(b)), b);
  EXPECT_THROW(betti_from_json(Json::parse(R"({"X":[1,0,1],"D":[1,0,1]})")), std::invalid_argument);
  EXPECT_THROW(betti_from_json(Json::parse(R"({"X":[1,0,-1,0,1],"D":[1,0,1]})")), std::invalid_argument);
}

TEST(Json, GeneratorClass) {
  EXPECT_EQ(to_json(classify_generator({{0, 1}})).dump(), R"({"alpha":0,"kind":"PosC"})");
  EXPECT_EQ(to_json(classify_generator({{1, -1}})).dump(), R"({"alpha":1,"kind":"NegC"})");
  EXPECT_EQ(to_json(classify_generator({{-1, 1}})).dump(), R"({"kind":"NotGenerator"})");
}

TEST(Json, LaurentPairAndCoefficients) {
  LaurentPair T;
  T.add(1, -2, 3);
  T.add(-1, 0, 1);
  EXPECT_EQ(to_json(T).dump(), "[[-1,0,1],[1,-2,3]]");
  Poly p = Poly::monomial(2, 3) + Poly(1);
  EXPECT_EQ(coefficients_json(p).dump(), R"(["1","0","3"])");
}
