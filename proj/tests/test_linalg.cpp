#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootgraded/errors.hpp"
#include "rootgraded/mat.hpp"

using namespace rootgraded;

namespace {

Mat parse_mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<ScalarVec> rs;
  for (const auto& r : rows) {
    ScalarVec v;
    for (const char* s : r) v.push_back(scalar_from_string(s));
    rs.push_back(v);
  }
  return Mat::from_rows(rs);
}

Mat random_mat(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Scalar s(num(rng), den(rng));
      s.canonicalize();
      m.at(i, j) = s;
    }
  return m;
}

}  // namespace

TEST_CASE("scalar strings") {
  CHECK(scalar_to_string(scalar_from_string("-3/2")) == "-3/2");
  CHECK(scalar_to_string(scalar_from_string("5")) == "5");
  CHECK(scalar_to_string(scalar_from_string("2/4")) == "1/2");
  CHECK(scalar_to_string(scalar_from_string("-0")) == "0");
  CHECK(scalar_to_string(scalar_from_string("7/-2")) == "-7/2");
  CHECK(scalar_from_string("4/6") == Scalar(2, 3));
  CHECK_THROWS_AS(scalar_from_string("1/0"), document_error);
  CHECK_THROWS_AS(scalar_from_string("x"), document_error);
  CHECK_THROWS_AS(scalar_from_string("1.5"), document_error);
  CHECK_THROWS_AS(scalar_from_string(""), document_error);
  CHECK_THROWS_AS(scalar_from_string("1/"), document_error);
  CHECK(scalar_is_integer(scalar_from_string("4/2")));
  CHECK(scalar_to_long(scalar_from_string("-12")) == -12);
  CHECK_THROWS_AS(scalar_to_long(scalar_from_string("1/2")), invalid_parameter_error);
}

TEST_CASE("rref on a known system") {
  Mat m = parse_mat({{"1", "2", "3"}, {"2", "4", "7"}, {"1", "2", "4"}});
  auto r = rref(m);
  CHECK(r.pivots == std::vector<int>{0, 2});
  CHECK(r.reduced.at(0, 0) == 1);
  CHECK(r.reduced.at(0, 1) == 2);
  CHECK(r.reduced.at(0, 2) == 0);
  CHECK(r.reduced.at(1, 2) == 1);
  for (int j = 0; j < 3; ++j) CHECK(r.reduced.at(2, j) == 0);
}

TEST_CASE("rref handles rational entries") {
  Mat m = parse_mat({{"1/2", "1/3"}, {"1/4", "1/6"}});
  auto r = rref(m);
  CHECK(r.pivots.size() == 1);
  CHECK(r.reduced.at(0, 0) == 1);
  CHECK(r.reduced.at(0, 1) == Scalar(2, 3));
}

TEST_CASE("solve with exact resubstitution") {
  Mat m = parse_mat({{"2", "1"}, {"1", "-1"}});
  ScalarVec b{Scalar(1), Scalar(5)};
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == -3);
}

TEST_CASE("solve reports inconsistency and shape errors") {
  Mat m = parse_mat({{"1", "1"}, {"1", "1"}});
  CHECK_FALSE(solve(m, {Scalar(0), Scalar(1)}).has_value());
  CHECK_THROWS_AS(solve(m, {Scalar(0)}), dimension_mismatch_error);
}

TEST_CASE("kernel vectors annihilate and count the nullity") {
  Mat m = parse_mat({{"1", "2", "3", "4"}, {"2", "4", "6", "8"}, {"0", "0", "1", "1"}});
  auto ker = kernel_basis(m);
  CHECK(static_cast<int>(ker.size()) + rank(m) == m.cols());
  for (const auto& v : ker) {
    for (const auto& e : m.apply(v)) CHECK(e == 0);
  }
}

TEST_CASE("rank-nullity, idempotence, kernel on random matrices") {
  std::mt19937_64 rng(20260825);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 7);
    int cols = 1 + static_cast<int>(rng() % 7);
    Mat m = random_mat(rng, rows, cols);
    auto r = rref(m);
    CHECK(static_cast<int>(r.pivots.size()) + static_cast<int>(kernel_basis(m).size()) ==
          cols);
    auto rr = rref(r.reduced);
    CHECK(rr.reduced == r.reduced);
    CHECK(rr.pivots == r.pivots);
    for (const auto& v : kernel_basis(m)) {
      for (const auto& e : m.apply(v)) CHECK(e == 0);
    }
    // consistent systems resubstitute exactly
    ScalarVec x0(cols);
    for (auto& e : x0) e = Scalar(static_cast<long>(rng() % 9) - 4);
    ScalarVec b = m.apply(x0);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("express_in_rows recovers coefficients") {
  Mat basis = parse_mat({{"1", "0", "1"}, {"0", "1", "1"}});
  Mat targets = parse_mat({{"2", "3", "5"}, {"1", "-1", "0"}});
  auto c = express_in_rows(basis, targets);
  REQUIRE(c.has_value());
  CHECK((*c) * basis == targets);
  Mat outside = parse_mat({{"0", "0", "1"}});
  CHECK_FALSE(express_in_rows(basis, outside).has_value());
}
