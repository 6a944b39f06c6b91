#include <doctest.h>

#include <random>

#include "netsirs/core_model.hpp"
#include "netsirs/errors.hpp"
#include "netsirs/scenario.hpp"
#include "test_helpers.hpp"

using namespace netsirs;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("validate_model accepts the two-node cycle") {
  Matrix W(2, 2);
  W << 0, 1, 1, 0;
  const ModelInstance m = validate_model(W, vec({1, 1}), vec({1, 1}));
  CHECK(m.M() == W);
  CHECK(m.alpha() == vec({1, 1}));
  CHECK(m.ybar() == vec({0.5, 0.5}));
}

TEST_CASE("validate_model error kinds") {
  Matrix W(2, 2);
  W << 0, 1, 0, 0;
  CHECK(kind_of([&] { validate_model(W, vec({1, 1}), vec({1, 1})); }) == ErrorKind::Reducible);

  W << 0, -1, 1, 0;
  CHECK(kind_of([&] { validate_model(W, vec({1, 1}), vec({1, 1})); }) == ErrorKind::NegativeEntry);

  W << 0, 1, 1, 0;
  CHECK(kind_of([&] { validate_model(W, vec({1, 0}), vec({1, 1})); }) == ErrorKind::NonPositiveRate);
  CHECK(kind_of([&] { validate_model(W, vec({1, 1}), vec({-1, 1})); }) == ErrorKind::NonPositiveRate);
  CHECK(kind_of([&] { validate_model(W, vec({1, 1, 1}), vec({1, 1})); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { validate_model(Matrix(0, 0), Vector(0), Vector(0)); }) == ErrorKind::DimensionMismatch);

  try {
    W << 0, 1, 0, 0;
    validate_model(W, vec({1, 1}), vec({1, 1}));
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("Reducible") != std::string::npos);
  }
}

TEST_CASE("single population") {
  Matrix one(1, 1);
  one << 2.0;
  CHECK(check_irreducible(one));
  CHECK_NOTHROW(validate_model(one, vec({1}), vec({1})));

  one << 0.0;
  CHECK(check_irreducible(one));  // one trivial component
  CHECK(kind_of([&] { validate_model(one, vec({1}), vec({1})); }) == ErrorKind::Reducible);
}

TEST_CASE("reference five-node model normalizes to the printed matrix") {
  const ModelInstance m = reference_five_node_model();
  CHECK(m.size() == 5);
  CHECK(m.M() == m.W());  // unit recovery rates
  CHECK(m.M()(4, 0) == doctest::Approx(2.8571));
  CHECK(m.M()(1, 3) == 0.0);
  CHECK(check_irreducible(m.W()));
  CHECK(m.alpha()(3) == doctest::Approx(10.0));
}

TEST_CASE("normalized matrix and cap are exact") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ModelInstance m = random_model(rng, 2 + trial % 5, 1.5);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      for (Eigen::Index j = 0; j < m.size(); ++j) CHECK(m.M()(i, j) == m.W()(i, j) / m.gamma()(i));
      CHECK(m.ybar()(i) * (1.0 + m.alpha()(i)) == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(m.ybar()(i) > 0.0);
      CHECK(m.ybar()(i) <= 1.0);
    }
  }
}

TEST_CASE("check_irreducible agrees with transitive closure") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int connected = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const oracle::Dense d = oracle::random_nonnegative(rng, n, 0.15 + 0.5 * u(rng));
    const bool expected = oracle::strongly_connected(d);
    connected += expected;
    REQUIRE(check_irreducible(to_matrix(d)) == expected);
  }
  CHECK(connected > 300);
  CHECK(connected < 2700);
}

TEST_CASE("full_from_reduced") {
  FullState s = full_from_reduced({vec({0, 0}), vec({0, 0})});
  CHECK(s.x == vec({1, 1}));

  s = full_from_reduced({vec({0.25, 0.25, 0.25}), vec({0.25, 0.25, 0.25})});
  CHECK(s.x == vec({0.5, 0.5, 0.5}));

  CHECK(kind_of([] { full_from_reduced({vec({0.6, 0}), vec({0.6, 0})}); }) == ErrorKind::OutOfSimplex);
  CHECK(kind_of([] { full_from_reduced({vec({-0.1}), vec({0.0})}); }) == ErrorKind::OutOfSimplex);
  CHECK_NOTHROW(full_from_reduced({vec({0.5}), vec({0.5 + 5e-10})}));
}

TEST_CASE("full_from_reduced then dropping x is the identity") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const FullState sample = sample_simplex_state(rng, 1 + trial % 7, false);
    const FullState back = full_from_reduced({sample.y, sample.z});
    CHECK(back.y == sample.y);
    CHECK(back.z == sample.z);
    CHECK(simplex_defect(back) <= kSimplexTol);
  }
}
