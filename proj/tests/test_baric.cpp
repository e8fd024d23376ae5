#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace baric;
using namespace fixtures;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::PreconditionFailed;
}

}  // namespace

TEST_CASE("validate_weight examples") {
  const Algebra a = kk(Q).algebra();
  CHECK(validate_weight(a, WeightFunctional(vec(Q, {"1", "1"}))));
  CHECK_FALSE(validate_weight(a, WeightFunctional(vec(Q, {"0", "0"}))));
  CHECK_FALSE(validate_weight(kk(F3).algebra(), WeightFunctional(vec(F3, {"1", "2"}))));
  CHECK(code_of([&] { BaricAlgebra(a, WeightFunctional(vec(Q, {"1", "0"}))); }) == ErrorCode::WeightInvalid);
  CHECK(code_of([&] { BaricAlgebra(a, WeightFunctional(vec(Q, {"1"}))); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("weight enumeration examples") {
  const auto k3 = enumerate_weights(kk(F3).algebra());
  REQUIRE(k3.size() == 1);
  CHECK(k3.front() == WeightFunctional(vec(F3, {"1", "1"})));
  const auto split = enumerate_weights(componentwise(F2, 2).algebra());
  REQUIRE(split.size() == 2);
  CHECK(std::find(split.begin(), split.end(), WeightFunctional(vec(F2, {"0", "1"}))) != split.end());
  CHECK(std::find(split.begin(), split.end(), WeightFunctional(vec(F2, {"1", "0"}))) != split.end());
  CHECK(code_of([] { enumerate_weights(kk(Q).algebra()); }) == ErrorCode::FieldNotFinite);
  CHECK(code_of([] { enumerate_weights(kk(F3).algebra(), 8); }) == ErrorCode::EnumerationTooLarge);
}

TEST_CASE("weight enumeration agrees with the brute-force scan") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const FieldSpec f = trial % 2 ? F2 : F3;
    const auto b = sample_baric(f, 1 + trial % 3, {trial % 3 == 0, trial % 4 == 0}, rng);
    const auto t = oracle::table_of(b);
    const auto expected = oracle::weights(t);
    const auto got = enumerate_weights(b.algebra());
    std::set<int> got_codes, expected_codes;
    for (const auto& w : got) {
      oracle::Vec v;
      for (const auto& x : w.values()) v.push_back(static_cast<int>(x.residue()));
      got_codes.insert(oracle::encode(t, v));
    }
    for (const auto& v : expected) expected_codes.insert(oracle::encode(t, v));
    CHECK(got.size() == expected.size());
    CHECK(got_codes == expected_codes);
  }
}

TEST_CASE("bowtie algebras over F_2 have a unique weight") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto b = bowtie(sample_baric(F2, 1 + trial % 3, {}, rng), sample_baric(F2, 1 + trial % 2, {}, rng));
    CHECK(oracle::weights(oracle::table_of(b)).size() == 1);
  }
}

TEST_CASE("kernel") {
  const auto k = kk(Q).kernel();
  CHECK(k.dim() == 1);
  CHECK(k.contains(vec(Q, {"1", "-1"})));
  CHECK(dual_numbers(F5).kernel() == span(F5, std::vector<Vector>{vec(F5, {"0", "1"})}, 2));
}

TEST_CASE("nil kernel") {
  CHECK(is_nil_kernel(kk(Q), 3));
  const auto with_idempotent = bowtie(componentwise(Q, 2), scalar_action_model(Q, 1));
  const auto report = nil_kernel_report(with_idempotent, 4);
  CHECK_FALSE(report.nil);
  REQUIRE(report.witness.has_value());
  CHECK(*report.witness == vec(Q, {"0", "1", "0"}));
  CHECK(is_nil_kernel(BaricAlgebra(algebra(Q, 3, {{0, 0, 0, "1"}}), WeightFunctional(vec(Q, {"1", "0", "0"}))), 2));
  CHECK(is_nil_kernel(truncated_polynomial(F3, 4), 4));
  CHECK_FALSE(is_nil_kernel(truncated_polynomial(F3, 4), 3));
  CHECK(code_of([] { nil_kernel_report(kk(Q), 0); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("normalization to a weight-one basis") {
  const BaricAlgebra s = scalar_action_algebra(WeightFunctional(vec(Q, {"1", "0", "1"})));
  const Rebased r = normalize_weight_one_basis(s);
  CHECK(r.transform == matrix(Q, {{"1", "0", "0"}, {"1", "1", "0"}, {"1/2", "1/2", "1/2"}}));
  CHECK(r.algebra.weight() == WeightFunctional::ones(Q, 3));
  const BaricAlgebra ones = scalar_action_model(Q, 3);
  const Rebased same = normalize_weight_one_basis(ones);
  for (std::size_t i = 0; i < 3; ++i) CHECK(ones.weight()(same.transform.row(i)).is_one());
  const BaricAlgebra f2 = scalar_action_algebra(WeightFunctional(vec(F2, {"1", "1"})));
  CHECK(code_of([&] { normalize_weight_one_basis(f2); }) == ErrorCode::CharacteristicObstruction);
}

TEST_CASE("normalization over the rationals, randomized") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Vector w = random_vector(Q, n, rng);
    w[static_cast<std::size_t>(trial) % n] = FieldElement(Q, 2, 3);
    const auto b = sample_baric(Q, n, {}, rng, w);
    const Rebased r = normalize_weight_one_basis(b);
    CHECK(rank(r.transform) == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(b.weight()(r.transform.row(i)).is_one());
    CHECK(change_basis(b.algebra(), r.transform) == r.algebra.algebra());
  }
}

TEST_CASE("scalar-action classification") {
  const auto k3 = kpow(Q, 3);
  const auto c3 = classify_scalar_action(k3);
  REQUIRE(c3.has_value());
  CHECK(c3->target == scalar_action_model(Q, 3));
  CHECK(baric_isomorphic_by(c3->isomorphism, k3, c3->target));

  const BaricAlgebra s = scalar_action_algebra(WeightFunctional(vec(Q, {"1", "0"})));
  const auto cs = classify_scalar_action(s);
  REQUIRE(cs.has_value());
  CHECK(cs->transform == matrix(Q, {{"1", "0"}, {"1", "1"}}));
  CHECK(cs->target.algebra() == kk(Q).algebra());
  CHECK(baric_isomorphic_by(cs->isomorphism, s, cs->target));
  CHECK(cs->isomorphism == inverse(cs->transform));

  CHECK_FALSE(classify_scalar_action(dual_numbers(Q)).has_value());
  CHECK_FALSE(is_scalar_action(dual_numbers(Q).algebra(), dual_numbers(Q).weight()));
}

TEST_CASE("baric isomorphism checks") {
  const auto b = kk(Q);
  CHECK(baric_isomorphic_by(Matrix::identity(Q, 2), b, b));
  CHECK(baric_isomorphic_by(matrix(Q, {{"0", "1"}, {"1", "0"}}), b, b));
  const auto k = scalar_action_model(Q, 1);
  CHECK_FALSE(baric_isomorphic_by(matrix(Q, {{"2"}}), k, k));
  CHECK_FALSE(baric_isomorphic_by(matrix(Q, {{"1", "1"}, {"0", "0"}}), b, b));
  CHECK(code_of([&] { baric_isomorphic_by(Matrix::identity(Q, 3), b, b); }) == ErrorCode::DimensionMismatch);
}
