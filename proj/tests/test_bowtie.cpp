#include <doctest.h>

#include <random>

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

TEST_CASE("K bowtie K") {
  const auto b = kk(Q);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) CHECK(b.algebra().constant(i, j, k) == FieldElement(Q, i == k ? 1 : 0));
  CHECK(b.weight() == WeightFunctional(vec(Q, {"1", "1"})));
  REQUIRE(b.provenance().has_value());
  CHECK(b.provenance()->left_dim == 1);
  CHECK(b.provenance()->right_dim == 1);
}

TEST_CASE("bowtie product agrees with the defining formula on random elements") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const FieldSpec f = trial % 2 ? Q : F5;
    const auto a1 = sample_baric(f, 1 + trial % 3, {}, rng);
    const auto a2 = sample_baric(f, 1 + (trial / 3) % 3, {}, rng);
    const auto b = bowtie(a1, a2);
    const Vector x = random_vector(f, b.dim(), rng), y = random_vector(f, b.dim(), rng);
    const Vector x1 = project(b, Side::Left, x), x2 = project(b, Side::Right, x);
    const Vector y1 = project(b, Side::Left, y), y2 = project(b, Side::Right, y);
    const Vector left = add(multiply(a1.algebra(), x1, y1), scale(a2.weight()(y2), x1));
    const Vector right = add(multiply(a2.algebra(), x2, y2), scale(a1.weight()(y1), x2));
    CHECK(multiply(b.algebra(), x, y) == add(embed(b, Side::Left, left), embed(b, Side::Right, right)));
    CHECK(b.weight()(x) == a1.weight()(x1) + a2.weight()(x2));
  }
}

TEST_CASE("bowtie rejects mixed fields") {
  CHECK(code_of([] { bowtie(kk(Q), kk(F2)); }) == ErrorCode::FieldMismatch);
  CHECK(code_of([] { require_bowtie(dual_numbers(Q)); }) == ErrorCode::NotABowtie);
  CHECK(code_of([] { factor(dual_numbers(Q), Side::Left); }) == ErrorCode::NotABowtie);
}

TEST_CASE("factors, embeddings and projections") {
  const auto d = d2d2(Q);
  CHECK(factor(d, Side::Left) == dual_numbers(Q));
  CHECK(factor(d, Side::Right).algebra() == dual_numbers(Q).algebra());
  CHECK(embed(kk(Q), Side::Left, vec(Q, {"1"})) == vec(Q, {"1", "0"}));
  CHECK(embed(d, Side::Right, vec(Q, {"0", "1"})) == vec(Q, {"0", "0", "0", "1"}));
  const Subspace s = span(Q, std::vector<Vector>{vec(Q, {"1", "0", "-1", "0"})}, 4);
  CHECK(project(d, Side::Left, s) == span(Q, std::vector<Vector>{vec(Q, {"1", "0"})}, 2));
  CHECK(project(d, Side::Left, Subspace::zero(Q, 4)) == Subspace::zero(Q, 2));
  CHECK(project(kk(Q), Side::Left, kk(Q).kernel()) == Subspace::full(Q, 1));
}

TEST_CASE("closed-form commutator") {
  const auto k = scalar_action_model(Q, 1);
  const Vector x = vec(Q, {"1", "0"}), y = vec(Q, {"0", "1"});
  CHECK(commutator_closed_form(k, k, x, y) == vec(Q, {"1", "-1"}));
  CHECK(is_zero(commutator_closed_form(k, k, x, x)));
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a1 = sample_baric(F3, 1 + trial % 3, {}, rng);
    const auto a2 = sample_baric(F3, 1 + (trial / 3) % 3, {}, rng);
    const auto b = bowtie(a1, a2);
    const Vector u = random_vector(F3, b.dim(), rng), v = random_vector(F3, b.dim(), rng);
    CHECK(commutator_closed_form(a1, a2, u, v) == commutator(b.algebra(), u, v));
  }
}

TEST_CASE("closed-form associator") {
  const auto d = dual_numbers(Q);
  const Vector a = vec(Q, {"1", "0", "0", "0"}), b = vec(Q, {"0", "0", "1", "0"}), c = vec(Q, {"0", "1", "0", "0"});
  CHECK(associator_closed_form(d, d, a, b, c) == vec(Q, {"0", "1", "0", "0"}));
  CHECK(associator_closed_form(d, d, a, b, c) == associator(d2d2(Q).algebra(), a, b, c));
  const Vector l1 = vec(Q, {"1", "2", "0", "0"}), l2 = vec(Q, {"0", "3", "0", "0"}), l3 = vec(Q, {"5", "1", "0", "0"});
  CHECK(is_zero(associator_closed_form(d, d, l1, l2, l3)));
  const auto k = scalar_action_model(Q, 1);
  CHECK(is_zero(associator_closed_form(k, k, vec(Q, {"1", "2"}), vec(Q, {"3", "-1"}), vec(Q, {"1/2", "1"}))));
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a1 = sample_baric(F3, 1 + trial % 3, {}, rng);
    const auto a2 = sample_baric(F3, 1 + (trial / 3) % 3, {}, rng);
    const auto bw = bowtie(a1, a2);
    const Vector x = random_vector(F3, bw.dim(), rng), y = random_vector(F3, bw.dim(), rng),
                 z = random_vector(F3, bw.dim(), rng);
    CHECK(associator_closed_form(a1, a2, x, y, z) == associator(bw.algebra(), x, y, z));
  }
}

TEST_CASE("idempotent family") {
  const auto d = d2d2(Q);
  const Vector e = vec(Q, {"1", "0"});
  CHECK(idempotent_family(d, e, e, FieldElement(Q, 1)) == vec(Q, {"1", "0", "0", "0"}));
  const Vector half = idempotent_family(d, e, e, FieldElement(Q, 1, 2));
  CHECK(half == vec(Q, {"1/2", "0", "1/2", "0"}));
  CHECK(multiply(d.algebra(), half, half) == half);
  CHECK(code_of([&] { idempotent_family(d, vec(Q, {"0", "1"}), e, FieldElement(Q, 1)); }) ==
        ErrorCode::NotIdempotentInput);
  const auto c = componentwise(Q, 2);
  const auto cc = bowtie(c, c);
  CHECK(code_of([&] { idempotent_family(cc, vec(Q, {"0", "1"}), vec(Q, {"1", "0"}), FieldElement(Q, 1)); }) ==
        ErrorCode::WeightNotOne);
}

TEST_CASE("iterated bowtie of the base field") {
  CHECK(kpow(Q, 1) == scalar_action_model(Q, 1));
  CHECK(kpow(Q, 2).algebra() == kk(Q).algebra());
  const auto k3 = kpow(F5, 3);
  CHECK(k3.algebra() == bowtie(kk(F5), scalar_action_model(F5, 1)).algebra());
  CHECK(k3.weight() == WeightFunctional::ones(F5, 3));
  CHECK(is_associative(k3.algebra()));
  CHECK_FALSE(is_commutative(k3.algebra()));
  for (std::size_t n = 1; n <= 6; ++n) CHECK(kpow(Q, n).algebra() == scalar_action_model(Q, n).algebra());
}

TEST_CASE("structural isomorphisms") {
  const auto k = scalar_action_model(Q, 1);
  CHECK(baric_isomorphic_by(swap_map(k, k), kk(Q), kk(Q)));
  const auto isos = structural_isos(k, k, k);
  CHECK(isos.swap.verified);
  CHECK(isos.assoc.verified);
  CHECK(isos.transport.verified);
  CHECK(isos.transport.map == Matrix::identity(Q, 2));
  const auto d = dual_numbers(Q);
  CHECK(code_of([&] { structural_isos(d, k, k, matrix(Q, {{"2", "0"}, {"0", "1"}}), d); }) ==
        ErrorCode::NotWeightPreserving);
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a1 = sample_baric(F5, 1 + trial % 3, {}, rng);
    const auto a2 = sample_baric(F5, 1 + (trial / 3) % 2, {}, rng);
    const auto a3 = sample_baric(F5, 1 + (trial / 2) % 2, {}, rng);
    const auto s = structural_isos(a1, a2, a3);
    CHECK(s.swap.verified);
    CHECK(s.assoc.verified);
    CHECK(s.transport.verified);
  }
}

TEST_CASE("associativity character") {
  const auto k2 = kpow(Q, 2);
  const auto c = associativity_character(k2, k2);
  CHECK(c.bowtie_associative);
  CHECK(c.scalar_action_left);
  CHECK(c.scalar_action_right);
  CHECK(classify_scalar_action(bowtie(k2, k2))->target.dim() == 4);
  CHECK_FALSE(associativity_character(dual_numbers(Q), dual_numbers(Q)).bowtie_associative);
  const auto kd = associativity_character(scalar_action_model(Q, 1), dual_numbers(Q));
  CHECK_FALSE(kd.bowtie_associative);
  CHECK(kd.scalar_action_left);
  CHECK_FALSE(kd.scalar_action_right);
}

TEST_CASE("bowtie weights are unique and the center vanishes, brute force") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const FieldSpec f = trial % 2 ? F2 : F3;
    const auto b = bowtie(sample_baric(f, 1 + trial % 2, {}, rng), sample_baric(f, 1 + (trial / 2) % 2, {}, rng));
    const auto t = oracle::table_of(b);
    CHECK(oracle::center_size(t) == 1);
    const auto ws = oracle::weights(t);
    REQUIRE(ws.size() == 1);
    CHECK(ws.front() == t.w);
  }
}
