#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "baric/baric.hpp"

namespace baric {

struct RandomFlags {
  bool commutative = false;
  bool unital = false;
};

/// A random valid baric algebra over F_p. The weight has w_0 = 1 and random
/// other entries; constants c_{ij}^k for k >= 1 are uniform and c_{ij}^0 is
/// solved from sum_k c_{ij}^k w_k = w_i w_j. `unital` makes e_0 a two-sided
/// unit, `commutative` symmetrizes. Deterministic in `seed`.
BaricAlgebra random_baric(const FieldSpec& field, std::size_t dim, RandomFlags flags, std::uint64_t seed);

/// Same construction driven by an existing engine, over any field (rationals
/// use small fractions). `weight` overrides the sampled weight; the pivot is
/// its first nonzero coordinate.
BaricAlgebra sample_baric(const FieldSpec& field, std::size_t dim, RandomFlags flags, std::mt19937_64& rng,
                          const std::optional<Vector>& weight = std::nullopt);

FieldElement random_scalar(const FieldSpec& field, std::mt19937_64& rng);
Vector random_vector(const FieldSpec& field, std::size_t n, std::mt19937_64& rng);

/// Fixed list of small associative baric algebras: K, scalar-action algebras,
/// K[x]/(x^2), K[x]/(x^3), the group algebra of Z/2 and K x K.
std::vector<BaricAlgebra> associative_generators(const FieldSpec& field);
BaricAlgebra dual_numbers(const FieldSpec& field);          // K[x]/(x^2), basis (1, x)
BaricAlgebra truncated_polynomial(const FieldSpec& field, std::size_t dim);  // K[x]/(x^dim)
BaricAlgebra componentwise(const FieldSpec& field, std::size_t dim);         // K^dim, weight = first coordinate
BaricAlgebra scalar_action_algebra(const WeightFunctional& weight);          // xy = w(y) x

struct Caps {
  /// Overrides the default field of suites that run over prime fields.
  std::optional<FieldSpec> field;
  std::size_t max_dim = 3;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct PropReport {
  std::string proposition_id;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_counterexample;
  std::uint64_t seed = 0;

  bool passed() const noexcept { return failures == 0; }
  /// "<id> trials=<n> failures=<k> seed=<s> [counterexample=<path>]"
  std::string to_line(const std::optional<std::string>& counterexample_path = std::nullopt) const;
};

std::span<const std::string_view> proposition_ids();

/// Runs the executable version of one statement. Trial t draws from an
/// engine seeded by (seed, t, id), so reruns reproduce the report exactly.
/// Throws UnknownProposition.
PropReport check(std::string_view proposition_id, std::size_t trials, std::uint64_t seed, const Caps& caps = {});

}  // namespace baric
