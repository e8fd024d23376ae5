#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "baric/bowtie.hpp"

namespace baric {

enum class Sidedness { None, Right, TwoSided };
enum class IdealSide { Right, TwoSided };

const char* to_string(Sidedness s);

struct Ideal {
  Subspace space;
  Sidedness sided;
};

/// Least subspace containing `gens` and closed under right (and, for
/// TwoSided, left) multiplication by the algebra. Fixpoint iteration over the
/// basis; terminates since the dimension only grows and is bounded by n.
Ideal ideal_closure(const Algebra& algebra, std::span<const Vector> gens, IdealSide side);

/// Strongest label that holds by testing basis products.
Sidedness sidedness(const Algebra& algebra, const Subspace& s);

/// Two-sided ideals of the algebra contained in `within` (prime fields only).
std::vector<Subspace> two_sided_ideals_in(const Algebra& algebra, const Subspace& within,
                                          std::uint64_t cap = kDefaultEnumerationCap);
/// The set of two-sided ideals contained in Ker omega.
std::vector<Subspace> kernel_ideals(const BaricAlgebra& algebra, std::uint64_t cap = kDefaultEnumerationCap);

/// Whether the image of a two-sided factor ideal is two-sided in the bowtie.
/// The expected answer is exactly I within Ker omega_i.
bool embedded_ideal_check(const BaricAlgebra& bowtie_algebra, Side side, const Subspace& ideal);

struct ProjectedIdeal {
  Subspace left;
  Subspace right;
  bool left_is_ideal;
  bool right_is_ideal;
};

ProjectedIdeal project_ideal(const BaricAlgebra& bowtie_algebra, const Subspace& ideal);

/// (I, J) -> embed(I) + embed(J).
Subspace bowtie_ideal(const BaricAlgebra& bowtie_algebra, const Subspace& left, const Subspace& right);

struct KernelIdealBijection {
  std::vector<std::pair<std::pair<Subspace, Subspace>, Subspace>> phi;
  std::vector<std::pair<Subspace, std::pair<Subspace, Subspace>>> psi;
  bool verified = false;
};

/// Enumerates both sides of the correspondence between pairs of kernel
/// ideals of commutative unital factors and kernel ideals of the bowtie
/// other than Ker itself, and checks that the two maps are mutually inverse.
KernelIdealBijection kernel_ideal_bijection(const BaricAlgebra& bowtie_algebra,
                                            std::uint64_t cap = kDefaultEnumerationCap);

/// Idempotents of weight 1: exhaustive over F_p, otherwise the basis vectors
/// and the unit.
std::vector<Vector> weight_one_idempotents(const BaricAlgebra& algebra, std::uint64_t cap = kDefaultEnumerationCap);

struct Decomposition {
  enum class Kind { Decomposable, Indecomposable, NoWeightOneIdempotent, Undecided };

  Kind kind;
  std::optional<Vector> idempotent;
  std::optional<Subspace> first;
  std::optional<Subspace> second;
};

const char* to_string(Decomposition::Kind kind);

/// Decides whether Ker omega splits as a direct sum of two nonzero ideals.
/// Exhaustive over prime fields. Over the rationals only ideals generated by
/// subsets of `candidates` (or of the kernel basis when none lie in Ker) are
/// tried and the answer is Undecided when no witness appears; candidates are
/// also tried as weight-one idempotents.
Decomposition decomposability(const BaricAlgebra& algebra, std::span<const Vector> candidates = {},
                              std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace baric
