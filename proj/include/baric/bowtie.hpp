#pragma once

#include <cstddef>
#include <optional>

#include "baric/baric.hpp"

namespace baric {

enum class Side { Left, Right };

/// The algebra on A1 (+) A2 with
///   (a1, a2)(b1, b2) = (a1 b1 + w2(b2) a1, a2 b2 + w1(b1) a2)
/// and weight w1(a1) + w2(a2). The basis is the left factor's basis followed
/// by the right factor's; the result carries a BowtieTag.
BaricAlgebra bowtie(const BaricAlgebra& left, const BaricAlgebra& right);

/// Throws NotABowtie when the algebra has no bowtie provenance.
const BowtieTag& require_bowtie(const BaricAlgebra& algebra);

/// Recovers a factor from the corresponding block of a bowtie.
BaricAlgebra factor(const BaricAlgebra& bowtie_algebra, Side side);

Vector embed(const BaricAlgebra& bowtie_algebra, Side side, const Vector& x);
Subspace embed(const BaricAlgebra& bowtie_algebra, Side side, const Subspace& s);
/// Coordinate projection p_i onto one block.
Vector project(const BaricAlgebra& bowtie_algebra, Side side, const Vector& x);
Subspace project(const BaricAlgebra& bowtie_algebra, Side side, const Subspace& s);

/// The commutator of x = (a1, a2) and y = (b1, b2) evaluated blockwise from
/// factor data only:
///   ([a1,b1] + w2(b2) a1 - w2(a2) b1, [a2,b2] + w1(b1) a2 - w1(a1) b2).
/// x and y are given in concatenated coordinates.
Vector commutator_closed_form(const BaricAlgebra& left, const BaricAlgebra& right, const Vector& x,
                              const Vector& y);

/// ((a1,b1,c1) + w2(b2)(a1 c1 - w1(c1) a1), (a2,b2,c2) + w1(b1)(a2 c2 - w2(c2) a2)).
Vector associator_closed_form(const BaricAlgebra& left, const BaricAlgebra& right, const Vector& x,
                              const Vector& y, const Vector& z);

/// (lambda e1, (1 - lambda) e2) for weight-one idempotents e1, e2 of the factors.
Vector idempotent_family(const BaricAlgebra& bowtie_algebra, const Vector& e1, const Vector& e2,
                         const FieldElement& lambda);

/// K^{bowtie n}: the left-associated iterated bowtie of (K, id).
BaricAlgebra kpow(const FieldSpec& field, std::size_t n);

struct VerifiedIso {
  Matrix map;
  bool verified;
};

struct StructuralIsos {
  VerifiedIso swap;       // A1 x A2 -> A2 x A1
  VerifiedIso assoc;      // (A1 x A2) x A3 -> A1 x (A2 x A3)
  VerifiedIso transport;  // A1 x A2 -> A1' x A2 along f
};

Matrix swap_map(const BaricAlgebra& left, const BaricAlgebra& right);
/// Block-diagonal (f, id).
Matrix transport_map(const Matrix& f, std::size_t right_dim);

/// Transport along the identity of A1.
StructuralIsos structural_isos(const BaricAlgebra& a1, const BaricAlgebra& a2, const BaricAlgebra& a3);
/// Throws NotWeightPreserving unless f is a baric isomorphism a1 -> a1_prime.
StructuralIsos structural_isos(const BaricAlgebra& a1, const BaricAlgebra& a2, const BaricAlgebra& a3,
                               const Matrix& f, const BaricAlgebra& a1_prime);

struct AssociativityCharacter {
  bool bowtie_associative;
  bool scalar_action_left;
  bool scalar_action_right;
};

AssociativityCharacter associativity_character(const BaricAlgebra& left, const BaricAlgebra& right);

}  // namespace baric
