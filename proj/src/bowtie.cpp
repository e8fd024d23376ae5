#include "baric/bowtie.hpp"

namespace baric {

namespace {

void require_same_field(const BaricAlgebra& a, const BaricAlgebra& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
  }
}

struct Split {
  Vector left;
  Vector right;
};

Split split(const Vector& x, std::size_t left_dim, std::size_t right_dim) {
  if (x.size() != left_dim + right_dim) {
    throw Error(ErrorCode::DimensionMismatch, "element does not match the bowtie dimension");
  }
  return {Vector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(left_dim)),
          Vector(x.begin() + static_cast<std::ptrdiff_t>(left_dim), x.end())};
}

Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<std::string> concat_names(const Algebra& a, const Algebra& b) {
  if (a.basis_names().empty() || b.basis_names().empty()) return {};
  auto names = a.basis_names();
  names.insert(names.end(), b.basis_names().begin(), b.basis_names().end());
  return names;
}

}  // namespace

BaricAlgebra bowtie(const BaricAlgebra& left, const BaricAlgebra& right) {
  require_same_field(left, right);
  const std::size_t n1 = left.dim();
  const std::size_t n2 = right.dim();
  const auto& w1 = left.weight();
  const auto& w2 = right.weight();

  StructureConstants constants;
  for (const auto& [t, c] : left.algebra().constants()) constants.emplace(t, c);
  for (const auto& [t, c] : right.algebra().constants()) {
    constants.emplace(Triple{t.i + n1, t.j + n1, t.k + n1}, c);
  }
  // (e_i, 0)(0, f_j) = w2(f_j) (e_i, 0)
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      if (!w2[j].is_zero()) constants.emplace(Triple{i, n1 + j, i}, w2[j]);
    }
  // (0, f_i)(e_j, 0) = w1(e_j) (0, f_i)
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      if (!w1[j].is_zero()) constants.emplace(Triple{n1 + i, j, n1 + i}, w1[j]);
    }

  Algebra algebra(left.field(), n1 + n2, std::move(constants), concat_names(left.algebra(), right.algebra()));
  WeightFunctional weight(concat(w1.values(), w2.values()));
  if (!validate_weight(algebra, weight)) {
    throw Error(ErrorCode::WeightInvalid, "combined weight is not a homomorphism");
  }
  return BaricAlgebra(std::move(algebra), std::move(weight), BowtieTag{n1, n2, w1, w2});
}

const BowtieTag& require_bowtie(const BaricAlgebra& algebra) {
  if (!algebra.provenance()) throw Error(ErrorCode::NotABowtie, "algebra carries no bowtie provenance");
  return *algebra.provenance();
}

BaricAlgebra factor(const BaricAlgebra& bowtie_algebra, Side side) {
  const auto& tag = require_bowtie(bowtie_algebra);
  if (side == Side::Left) {
    return BaricAlgebra(block_subalgebra(bowtie_algebra.algebra(), 0, tag.left_dim), tag.left_weight);
  }
  return BaricAlgebra(block_subalgebra(bowtie_algebra.algebra(), tag.left_dim, tag.right_dim), tag.right_weight);
}

Vector embed(const BaricAlgebra& bowtie_algebra, Side side, const Vector& x) {
  const auto& tag = require_bowtie(bowtie_algebra);
  const FieldSpec& field = bowtie_algebra.field();
  const std::size_t expected = side == Side::Left ? tag.left_dim : tag.right_dim;
  if (x.size() != expected) throw Error(ErrorCode::DimensionMismatch, "element does not match the factor");
  if (side == Side::Left) return concat(x, zero_vector(field, tag.right_dim));
  return concat(zero_vector(field, tag.left_dim), x);
}

Subspace embed(const BaricAlgebra& bowtie_algebra, Side side, const Subspace& s) {
  std::vector<Vector> rows;
  for (const auto& v : s.basis_vectors()) rows.push_back(embed(bowtie_algebra, side, v));
  return span(bowtie_algebra.field(), rows, bowtie_algebra.dim());
}

Vector project(const BaricAlgebra& bowtie_algebra, Side side, const Vector& x) {
  const auto& tag = require_bowtie(bowtie_algebra);
  auto parts = split(x, tag.left_dim, tag.right_dim);
  return side == Side::Left ? parts.left : parts.right;
}

Subspace project(const BaricAlgebra& bowtie_algebra, Side side, const Subspace& s) {
  const auto& tag = require_bowtie(bowtie_algebra);
  if (s.ambient_dim() != bowtie_algebra.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace ambient");
  std::vector<Vector> rows;
  for (const auto& v : s.basis_vectors()) rows.push_back(project(bowtie_algebra, side, v));
  return span(bowtie_algebra.field(), rows, side == Side::Left ? tag.left_dim : tag.right_dim);
}

Vector commutator_closed_form(const BaricAlgebra& left, const BaricAlgebra& right, const Vector& x,
                              const Vector& y) {
  require_same_field(left, right);
  const auto [a1, a2] = split(x, left.dim(), right.dim());
  const auto [b1, b2] = split(y, left.dim(), right.dim());
  const auto& w1 = left.weight();
  const auto& w2 = right.weight();
  Vector first = sub(add(commutator(left.algebra(), a1, b1), scale(w2(b2), a1)), scale(w2(a2), b1));
  Vector second = sub(add(commutator(right.algebra(), a2, b2), scale(w1(b1), a2)), scale(w1(a1), b2));
  return concat(first, second);
}

Vector associator_closed_form(const BaricAlgebra& left, const BaricAlgebra& right, const Vector& x,
                              const Vector& y, const Vector& z) {
  require_same_field(left, right);
  const auto [a1, a2] = split(x, left.dim(), right.dim());
  const auto [b1, b2] = split(y, left.dim(), right.dim());
  const auto [c1, c2] = split(z, left.dim(), right.dim());
  const auto& w1 = left.weight();
  const auto& w2 = right.weight();
  Vector first = add(associator(left.algebra(), a1, b1, c1),
                     scale(w2(b2), sub(multiply(left.algebra(), a1, c1), scale(w1(c1), a1))));
  Vector second = add(associator(right.algebra(), a2, b2, c2),
                      scale(w1(b1), sub(multiply(right.algebra(), a2, c2), scale(w2(c2), a2))));
  return concat(first, second);
}

Vector idempotent_family(const BaricAlgebra& bowtie_algebra, const Vector& e1, const Vector& e2,
                         const FieldElement& lambda) {
  const BaricAlgebra left = factor(bowtie_algebra, Side::Left);
  const BaricAlgebra right = factor(bowtie_algebra, Side::Right);
  if (e1.size() != left.dim() || e2.size() != right.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "idempotents do not match the factors");
  }
  if (!(multiply(left.algebra(), e1, e1) == e1) || !(multiply(right.algebra(), e2, e2) == e2)) {
    throw Error(ErrorCode::NotIdempotentInput, "e1 and e2 must be idempotent");
  }
  if (!left.weight()(e1).is_one() || !right.weight()(e2).is_one()) {
    throw Error(ErrorCode::WeightNotOne, "e1 and e2 must have weight 1");
  }
  const FieldElement mu = FieldElement::one(lambda.field()) - lambda;
  return concat(scale(lambda, e1), scale(mu, e2));
}

BaricAlgebra kpow(const FieldSpec& field, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "K^n needs n >= 1");
  const BaricAlgebra k(Algebra(field, 1, {{Triple{0, 0, 0}, FieldElement::one(field)}}),
                       WeightFunctional::ones(field, 1));
  BaricAlgebra out = k;
  for (std::size_t m = 1; m < n; ++m) out = bowtie(out, k);
  return out;
}

Matrix swap_map(const BaricAlgebra& left, const BaricAlgebra& right) {
  const std::size_t n1 = left.dim();
  const std::size_t n2 = right.dim();
  Matrix map(left.field(), n1 + n2, n1 + n2);
  for (std::size_t i = 0; i < n1; ++i) map(i, n2 + i) = FieldElement::one(left.field());
  for (std::size_t j = 0; j < n2; ++j) map(n1 + j, j) = FieldElement::one(left.field());
  return map;
}

Matrix transport_map(const Matrix& f, std::size_t right_dim) {
  const std::size_t n = f.rows() + right_dim;
  Matrix map(f.field(), n, f.cols() + right_dim);
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) map(r, c) = f(r, c);
  for (std::size_t j = 0; j < right_dim; ++j) map(f.rows() + j, f.cols() + j) = FieldElement::one(f.field());
  return map;
}

StructuralIsos structural_isos(const BaricAlgebra& a1, const BaricAlgebra& a2, const BaricAlgebra& a3) {
  return structural_isos(a1, a2, a3, Matrix::identity(a1.field(), a1.dim()), a1);
}

StructuralIsos structural_isos(const BaricAlgebra& a1, const BaricAlgebra& a2, const BaricAlgebra& a3,
                               const Matrix& f, const BaricAlgebra& a1_prime) {
  require_same_field(a1, a2);
  require_same_field(a2, a3);
  require_same_field(a1, a1_prime);
  if (f.rows() != a1.dim() || f.cols() != a1_prime.dim() || !baric_isomorphic_by(f, a1, a1_prime)) {
    throw Error(ErrorCode::NotWeightPreserving, "transport input is not a baric isomorphism");
  }

  const BaricAlgebra a12 = bowtie(a1, a2);
  const BaricAlgebra a21 = bowtie(a2, a1);
  Matrix swap = swap_map(a1, a2);
  const bool swap_ok = baric_isomorphic_by(swap, a12, a21);

  const BaricAlgebra left_assoc = bowtie(a12, a3);
  const BaricAlgebra right_assoc = bowtie(a1, bowtie(a2, a3));
  Matrix assoc = Matrix::identity(a1.field(), left_assoc.dim());
  const bool assoc_ok = baric_isomorphic_by(assoc, left_assoc, right_assoc);

  Matrix transport = transport_map(f, a2.dim());
  const bool transport_ok = baric_isomorphic_by(transport, a12, bowtie(a1_prime, a2));

  return {{std::move(swap), swap_ok}, {std::move(assoc), assoc_ok}, {std::move(transport), transport_ok}};
}

AssociativityCharacter associativity_character(const BaricAlgebra& left, const BaricAlgebra& right) {
  require_same_field(left, right);
  return {is_associative(bowtie(left, right).algebra()), is_scalar_action(left.algebra(), left.weight()),
          is_scalar_action(right.algebra(), right.weight())};
}

}  // namespace baric
