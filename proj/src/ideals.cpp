#include "baric/ideals.hpp"

#include <algorithm>
#include <set>

namespace baric {

const char* to_string(Sidedness s) {
  switch (s) {
    case Sidedness::None: return "none";
    case Sidedness::Right: return "right";
    case Sidedness::TwoSided: return "two_sided";
  }
  return "none";
}

const char* to_string(Decomposition::Kind kind) {
  switch (kind) {
    case Decomposition::Kind::Decomposable: return "decomposable";
    case Decomposition::Kind::Indecomposable: return "indecomposable";
    case Decomposition::Kind::NoWeightOneIdempotent: return "no_weight1_idempotent";
    case Decomposition::Kind::Undecided: return "undecided";
  }
  return "undecided";
}

Ideal ideal_closure(const Algebra& algebra, std::span<const Vector> gens, IdealSide side) {
  Subspace current = span(algebra.field(), gens, algebra.dim());
  while (true) {
    std::vector<Vector> rows = current.basis_vectors();
    const std::size_t before = current.dim();
    for (const auto& v : current.basis_vectors()) {
      for (std::size_t j = 0; j < algebra.dim(); ++j) {
        rows.push_back(multiply(algebra, v, algebra.basis_vector(j)));
        if (side == IdealSide::TwoSided) rows.push_back(multiply(algebra, algebra.basis_vector(j), v));
      }
    }
    current = span(algebra.field(), rows, algebra.dim());
    if (current.dim() == before) break;
  }
  return {current, sidedness(algebra, current)};
}

Sidedness sidedness(const Algebra& algebra, const Subspace& s) {
  if (s.ambient_dim() != algebra.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace ambient");
  bool right = true;
  bool left = true;
  for (const auto& v : s.basis_vectors()) {
    for (std::size_t j = 0; j < algebra.dim() && (right || left); ++j) {
      if (right && !s.contains(multiply(algebra, v, algebra.basis_vector(j)))) right = false;
      if (left && !s.contains(multiply(algebra, algebra.basis_vector(j), v))) left = false;
    }
  }
  if (right && left) return Sidedness::TwoSided;
  return right ? Sidedness::Right : Sidedness::None;
}

std::vector<Subspace> two_sided_ideals_in(const Algebra& algebra, const Subspace& within, std::uint64_t cap) {
  std::vector<Subspace> out;
  for_each_subspace(
      within,
      [&](const Subspace& s) {
        if (sidedness(algebra, s) == Sidedness::TwoSided) out.push_back(s);
      },
      cap);
  return out;
}

std::vector<Subspace> kernel_ideals(const BaricAlgebra& algebra, std::uint64_t cap) {
  return two_sided_ideals_in(algebra.algebra(), algebra.kernel(), cap);
}

bool embedded_ideal_check(const BaricAlgebra& bowtie_algebra, Side side, const Subspace& ideal) {
  require_bowtie(bowtie_algebra);
  const BaricAlgebra f = factor(bowtie_algebra, side);
  if (sidedness(f.algebra(), ideal) != Sidedness::TwoSided) {
    throw Error(ErrorCode::PreconditionFailed, "factor subspace is not a two-sided ideal");
  }
  return sidedness(bowtie_algebra.algebra(), embed(bowtie_algebra, side, ideal)) == Sidedness::TwoSided;
}

ProjectedIdeal project_ideal(const BaricAlgebra& bowtie_algebra, const Subspace& ideal) {
  require_bowtie(bowtie_algebra);
  const BaricAlgebra left = factor(bowtie_algebra, Side::Left);
  const BaricAlgebra right = factor(bowtie_algebra, Side::Right);
  Subspace i1 = project(bowtie_algebra, Side::Left, ideal);
  Subspace i2 = project(bowtie_algebra, Side::Right, ideal);
  const bool i1_ideal = sidedness(left.algebra(), i1) == Sidedness::TwoSided;
  const bool i2_ideal = sidedness(right.algebra(), i2) == Sidedness::TwoSided;
  return {std::move(i1), std::move(i2), i1_ideal, i2_ideal};
}

Subspace bowtie_ideal(const BaricAlgebra& bowtie_algebra, const Subspace& left, const Subspace& right) {
  return sum(embed(bowtie_algebra, Side::Left, left), embed(bowtie_algebra, Side::Right, right));
}

KernelIdealBijection kernel_ideal_bijection(const BaricAlgebra& bowtie_algebra, std::uint64_t cap) {
  require_bowtie(bowtie_algebra);
  const BaricAlgebra left = factor(bowtie_algebra, Side::Left);
  const BaricAlgebra right = factor(bowtie_algebra, Side::Right);
  for (const auto* f : {&left, &right}) {
    if (!is_commutative(f->algebra()) || !find_unit(f->algebra())) {
      throw Error(ErrorCode::FactorsNotCommutativeUnital, "both factors must be commutative and unital");
    }
  }

  const auto left_ideals = kernel_ideals(left, cap);
  const auto right_ideals = kernel_ideals(right, cap);
  const Subspace kernel = bowtie_algebra.kernel();
  std::vector<Subspace> bowtie_ideals;
  for (auto& s : kernel_ideals(bowtie_algebra, cap)) {
    if (!(s == kernel)) bowtie_ideals.push_back(std::move(s));
  }
  const std::set<Subspace> left_set(left_ideals.begin(), left_ideals.end());
  const std::set<Subspace> right_set(right_ideals.begin(), right_ideals.end());
  const std::set<Subspace> bowtie_set(bowtie_ideals.begin(), bowtie_ideals.end());

  KernelIdealBijection out;
  bool ok = left_set.size() * right_set.size() == bowtie_set.size();
  for (const auto& i : left_ideals)
    for (const auto& j : right_ideals) {
      Subspace image = bowtie_ideal(bowtie_algebra, i, j);
      ok = ok && bowtie_set.count(image) == 1;
      const auto back = project_ideal(bowtie_algebra, image);
      ok = ok && back.left == i && back.right == j;
      out.phi.push_back({{i, j}, std::move(image)});
    }
  for (const auto& s : bowtie_ideals) {
    auto proj = project_ideal(bowtie_algebra, s);
    ok = ok && left_set.count(proj.left) == 1 && right_set.count(proj.right) == 1;
    ok = ok && bowtie_ideal(bowtie_algebra, proj.left, proj.right) == s;
    out.psi.push_back({s, {std::move(proj.left), std::move(proj.right)}});
  }
  out.verified = ok;
  return out;
}

namespace {

bool is_weight_one_idempotent(const BaricAlgebra& algebra, const Vector& e) {
  return algebra.weight()(e).is_one() && multiply(algebra.algebra(), e, e) == e;
}

std::optional<std::pair<Subspace, Subspace>> find_split(const Subspace& kernel, const std::vector<Subspace>& ideals) {
  for (std::size_t a = 0; a < ideals.size(); ++a) {
    if (ideals[a].dim() == 0) continue;
    for (std::size_t b = a + 1; b < ideals.size(); ++b) {
      if (ideals[b].dim() == 0 || ideals[a].dim() + ideals[b].dim() != kernel.dim()) continue;
      if (intersect(ideals[a], ideals[b]).dim() == 0 && sum(ideals[a], ideals[b]) == kernel) {
        return std::make_pair(ideals[a], ideals[b]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Vector> weight_one_idempotents(const BaricAlgebra& algebra, std::uint64_t cap) {
  std::vector<Vector> out;
  if (algebra.field().is_finite()) {
    for_each_vector(
        algebra.field(), algebra.dim(),
        [&](const Vector& e) {
          if (is_weight_one_idempotent(algebra, e)) out.push_back(e);
        },
        cap);
    return out;
  }
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    Vector e = algebra.algebra().basis_vector(i);
    if (is_weight_one_idempotent(algebra, e)) out.push_back(std::move(e));
  }
  if (auto unit = find_unit(algebra.algebra());
      unit && is_weight_one_idempotent(algebra, *unit) && std::find(out.begin(), out.end(), *unit) == out.end()) {
    out.push_back(*unit);
  }
  return out;
}

Decomposition decomposability(const BaricAlgebra& algebra, std::span<const Vector> candidates, std::uint64_t cap) {
  Decomposition result{Decomposition::Kind::Undecided, std::nullopt, std::nullopt, std::nullopt};
  const bool finite = algebra.field().is_finite();

  if (finite) {
    for_each_vector(
        algebra.field(), algebra.dim(),
        [&](const Vector& e) {
          if (!result.idempotent && is_weight_one_idempotent(algebra, e)) result.idempotent = e;
        },
        cap);
  } else {
    auto found = weight_one_idempotents(algebra, cap);
    for (const auto& c : candidates) {
      if (found.empty() && c.size() == algebra.dim() && is_weight_one_idempotent(algebra, c)) found.push_back(c);
    }
    if (!found.empty()) result.idempotent = found.front();
  }
  if (!result.idempotent) {
    result.kind = Decomposition::Kind::NoWeightOneIdempotent;
    return result;
  }

  const Subspace kernel = algebra.kernel();
  std::vector<Subspace> ideals;
  if (finite) {
    ideals = kernel_ideals(algebra, cap);
  } else {
    std::vector<Vector> generators;
    for (const auto& c : candidates) {
      if (c.size() == algebra.dim() && kernel.contains(c) && !is_zero(c)) generators.push_back(c);
    }
    if (generators.empty()) generators = kernel.basis_vectors();
    if (generators.size() > 16) {
      throw Error(ErrorCode::EnumerationTooLarge, "too many candidate generators");
    }
    std::set<Subspace> seen;
    for (std::uint32_t mask = 1; mask < (1u << generators.size()); ++mask) {
      std::vector<Vector> subset;
      for (std::size_t b = 0; b < generators.size(); ++b) {
        if (mask & (1u << b)) subset.push_back(generators[b]);
      }
      seen.insert(ideal_closure(algebra.algebra(), subset, IdealSide::TwoSided).space);
    }
    ideals.assign(seen.begin(), seen.end());
  }

  if (auto split = find_split(kernel, ideals)) {
    result.kind = Decomposition::Kind::Decomposable;
    result.first = std::move(split->first);
    result.second = std::move(split->second);
  } else {
    result.kind = finite ? Decomposition::Kind::Indecomposable : Decomposition::Kind::Undecided;
  }
  return result;
}

}  // namespace baric
