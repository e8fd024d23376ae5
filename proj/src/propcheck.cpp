#include "baric/propcheck.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "baric/bowtie.hpp"
#include "baric/document.hpp"
#include "baric/ideals.hpp"

namespace baric {

FieldElement random_scalar(const FieldSpec& field, std::mt19937_64& rng) {
  if (field.is_finite()) {
    std::uniform_int_distribution<long> d(0, static_cast<long>(field.p()) - 1);
    return FieldElement(field, d(rng));
  }
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  const long n = num(rng);
  return FieldElement(field, n, den(rng));
}

Vector random_vector(const FieldSpec& field, std::size_t n, std::mt19937_64& rng) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(field, rng));
  return v;
}

BaricAlgebra sample_baric(const FieldSpec& field, std::size_t dim, RandomFlags flags, std::mt19937_64& rng,
                          const std::optional<Vector>& weight) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be at least 1");
  Vector w;
  if (weight) {
    if (weight->size() != dim) throw Error(ErrorCode::DimensionMismatch, "weight length");
    w = *weight;
  } else {
    w.push_back(FieldElement::one(field));
    for (std::size_t i = 1; i < dim; ++i) w.push_back(random_scalar(field, rng));
  }
  const auto pivot_it = std::find_if(w.begin(), w.end(), [](const FieldElement& x) { return !x.is_zero(); });
  if (pivot_it == w.end()) throw Error(ErrorCode::WeightInvalid, "sampled weight is zero");
  const std::size_t pivot = static_cast<std::size_t>(pivot_it - w.begin());
  if (flags.unital && !w[0].is_one()) throw Error(ErrorCode::PreconditionFailed, "the unit e_0 needs weight 1");
  const FieldElement pivot_inv = w[pivot].inverse();

  std::vector<Vector> products(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vector& row = products[i * dim + j];
      if (flags.unital && (i == 0 || j == 0)) {
        row = unit_vector(field, dim, i == 0 ? j : i);
      } else if (flags.commutative && j < i) {
        row = products[j * dim + i];
      } else {
        row = random_vector(field, dim, rng);
        FieldElement rest = w[i] * w[j];
        for (std::size_t k = 0; k < dim; ++k) {
          if (k != pivot) rest -= row[k] * w[k];
        }
        row[pivot] = rest * pivot_inv;
      }
    }

  StructureConstants constants;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const auto& c = products[i * dim + j][k];
        if (!c.is_zero()) constants.emplace(Triple{i, j, k}, c);
      }
  return BaricAlgebra(Algebra(field, dim, std::move(constants)), WeightFunctional(std::move(w)));
}

BaricAlgebra random_baric(const FieldSpec& field, std::size_t dim, RandomFlags flags, std::uint64_t seed) {
  if (!field.is_finite()) throw Error(ErrorCode::FieldNotFinite, "random_baric samples over prime fields");
  std::mt19937_64 rng(seed);
  return sample_baric(field, dim, flags, rng);
}

BaricAlgebra dual_numbers(const FieldSpec& field) { return truncated_polynomial(field, 2); }

BaricAlgebra truncated_polynomial(const FieldSpec& field, std::size_t dim) {
  StructureConstants constants;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < dim; ++a) {
    names.push_back(a == 0 ? "1" : a == 1 ? "x" : "x^" + std::to_string(a));
    for (std::size_t b = 0; a + b < dim; ++b) constants.emplace(Triple{a, b, a + b}, FieldElement::one(field));
  }
  Vector w = zero_vector(field, dim);
  w[0] = FieldElement::one(field);
  return BaricAlgebra(Algebra(field, dim, std::move(constants), std::move(names)), WeightFunctional(std::move(w)));
}

BaricAlgebra componentwise(const FieldSpec& field, std::size_t dim) {
  StructureConstants constants;
  for (std::size_t i = 0; i < dim; ++i) constants.emplace(Triple{i, i, i}, FieldElement::one(field));
  Vector w = zero_vector(field, dim);
  w[0] = FieldElement::one(field);
  return BaricAlgebra(Algebra(field, dim, std::move(constants)), WeightFunctional(std::move(w)));
}

BaricAlgebra scalar_action_algebra(const WeightFunctional& weight) {
  const FieldSpec field = weight.field();
  const std::size_t n = weight.size();
  StructureConstants constants;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!weight[j].is_zero()) constants.emplace(Triple{i, j, i}, weight[j]);
    }
  return BaricAlgebra(Algebra(field, n, std::move(constants)), weight);
}

namespace {

BaricAlgebra group_algebra_z2(const FieldSpec& field) {
  const FieldElement one = FieldElement::one(field);
  StructureConstants constants{{{0, 0, 0}, one}, {{0, 1, 1}, one}, {{1, 0, 1}, one}, {{1, 1, 0}, one}};
  return BaricAlgebra(Algebra(field, 2, std::move(constants), {"1", "g"}), WeightFunctional::ones(field, 2));
}

WeightFunctional weight_of(const FieldSpec& field, std::initializer_list<long> values) {
  Vector v;
  for (long x : values) v.emplace_back(field, x);
  return WeightFunctional(std::move(v));
}

}  // namespace

std::vector<BaricAlgebra> associative_generators(const FieldSpec& field) {
  return {
      scalar_action_model(field, 1),
      scalar_action_algebra(weight_of(field, {1, 0})),
      scalar_action_algebra(weight_of(field, {1, 1})),
      scalar_action_algebra(weight_of(field, {0, 1, 1})),
      dual_numbers(field),
      truncated_polynomial(field, 3),
      group_algebra_z2(field),
      componentwise(field, 2),
  };
}

std::string PropReport::to_line(const std::optional<std::string>& counterexample_path) const {
  std::string line = proposition_id + " trials=" + std::to_string(trials) + " failures=" + std::to_string(failures) +
                     " seed=" + std::to_string(seed);
  if (counterexample_path) line += " counterexample=" + *counterexample_path;
  return line;
}

namespace {

constexpr std::array<std::string_view, 22> kIds = {
    "P2.1", "P3.1", "P3.2", "P3.3", "C3.1", "P4.1", "C4.1", "P5.1", "P5.2", "P5.3", "P5.4",
    "P5.5", "L3.1", "L6.1", "P6.1", "P6.2", "L6.2", "P6.3", "C6.1", "EX2.1", "EX5.1", "EX6.1",
};

// State of one trial: the engine, the caps, and what to report on failure.
struct Trial {
  std::mt19937_64& rng;
  const Caps& caps;
  std::deque<BaricAlgebra> instances;
  std::string detail;

  FieldSpec prime_field(std::initializer_list<std::uint32_t> defaults) {
    if (caps.field) return *caps.field;
    std::vector<std::uint32_t> ps(defaults);
    std::uniform_int_distribution<std::size_t> d(0, ps.size() - 1);
    return FieldSpec::prime(ps[d(rng)]);
  }

  std::size_t dim(std::size_t hi) {
    hi = std::max<std::size_t>(1, std::min(hi, caps.max_dim));
    std::uniform_int_distribution<std::size_t> d(1, hi);
    return d(rng);
  }

  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
    return items[d(rng)];
  }

  BaricAlgebra baric(const FieldSpec& field, std::size_t dim, RandomFlags flags = {}) {
    return sample_baric(field, dim, flags, rng);
  }

  const BaricAlgebra& note(BaricAlgebra b) {
    instances.push_back(std::move(b));
    return instances.back();
  }

  bool fail(std::string why) {
    detail = std::move(why);
    return false;
  }
};

std::uint64_t power(std::uint64_t p, std::size_t n) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < n; ++i) out *= p;
  return out;
}

/// Factor dimensions (n1, n2) with p^(n1+n2) <= budget.
std::pair<std::size_t, std::size_t> dims_within(Trial& t, const FieldSpec& field, std::uint64_t budget) {
  std::size_t n1 = t.dim(3);
  std::size_t n2 = t.dim(3);
  while (power(field.p(), n1 + n2) > budget && (n1 > 1 || n2 > 1)) {
    if (n1 >= n2) --n1; else --n2;
  }
  return {n1, n2};
}

bool same_baric(const BaricAlgebra& a, const BaricAlgebra& b) {
  return a.algebra() == b.algebra() && a.weight() == b.weight();
}

// ---- construction ------------------------------------------------------------

bool check_p2_1(Trial& t) {
  const FieldSpec f = t.prime_field({5});
  const auto& b1 = t.note(t.baric(f, t.dim(3)));
  const auto& b2 = t.note(t.baric(f, t.dim(3)));
  const BaricAlgebra bow = bowtie(b1, b2);
  if (!validate_weight(bow.algebra(), bow.weight())) return t.fail("combined weight is not a homomorphism");
  for (int r = 0; r < 5; ++r) {
    const Vector x = random_vector(f, bow.dim(), t.rng);
    const Vector y = random_vector(f, bow.dim(), t.rng);
    const auto& w = bow.weight();
    if (!(w(multiply(bow.algebra(), x, y)) == w(x) * w(y))) {
      return t.fail("w(xy) != w(x)w(y) at x=" + format_vector(x) + " y=" + format_vector(y));
    }
  }
  return true;
}

bool check_ex2_1(Trial& t) {
  static const std::vector<std::uint32_t> primes = {0, 2, 3, 5, 7};
  const std::uint32_t p = t.pick(primes);
  const FieldSpec f = t.caps.field ? *t.caps.field : (p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p));
  const BaricAlgebra kk = kpow(f, 2);
  t.note(kk);
  const BaricAlgebra k = scalar_action_model(f, 1);
  if (!same_baric(kk, bowtie(k, k))) return t.fail("K^2 differs from K bowtie K");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t m = 0; m < 2; ++m) {
        if (!(kk.algebra().constant(i, j, m) == FieldElement(f, i == m ? 1 : 0))) return t.fail("constants not delta_ik");
      }
  const Vector x = random_vector(f, 2, t.rng);
  const Vector y = random_vector(f, 2, t.rng);
  if (!(multiply(kk.algebra(), x, y) == scale(y[0] + y[1], x))) return t.fail("(a,b)(a',b') != (a'+b')(a,b)");
  if (!(kk.weight()(x) == x[0] + x[1])) return t.fail("weight is not a+b");
  return true;
}

// ---- easy properties ---------------------------------------------------------

bool check_p3_1(Trial& t) {
  const FieldSpec f = t.prime_field({2, 3, 5});
  const auto& b1 = t.note(t.baric(f, t.dim(2)));
  const auto& b2 = t.note(t.baric(f, t.dim(2)));
  const auto& b3 = t.note(t.baric(f, t.dim(2)));
  const auto isos = structural_isos(b1, b2, b3);
  if (!isos.swap.verified) return t.fail("swap map is not a baric isomorphism");
  if (!isos.assoc.verified) return t.fail("reassociation map is not a baric isomorphism");
  return true;
}

Matrix random_invertible(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(random_vector(f, n, rng));
    Matrix m = Matrix::from_rows(f, rows, n);
    if (rank(m) == n) return m;
  }
}

/// The same baric algebra in the basis given by the rows of `transform`.
BaricAlgebra rebase(const BaricAlgebra& b, const Matrix& transform) {
  Vector w;
  for (std::size_t i = 0; i < transform.rows(); ++i) w.push_back(b.weight()(transform.row(i)));
  return BaricAlgebra(change_basis(b.algebra(), transform), WeightFunctional(std::move(w)));
}

bool check_p3_2(Trial& t) {
  const FieldSpec f = t.prime_field({2, 3, 5});
  const auto& b1 = t.note(t.baric(f, t.dim(3)));
  const auto& b2 = t.note(t.baric(f, t.dim(3)));
  const Matrix transform = random_invertible(f, b1.dim(), t.rng);
  const auto& b1_prime = t.note(rebase(b1, transform));
  const Matrix f_map = inverse(transform);
  if (!baric_isomorphic_by(f_map, b1, b1_prime)) return t.fail("change of basis is not a baric isomorphism");
  const auto isos = structural_isos(b1, b2, b2, f_map, b1_prime);
  if (!isos.transport.verified) return t.fail("transport (f, id) is not a baric isomorphism");
  return true;
}

bool check_p3_3(Trial& t) {
  const FieldSpec f = t.prime_field({3, 5, 7});
  const auto& b1 = t.note(t.baric(f, t.dim(3), {false, true}));
  const auto& b2 = t.note(t.baric(f, t.dim(3), {false, true}));
  const BaricAlgebra bow = bowtie(b1, b2);
  const Vector e1 = b1.algebra().basis_vector(0);
  const Vector e2 = b2.algebra().basis_vector(0);
  std::vector<FieldElement> lambdas = {FieldElement::zero(f), FieldElement::one(f), random_scalar(f, t.rng),
                                       random_scalar(f, t.rng)};
  std::vector<Vector> family;
  for (const auto& l : lambdas) family.push_back(idempotent_family(bow, e1, e2, l));
  for (const auto& e : family) {
    if (!(multiply(bow.algebra(), e, e) == e)) return t.fail("family member not idempotent: " + format_vector(e));
    if (!bow.weight()(e).is_one()) return t.fail("family member weight != 1: " + format_vector(e));
    for (const auto& g : family) {
      if (!(multiply(bow.algebra(), e, g) == e)) return t.fail("ef != e for e=" + format_vector(e) + " f=" + format_vector(g));
    }
  }
  return true;
}

bool check_c3_1(Trial& t) {
  const FieldSpec f = t.prime_field({2, 3});
  const auto& b1 = t.note(t.baric(f, t.dim(3)));
  const auto& b2 = t.note(t.baric(f, t.dim(3)));
  const Subspace center = commutative_center(bowtie(b1, b2).algebra());
  if (center.dim() != 0) return t.fail("commutative center has dimension " + std::to_string(center.dim()));
  return true;
}

bool check_l3_1(Trial& t) {
  const FieldSpec f = t.prime_field({3});
  const auto& b1 = t.note(t.baric(f, t.dim(3)));
  const auto& b2 = t.note(t.baric(f, t.dim(3)));
  const BaricAlgebra bow = bowtie(b1, b2);
  std::vector<Vector> probes;
  for (std::size_t i = 0; i < bow.dim(); ++i) probes.push_back(bow.algebra().basis_vector(i));
  for (int r = 0; r < 3; ++r) probes.push_back(random_vector(f, bow.dim(), t.rng));
  for (const auto& x : probes)
    for (const auto& y : probes) {
      if (!(commutator_closed_form(b1, b2, x, y) == commutator(bow.algebra(), x, y))) {
        return t.fail("closed-form commutator differs at x=" + format_vector(x) + " y=" + format_vector(y));
      }
    }
  return true;
}

// ---- weights -----------------------------------------------------------------

bool check_p4_1(Trial& t) {
  const FieldSpec f = t.prime_field({2, 3});
  const std::size_t n1 = t.dim(5);
  const std::size_t n2 = std::min(t.dim(3), 6 - n1);
  const auto& b1 = t.note(t.baric(f, n1));
  const auto& b2 = t.note(t.baric(f, std::max<std::size_t>(n2, 1)));
  const BaricAlgebra bow = bowtie(b1, b2);
  const auto weights = enumerate_weights(bow.algebra(), t.caps.enumeration_cap);
  if (weights.size() != 1) return t.fail("found " + std::to_string(weights.size()) + " weights");
  if (!(weights.front() == bow.weight())) return t.fail("the unique weight differs from the stored one");
  return true;
}

bool check_c4_1(Trial& t) {
  const FieldSpec f = t.prime_field({2, 3});
  const auto& b1 = t.note(t.baric(f, t.dim(3)));
  const auto& b2 = t.note(t.baric(f, t.dim(3)));
  const BaricAlgebra bow = bowtie(b1, b2);
  for (Side side : {Side::Left, Side::Right}) {
    const BaricAlgebra& b = side == Side::Left ? b1 : b2;
    std::vector<Vector> images;
    for (std::size_t i = 0; i < b.dim(); ++i) images.push_back(embed(bow, side, b.algebra().basis_vector(i)));
    if (span(f, images, bow.dim()).dim() != b.dim()) return t.fail("embedding is not injective");
    for (std::size_t i = 0; i < b.dim(); ++i) {
      if (!(bow.weight()(images[i]) == b.weight()[i])) return t.fail("embedding does not preserve weight");
      for (std::size_t j = 0; j < b.dim(); ++j) {
        const Vector lhs = embed(bow, side, b.algebra().basis_product(i, j));
        if (!(lhs == multiply(bow.algebra(), images[i], images[j]))) return t.fail("embedding is not multiplicative");
      }
    }
  }
  const auto weights = enumerate_weights(bow.algebra(), t.caps.enumeration_cap);
  if (weights.size() != 1) return t.fail("ambient weight is not unique");
  return true;
}

// ---- ideals ------------------------------------------------------------------

bool check_p5_1(Trial& t) {
  const FieldSpec f = t.prime_field({2, 3});
  const auto [n1, n2] = dims_within(t, f, 729);
  const auto& b1 = t.note(t.baric(f, n1));
  const auto& b2 = t.note(t.baric(f, n2));
  const BaricAlgebra bow = bowtie(b1, b2);
  for (Side side : {Side::Left, Side::Right}) {
    const BaricAlgebra& b = side == Side::Left ? b1 : b2;
    const Subspace kernel = b.kernel();
    for (const auto& ideal : two_sided_ideals_in(b.algebra(), Subspace::full(f, b.dim()), t.caps.enumeration_cap)) {
      if (embedded_ideal_check(bow, side, ideal) != kernel.contains(ideal)) {
        return t.fail("factor ideal " + ideal.to_string() + ": embedded two-sidedness disagrees with I in Ker");
      }
    }
  }
  return true;
}

bool check_p5_2(Trial& t) {
  const FieldSpec f = t.prime_field({2, 3});
  const auto [n1, n2] = dims_within(t, f, 100);
  const auto& b1 = t.note(t.baric(f, n1));
  const auto& b2 = t.note(t.baric(f, n2));
  const BaricAlgebra bow = bowtie(b1, b2);
  const Subspace k1 = b1.kernel();
  const Subspace k2 = b2.kernel();
  for (const auto& ideal : two_sided_ideals_in(bow.algebra(), Subspace::full(f, bow.dim()), t.caps.enumeration_cap)) {
    const auto proj = project_ideal(bow, ideal);
    if (proj.left.dim() != n1 && proj.left_is_ideal != k2.contains(proj.right)) {
      return t.fail("ideal " + ideal.to_string() + ": I1 ideal status disagrees with I2 in Ker w2");
    }
    if (proj.right.dim() != n2 && proj.right_is_ideal != k1.contains(proj.left)) {
      return t.fail("ideal " + ideal.to_string() + ": I2 ideal status disagrees with I1 in Ker w1");
    }
  }
  return true;
}

bool check_p5_3(Trial& t) {
  const FieldSpec f = t.prime_field({2, 3});
  const auto [n1, n2] = dims_within(t, f, 729);
  const auto& b1 = t.note(t.baric(f, n1, {true, t.coin()}));
  const auto& b2 = t.note(t.baric(f, n2, {true, t.coin()}));
  const BaricAlgebra bow = bowtie(b1, b2);
  const Subspace kernel = bow.kernel();
  for (const auto& ideal : kernel_ideals(bow, t.caps.enumeration_cap)) {
    const auto proj = project_ideal(bow, ideal);
    if ((proj.left.dim() == n1) != (ideal == kernel)) {
      return t.fail("ideal " + ideal.to_string() + ": I1 = A1 disagrees with I = Ker");
    }
  }
  return true;
}

bool check_p5_4(Trial& t) {
  const FieldSpec f = t.prime_field({2, 3});
  const auto [n1, n2] = dims_within(t, f, 729);
  const auto& b1 = t.note(t.baric(f, n1, {true, true}));
  const auto& b2 = t.note(t.baric(f, n2, {true, true}));
  const auto result = kernel_ideal_bijection(bowtie(b1, b2), t.caps.enumeration_cap);
  if (!result.verified) {
    return t.fail("phi/psi are not mutually inverse (" + std::to_string(result.phi.size()) + " pairs, " +
                  std::to_string(result.psi.size()) + " bowtie ideals)");
  }
  return true;
}

BaricAlgebra indecomposable_factor(Trial& t, const FieldSpec& f) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    BaricAlgebra b = t.baric(f, t.dim(3), {true, true});
    if (decomposability(b, {}, t.caps.enumeration_cap).kind == Decomposition::Kind::Indecomposable) return b;
  }
  return dual_numbers(f);
}

bool check_p5_5(Trial& t) {
  const FieldSpec f = t.prime_field({2});
  const auto& b1 = t.note(indecomposable_factor(t, f));
  const auto& b2 = t.note(indecomposable_factor(t, f));
  const auto d = decomposability(bowtie(b1, b2), {}, t.caps.enumeration_cap);
  if (d.kind != Decomposition::Kind::Indecomposable) {
    std::string why = std::string("bowtie reported ") + to_string(d.kind);
    if (d.first && d.second) why += " with " + d.first->to_string() + " + " + d.second->to_string();
    return t.fail(why);
  }
  return true;
}

bool check_ex5_1(Trial& t) {
  static const std::vector<std::uint32_t> primes = {2, 3, 5, 7};
  const FieldSpec f = t.caps.field ? *t.caps.field : FieldSpec::prime(t.pick(primes));
  const BaricAlgebra kk = kpow(f, 2);
  t.note(kk);
  const Subspace kernel = kk.kernel();
  const auto ideals = kernel_ideals(kk, t.caps.enumeration_cap);
  const std::set<Subspace> got(ideals.begin(), ideals.end());
  const std::set<Subspace> expected = {Subspace::zero(f, 2), kernel};
  if (got != expected) return t.fail("kernel of K bowtie K has " + std::to_string(got.size()) + " contained ideals");
  const auto bij = kernel_ideal_bijection(kk, t.caps.enumeration_cap);
  if (!bij.verified || bij.phi.size() != 1) return t.fail("bijection for K bowtie K is not {(0,0)} <-> {0}");
  return true;
}

// ---- associativity -----------------------------------------------------------

bool check_l6_1(Trial& t) {
  const FieldSpec f = t.prime_field({3});
  const auto& b1 = t.note(t.baric(f, t.dim(3)));
  const auto& b2 = t.note(t.baric(f, t.dim(3)));
  const BaricAlgebra bow = bowtie(b1, b2);
  std::vector<Vector> probes;
  for (std::size_t i = 0; i < bow.dim(); ++i) probes.push_back(bow.algebra().basis_vector(i));
  for (int r = 0; r < 2; ++r) probes.push_back(random_vector(f, bow.dim(), t.rng));
  for (const auto& x : probes)
    for (const auto& y : probes)
      for (const auto& z : probes) {
        if (!(associator_closed_form(b1, b2, x, y, z) == associator(bow.algebra(), x, y, z))) {
          return t.fail("closed-form associator differs at x=" + format_vector(x) + " y=" + format_vector(y) +
                        " z=" + format_vector(z));
        }
      }
  return true;
}

/// A factor from the fixed associative list, or a random scalar-action algebra.
BaricAlgebra associative_factor(Trial& t, const FieldSpec& f) {
  if (t.coin()) return t.pick(associative_generators(f));
  const std::size_t n = t.dim(3);
  Vector w = random_vector(f, n, t.rng);
  w[0] = FieldElement::one(f);
  return scalar_action_algebra(WeightFunctional(std::move(w)));
}

bool check_p6_1(Trial& t) {
  const FieldSpec f = t.prime_field({2, 3, 5});
  auto factor_of = [&]() { return t.coin() || t.coin() ? associative_factor(t, f) : t.baric(f, t.dim(3)); };
  const auto& b1 = t.note(factor_of());
  const auto& b2 = t.note(factor_of());
  const BaricAlgebra bow = bowtie(b1, b2);
  const auto character = associativity_character(b1, b2);
  const bool law = is_scalar_action(bow.algebra(), bow.weight());
  if (character.bowtie_associative != law) return t.fail("associativity disagrees with xy = w(y)x");
  if (law != (character.scalar_action_left && character.scalar_action_right)) {
    return t.fail("bowtie scalar-action law disagrees with the factors' laws");
  }
  return true;
}

bool check_p6_2(Trial& t) {
  const FieldSpec f = t.prime_field({3});
  const auto& b1 = t.note(associative_factor(t, f));
  const auto& b2 = t.note(associative_factor(t, f));
  const auto flags = property_flags(bowtie(b1, b2).algebra());
  if (flags.associative != flags.left_alternative || flags.associative != flags.right_alternative) {
    return t.fail("associative/left-alternative/right-alternative flags differ");
  }
  return true;
}

bool check_l6_2(Trial& t) {
  const FieldSpec q = FieldSpec::rationals();
  std::uniform_int_distribution<std::size_t> dim_dist(1, 6);
  const std::size_t n = dim_dist(t.rng);
  Vector eps = zero_vector(q, n);
  eps[0] = FieldElement::one(q);
  for (std::size_t i = 1; i < n; ++i) eps[i] = FieldElement(q, t.coin() ? 1 : 0);
  if (t.coin()) {
    std::shuffle(eps.begin(), eps.end(), t.rng);
  } else if (t.coin()) {
    for (auto& e : eps) {
      if (!e.is_zero()) e = FieldElement(q, std::uniform_int_distribution<long>(1, 5)(t.rng));
    }
  }
  const auto& b = t.note(sample_baric(q, n, {}, t.rng, eps));
  const Rebased rebased = normalize_weight_one_basis(b);
  for (std::size_t i = 0; i < n; ++i) {
    if (!b.weight()(rebased.transform.row(i)).is_one()) return t.fail("new basis vector " + std::to_string(i) + " has weight != 1");
  }
  if (rank(rebased.transform) != n) return t.fail("change of basis is singular");
  if (!(change_basis(b.algebra(), rebased.transform) == rebased.algebra.algebra())) {
    return t.fail("returned algebra differs from change_basis with the returned matrix");
  }
  if (!(rebased.algebra.weight() == WeightFunctional::ones(q, n))) return t.fail("returned weight is not all ones");
  return true;
}

bool check_p6_3(Trial& t) {
  const FieldSpec q = FieldSpec::rationals();
  std::uniform_int_distribution<std::size_t> dim_dist(1, 6);
  const std::size_t n = dim_dist(t.rng);
  Vector w = random_vector(q, n, t.rng);
  if (is_zero(w)) w[0] = FieldElement::one(q);
  BaricAlgebra b = scalar_action_algebra(WeightFunctional(std::move(w)));
  if (t.coin()) b = rebase(b, random_invertible(q, n, t.rng));
  const auto& base = t.note(std::move(b));
  const auto cls = classify_scalar_action(base);
  if (!cls) return t.fail("scalar-action algebra not classified");
  if (!baric_isomorphic_by(cls->isomorphism, base, cls->target)) return t.fail("returned map is not a baric isomorphism");
  if (!same_baric(cls->target, kpow(q, n))) return t.fail("target differs from K^n");
  // Control: a generic algebra does not satisfy the law.
  const auto& generic = t.note(sample_baric(q, std::max<std::size_t>(n, 2), {}, t.rng));
  if (is_scalar_action(generic.algebra(), generic.weight()) != classify_scalar_action(generic).has_value()) {
    return t.fail("classification presence disagrees with the scalar-action law");
  }
  return true;
}

bool check_c6_1(Trial& t) {
  const FieldSpec q = FieldSpec::rationals();
  const auto& b1 = t.note(associative_factor(t, q));
  const auto& b2 = t.note(associative_factor(t, q));
  const BaricAlgebra bow = bowtie(b1, b2);
  const bool associative = is_associative(bow.algebra());
  const bool both_models = classify_scalar_action(b1).has_value() && classify_scalar_action(b2).has_value();
  if (associative != both_models) return t.fail("associativity disagrees with both factors being K^n");
  if (associative) {
    const auto cls = classify_scalar_action(bow);
    if (!cls || cls->target.dim() != b1.dim() + b2.dim()) return t.fail("associative bowtie is not K^(n1+n2)");
    if (!baric_isomorphic_by(cls->isomorphism, bow, cls->target)) return t.fail("isomorphism to K^(n1+n2) fails");
  }
  return true;
}

bool check_ex6_1(Trial& t) {
  static const std::vector<std::uint32_t> primes = {0, 2, 3, 5};
  const std::uint32_t p = t.pick(primes);
  const FieldSpec f = t.caps.field ? *t.caps.field : (p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p));
  std::uniform_int_distribution<std::size_t> dim_dist(1, 6);
  const std::size_t n = dim_dist(t.rng);
  const auto& k = t.note(kpow(f, n));
  if (!same_baric(k, scalar_action_model(f, n))) return t.fail("iterated bowtie differs from delta_ik model");
  if (!is_associative(k.algebra())) return t.fail("K^n is not associative");
  if (!(k.weight() == WeightFunctional::ones(f, n))) return t.fail("weight is not the coordinate sum");
  return true;
}

using SuiteFn = bool (*)(Trial&);

const std::map<std::string_view, SuiteFn>& suites() {
  static const std::map<std::string_view, SuiteFn> table = {
      {"P2.1", check_p2_1}, {"P3.1", check_p3_1}, {"P3.2", check_p3_2},   {"P3.3", check_p3_3},
      {"C3.1", check_c3_1}, {"P4.1", check_p4_1}, {"C4.1", check_c4_1},   {"P5.1", check_p5_1},
      {"P5.2", check_p5_2}, {"P5.3", check_p5_3}, {"P5.4", check_p5_4},   {"P5.5", check_p5_5},
      {"L3.1", check_l3_1}, {"L6.1", check_l6_1}, {"P6.1", check_p6_1},   {"P6.2", check_p6_2},
      {"L6.2", check_l6_2}, {"P6.3", check_p6_3}, {"C6.1", check_c6_1},   {"EX2.1", check_ex2_1},
      {"EX5.1", check_ex5_1}, {"EX6.1", check_ex6_1},
  };
  return table;
}

std::string serialize_counterexample(std::string_view id, std::uint64_t seed, std::size_t trial, const Trial& t) {
  nlohmann::json out;
  out["proposition"] = std::string(id);
  out["seed"] = seed;
  out["trial"] = trial;
  out["detail"] = t.detail;
  out["instances"] = nlohmann::json::array();
  for (const auto& b : t.instances) out["instances"].push_back(nlohmann::json::parse(save_document(b)));
  return out.dump(2) + "\n";
}

}  // namespace

std::span<const std::string_view> proposition_ids() { return kIds; }

PropReport check(std::string_view proposition_id, std::size_t trials, std::uint64_t seed, const Caps& caps) {
  const auto it = suites().find(proposition_id);
  if (it == suites().end()) {
    throw Error(ErrorCode::UnknownProposition, "unknown proposition id '" + std::string(proposition_id) + "'");
  }
  PropReport report;
  report.proposition_id = std::string(proposition_id);
  report.trials = trials;
  report.seed = seed;
  const std::uint64_t id_hash = std::hash<std::string_view>{}(proposition_id);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(id_hash),
                      static_cast<std::uint32_t>(id_hash >> 32)};
    std::mt19937_64 rng(seq);
    Trial t{rng, caps, {}, {}};
    bool ok = false;
    try {
      ok = it->second(t);
    } catch (const Error& e) {
      t.detail = std::string("error: ") + e.what();
    }
    if (!ok) {
      ++report.failures;
      if (!report.first_counterexample) {
        report.first_counterexample = serialize_counterexample(proposition_id, seed, trial, t);
      }
    }
  }
  return report;
}

}  // namespace baric
