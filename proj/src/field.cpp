#include "baric/field.hpp"

#include <cctype>
#include <ostream>

namespace baric {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldNotFinite: return "FieldNotFinite";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::CharacteristicObstruction: return "CharacteristicObstruction";
    case ErrorCode::WeightInvalid: return "WeightInvalid";
    case ErrorCode::NotABowtie: return "NotABowtie";
    case ErrorCode::NotIdempotentInput: return "NotIdempotentInput";
    case ErrorCode::WeightNotOne: return "WeightNotOne";
    case ErrorCode::NotWeightPreserving: return "NotWeightPreserving";
    case ErrorCode::FactorsNotCommutativeUnital: return "FactorsNotCommutativeUnital";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::UnknownProposition: return "UnknownProposition";
    case ErrorCode::DuplicateTriple: return "DuplicateTriple";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > 0xffffffffULL || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField, "not a 32-bit prime: " + std::to_string(p));
  }
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() >= 2 && (text[0] == 'p' || text[0] == 'P')) {
    std::uint64_t p = 0;
    for (char c : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || p > 0xffffffffULL) {
        throw Error(ErrorCode::ParseError, "bad field selector '" + std::string(text) + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime(p);
  }
  throw Error(ErrorCode::ParseError, "bad field selector '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
  return kind_ == Kind::Rationals ? std::string("q") : "p" + std::to_string(p_);
}

namespace {

std::uint64_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on (a, p); a is nonzero mod p.
  std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(p);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  std::int64_t inv = old_s % static_cast<std::int64_t>(p);
  if (inv < 0) inv += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(inv);
}

}  // namespace

FieldElement::FieldElement(const FieldSpec& field) : field_(field) {
  if (field.is_finite()) {
    value_ = std::uint64_t{0};
  } else {
    value_ = mpq_class(0);
  }
}

FieldElement::FieldElement(const FieldSpec& field, long value) : field_(field) {
  if (field.is_finite()) {
    value_ = reduce(mpz_class(value), field.p());
  } else {
    value_ = mpq_class(value);
  }
}

FieldElement::FieldElement(const FieldSpec& field, const mpz_class& num, const mpz_class& den)
    : field_(field) {
  if (field.is_finite()) {
    std::uint64_t d = reduce(den, field.p());
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(field.p()));
    value_ = reduce(num, field.p()) * inverse_mod(d, field.p()) % field.p();
  } else {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  }
}

bool FieldElement::is_zero() const {
  if (field_.is_finite()) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const {
  if (field_.is_finite()) return std::get<std::uint64_t>(value_) == 1 % field_.p();
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t FieldElement::residue() const { return std::get<std::uint64_t>(value_); }

const mpq_class& FieldElement::rational() const { return std::get<mpq_class>(value_); }

void FieldElement::require_same_field(const FieldElement& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
  }
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  FieldElement out(field_);
  if (field_.is_finite()) {
    out.value_ = inverse_mod(residue(), field_.p());
  } else {
    out.value_ = mpq_class(1) / rational();
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (field_.is_finite()) {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + rhs.residue()) % field_.p();
  } else {
    std::get<mpq_class>(value_) += rhs.rational();
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (field_.is_finite()) {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + field_.p() - rhs.residue()) % field_.p();
  } else {
    std::get<mpq_class>(value_) -= rhs.rational();
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (field_.is_finite()) {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v * rhs.residue()) % field_.p();
  } else {
    std::get<mpq_class>(value_) *= rhs.rational();
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

FieldElement FieldElement::operator-() const {
  FieldElement out(field_);
  return out -= *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string FieldElement::to_string() const {
  if (field_.is_finite()) return std::to_string(residue());
  return rational().get_str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

FieldElement scalar_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorCode::PreconditionFailed, "unknown arithmetic op");
}

FieldElement parse_scalar(std::string_view text, const FieldSpec& field) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "bad scalar '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw fail();
    out.assign(text.substr(start, pos - start));
  };
  std::string num_text, den_text = "1";
  digits(num_text);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    digits(den_text);
  }
  if (pos != text.size()) throw fail();
  mpz_class num(num_text, 10), den(den_text, 10);
  if (negative) num = -num;
  return FieldElement(field, num, den);
}

}  // namespace baric
