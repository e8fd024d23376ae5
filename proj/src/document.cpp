#include "baric/document.hpp"
#include "baric/bowtie.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace baric {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::size_t read_index(const json& node, const std::string& where) {
  if (!node.is_number_integer() || node.get<long long>() < 0) bad(where, "expected a non-negative integer");
  return node.get<std::size_t>();
}

FieldElement read_scalar(const json& node, const FieldSpec& field, const std::string& where) {
  if (!node.is_string()) bad(where, "coefficients must be strings");
  try {
    return parse_scalar(node.get<std::string>(), field);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DivisionByZero) throw;
    bad(where, e.what());
  }
}

FieldSpec read_field(const json& node) {
  if (!node.is_object() || !node.contains("kind") || !node["kind"].is_string()) bad("field", "expected {\"kind\": ...}");
  const auto kind = node["kind"].get<std::string>();
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "prime") {
    if (!node.contains("p")) bad("field.p", "missing");
    const std::size_t p = read_index(node["p"], "field.p");
    try {
      return FieldSpec::prime(p);
    } catch (const Error& e) {
      bad("field.p", e.what());
    }
  }
  bad("field.kind", "expected \"rational\" or \"prime\"");
}

}  // namespace

RawDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) bad("document", "expected a JSON object");
  for (const char* key : {"field", "dim", "mul", "weight"}) {
    if (!doc.contains(key)) bad(key, "missing");
  }
  const FieldSpec field = read_field(doc["field"]);
  const std::size_t dim = read_index(doc["dim"], "dim");
  if (dim == 0) bad("dim", "must be at least 1");

  std::vector<std::string> names;
  if (doc.contains("basis")) {
    const auto& basis = doc["basis"];
    if (!basis.is_array() || basis.size() != dim) bad("basis", "expected an array of dim strings");
    for (std::size_t i = 0; i < dim; ++i) {
      if (!basis[i].is_string()) bad("basis[" + std::to_string(i) + "]", "expected a string");
      names.push_back(basis[i].get<std::string>());
    }
  }

  const auto& mul = doc["mul"];
  if (!mul.is_array()) bad("mul", "expected an array");
  StructureConstants constants;
  std::set<Triple> seen;
  for (std::size_t r = 0; r < mul.size(); ++r) {
    const std::string where = "mul[" + std::to_string(r) + "]";
    const auto& entry = mul[r];
    if (!entry.is_array() || entry.size() != 4) bad(where, "expected [i, j, k, \"coeff\"]");
    Triple t{read_index(entry[0], where + "[0]"), read_index(entry[1], where + "[1]"),
             read_index(entry[2], where + "[2]")};
    if (t.i >= dim || t.j >= dim || t.k >= dim) bad(where, "index out of range");
    if (!seen.insert(t).second) {
      throw Error(ErrorCode::DuplicateTriple, where + ": (" + std::to_string(t.i) + "," + std::to_string(t.j) + "," +
                                                  std::to_string(t.k) + ") appears twice");
    }
    FieldElement c = read_scalar(entry[3], field, where + "[3]");
    if (!c.is_zero()) constants.emplace(t, std::move(c));
  }

  const auto& weight = doc["weight"];
  if (!weight.is_array() || weight.size() != dim) bad("weight", "expected an array of dim coefficient strings");
  Vector w;
  for (std::size_t i = 0; i < dim; ++i) w.push_back(read_scalar(weight[i], field, "weight[" + std::to_string(i) + "]"));

  std::optional<std::pair<std::size_t, std::size_t>> blocks;
  if (doc.contains("provenance")) {
    const auto& prov = doc["provenance"];
    if (!prov.is_object() || !prov.contains("bowtie") || !prov["bowtie"].is_object()) {
      bad("provenance", "expected {\"bowtie\": {\"left\": n, \"right\": m}}");
    }
    const auto& b = prov["bowtie"];
    if (!b.contains("left") || !b.contains("right")) bad("provenance.bowtie", "missing left/right");
    const std::size_t left = read_index(b["left"], "provenance.bowtie.left");
    const std::size_t right = read_index(b["right"], "provenance.bowtie.right");
    if (left == 0 || right == 0 || left + right != dim) bad("provenance.bowtie", "blocks must be positive and sum to dim");
    blocks = std::make_pair(left, right);
  }

  return {Algebra(field, dim, std::move(constants), std::move(names)), std::move(w), blocks};
}

BaricAlgebra load_document(std::string_view text) {
  RawDocument raw = parse_document(text);
  WeightFunctional weight(raw.weight);
  std::optional<BowtieTag> tag;
  if (raw.bowtie_blocks) {
    const auto [left, right] = *raw.bowtie_blocks;
    Vector wl(raw.weight.begin(), raw.weight.begin() + static_cast<std::ptrdiff_t>(left));
    Vector wr(raw.weight.begin() + static_cast<std::ptrdiff_t>(left), raw.weight.end());
    if (is_zero(wl) || is_zero(wr)) {
      throw Error(ErrorCode::WeightInvalid, "bowtie factor weights must be nonzero");
    }
    tag = BowtieTag{left, right, WeightFunctional(std::move(wl)), WeightFunctional(std::move(wr))};
  }
  if (!validate_weight(raw.algebra, weight)) {
    throw Error(ErrorCode::WeightInvalid, "weight is zero or not multiplicative");
  }
  BaricAlgebra out(std::move(raw.algebra), std::move(weight), std::move(tag));
  if (out.provenance()) {
    bool consistent = false;
    try {
      consistent = bowtie(factor(out, Side::Left), factor(out, Side::Right)).algebra() == out.algebra();
    } catch (const Error&) {
    }
    if (!consistent) bad("provenance.bowtie", "structure constants are not those of a bowtie with these blocks");
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << contents;
}

BaricAlgebra load(const std::filesystem::path& path) { return load_document(read_file(path)); }

std::string save_document(const BaricAlgebra& algebra) {
  const auto& a = algebra.algebra();
  std::string out = "{\n";
  if (a.field().is_finite()) {
    out += "  \"field\": {\"kind\": \"prime\", \"p\": " + std::to_string(a.field().p()) + "},\n";
  } else {
    out += "  \"field\": {\"kind\": \"rational\"},\n";
  }
  out += "  \"dim\": " + std::to_string(a.dim()) + ",\n";
  if (!a.basis_names().empty()) {
    out += "  \"basis\": [";
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (i) out += ", ";
      out += json(a.basis_names()[i]).dump();
    }
    out += "],\n";
  }
  if (a.constants().empty()) {
    out += "  \"mul\": [],\n";
  } else {
    out += "  \"mul\": [\n";
    std::size_t r = 0;
    for (const auto& [t, c] : a.constants()) {
      out += "    [" + std::to_string(t.i) + ", " + std::to_string(t.j) + ", " + std::to_string(t.k) + ", \"" +
             c.to_string() + "\"]";
      out += ++r == a.constants().size() ? "\n" : ",\n";
    }
    out += "  ],\n";
  }
  out += "  \"weight\": [";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) out += ", ";
    out += "\"" + algebra.weight()[i].to_string() + "\"";
  }
  out += "]";
  if (const auto& tag = algebra.provenance()) {
    out += ",\n  \"provenance\": {\"bowtie\": {\"left\": " + std::to_string(tag->left_dim) +
           ", \"right\": " + std::to_string(tag->right_dim) + "}}";
  }
  out += "\n}\n";
  return out;
}

void save(const BaricAlgebra& algebra, const std::filesystem::path& path) {
  write_file(path, save_document(algebra));
}

}  // namespace baric
