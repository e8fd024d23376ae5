#include "baric/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "baric/bowtie.hpp"
#include "baric/document.hpp"
#include "baric/ideals.hpp"
#include "baric/propcheck.hpp"

namespace baric::cli {

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

std::vector<Vector> parse_vectors(const std::string& text, const FieldSpec& field, std::size_t dim) {
  std::vector<Vector> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) {
      Vector v = parse_vector(piece, field);
      if (v.size() != dim) {
        throw Error(ErrorCode::DimensionMismatch,
                    "vector '" + piece + "' has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim));
      }
      out.push_back(std::move(v));
    }
    start = end + 1;
  }
  return out;
}

std::vector<Vector> read_vector_file(const std::string& path, const FieldSpec& field, std::size_t dim) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("vectors") || !doc["vectors"].is_array()) {
    throw Error(ErrorCode::ParseError, path + ": expected {\"vectors\": [[coeff, ...], ...]}");
  }
  std::vector<Vector> out;
  for (std::size_t r = 0; r < doc["vectors"].size(); ++r) {
    const auto& row = doc["vectors"][r];
    const std::string where = path + ": vectors[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != dim) throw Error(ErrorCode::ParseError, where + ": expected dim entries");
    Vector v;
    for (const auto& c : row) {
      if (!c.is_string()) throw Error(ErrorCode::ParseError, where + ": coefficients must be strings");
      v.push_back(parse_scalar(c.get<std::string>(), field));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("BARIC_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "BARIC_CAP must be a positive integer");
    }
  }
  return kDefaultEnumerationCap;
}

void print_subspace(std::ostream& out, const std::string& key, const Subspace& s) {
  out << key << "_dim=" << s.dim() << "\n";
  for (const auto& v : s.basis_vectors()) out << key << "_basis=" << format_vector(v) << "\n";
}

int cmd_check(const std::string& path, std::ostream& out) {
  RawDocument raw = parse_document(read_file(path));
  const Algebra& a = raw.algebra;
  const bool nonzero = !is_zero(raw.weight);
  const bool valid = nonzero && validate_weight(a, WeightFunctional(raw.weight));
  out << "valid=" << flag(valid) << "\n";
  out << "field=" << a.field().to_string() << "\n";
  out << "dim=" << a.dim() << "\n";
  const auto flags = property_flags(a);
  out << "commutative=" << flag(flags.commutative) << "\n";
  out << "associative=" << flag(flags.associative) << "\n";
  out << "left_alternative=" << flag(flags.left_alternative) << "\n";
  out << "right_alternative=" << flag(flags.right_alternative) << "\n";
  out << "unital=" << flag(flags.unital) << "\n";
  if (flags.unit) out << "unit=" << format_vector(*flags.unit) << "\n";
  out << "center_dim=" << commutative_center(a).dim() << "\n";
  if (!valid) {
    out << "reason=" << (nonzero ? "weight_not_multiplicative" : "weight_zero") << "\n";
    return 1;
  }
  const BaricAlgebra b = load_document(read_file(path));
  out << "kernel_dim=" << b.kernel().dim() << "\n";
  const auto nil = nil_kernel_report(b, b.dim() + 1);
  out << "nil_kernel=" << flag(nil.nil) << "\n";
  out << "nil_bound=" << nil.bound << "\n";
  if (nil.witness) out << "nil_witness=" << format_vector(*nil.witness) << "\n";
  if (const auto& tag = b.provenance()) out << "bowtie_left=" << tag->left_dim << "\nbowtie_right=" << tag->right_dim << "\n";
  return 0;
}

int cmd_bowtie(const std::string& left, const std::string& right, const std::string& output, std::ostream& out) {
  const BaricAlgebra b = bowtie(load(left), load(right));
  save(b, output);
  out << "wrote=" << output << "\ndim=" << b.dim() << "\n";
  return 0;
}

int cmd_kpow(std::size_t n, const std::string& field, const std::string& output, std::ostream& out) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "N must be at least 1");
  const BaricAlgebra b = kpow(FieldSpec::parse(field), n);
  save(b, output);
  out << "wrote=" << output << "\ndim=" << b.dim() << "\n";
  return 0;
}

int cmd_weights(const std::string& path, std::uint64_t cap, std::ostream& out) {
  RawDocument raw = parse_document(read_file(path));
  const Algebra& a = raw.algebra;
  const bool stored_valid = !is_zero(raw.weight) && validate_weight(a, WeightFunctional(raw.weight));
  if (!a.field().is_finite()) {
    out << "mode=verify\n";
    out << "stored_valid=" << flag(stored_valid) << "\n";
    return stored_valid ? 0 : 1;
  }
  const auto weights = enumerate_weights(a, cap);
  out << "mode=enumerate\n";
  out << "count=" << weights.size() << "\n";
  for (const auto& w : weights) out << "weight=" << format_vector(w.values()) << "\n";
  out << "stored_valid=" << flag(stored_valid) << "\n";
  return 0;
}

int cmd_idempotents(const std::string& path, std::uint64_t cap, std::ostream& out) {
  const BaricAlgebra b = load(path);
  const auto found = weight_one_idempotents(b, cap);
  out << "mode=" << (b.field().is_finite() ? "exhaustive" : "candidates") << "\n";
  out << "count=" << found.size() << "\n";
  for (const auto& e : found) out << "idempotent=" << format_vector(e) << "\n";
  return 0;
}

int cmd_ideal(const std::string& path, const std::string& gens, const std::string& side, std::ostream& out) {
  const BaricAlgebra b = load(path);
  const auto vectors = parse_vectors(gens, b.field(), b.dim());
  const Ideal ideal = ideal_closure(b.algebra(), vectors, side == "right" ? IdealSide::Right : IdealSide::TwoSided);
  out << "sidedness=" << to_string(ideal.sided) << "\n";
  out << "in_kernel=" << flag(b.kernel().contains(ideal.space)) << "\n";
  print_subspace(out, "ideal", ideal.space);
  return 0;
}

int cmd_project(const std::string& path, const std::string& ideal_path, std::ostream& out) {
  const BaricAlgebra b = load(path);
  require_bowtie(b);
  const Subspace ideal = span(b.field(), read_vector_file(ideal_path, b.field(), b.dim()), b.dim());
  const Sidedness sided = sidedness(b.algebra(), ideal);
  out << "input_sidedness=" << to_string(sided) << "\n";
  const auto proj = project_ideal(b, ideal);
  print_subspace(out, "left", proj.left);
  out << "left_is_ideal=" << flag(proj.left_is_ideal) << "\n";
  print_subspace(out, "right", proj.right);
  out << "right_is_ideal=" << flag(proj.right_is_ideal) << "\n";
  return 0;
}

int cmd_bijection(const std::string& path, std::uint64_t cap, std::ostream& out) {
  const BaricAlgebra b = load(path);
  const auto result = kernel_ideal_bijection(b, cap);
  out << "factor_pairs=" << result.phi.size() << "\n";
  out << "bowtie_ideals=" << result.psi.size() << "\n";
  out << "verified=" << flag(result.verified) << "\n";
  return result.verified ? 0 : 1;
}

int cmd_decompose(const std::string& path, const std::string& candidates, std::uint64_t cap, std::ostream& out) {
  const BaricAlgebra b = load(path);
  const auto cands = parse_vectors(candidates, b.field(), b.dim());
  const auto d = decomposability(b, cands, cap);
  out << "result=" << to_string(d.kind) << "\n";
  if (d.idempotent) out << "idempotent=" << format_vector(*d.idempotent) << "\n";
  if (d.first) print_subspace(out, "first", *d.first);
  if (d.second) print_subspace(out, "second", *d.second);
  return 0;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const BaricAlgebra b = load(path);
  const bool law = is_scalar_action(b.algebra(), b.weight());
  out << "scalar_action=" << flag(law) << "\n";
  if (!law) return 0;
  const auto cls = classify_scalar_action(b);
  if (!cls) {
    out << "classified=false\n";
    return 1;
  }
  const bool verified = baric_isomorphic_by(cls->isomorphism, b, cls->target);
  out << "classified=true\n";
  out << "target_dim=" << cls->target.dim() << "\n";
  for (std::size_t i = 0; i < cls->transform.rows(); ++i) out << "new_basis=" << format_vector(cls->transform.row(i)) << "\n";
  for (std::size_t i = 0; i < cls->isomorphism.rows(); ++i) out << "iso_row=" << format_vector(cls->isomorphism.row(i)) << "\n";
  out << "verified=" << flag(verified) << "\n";
  return verified ? 0 : 1;
}

struct VerifyOptions {
  std::string props;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::string field;
  std::size_t max_dim = 3;
  std::string out_dir = "counterexamples";
};

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    if (end > start) ids.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return ids;
}

int cmd_verify(const VerifyOptions& opts, std::uint64_t cap, std::ostream& out) {
  std::vector<std::string> ids;
  if (opts.props.empty()) {
    for (auto id : proposition_ids()) ids.emplace_back(id);
  } else {
    ids = split_ids(opts.props);
  }
  Caps caps;
  if (!opts.field.empty()) caps.field = FieldSpec::parse(opts.field);
  caps.max_dim = opts.max_dim;
  caps.enumeration_cap = cap;
  for (const auto& id : ids) {
    if (std::find(proposition_ids().begin(), proposition_ids().end(), id) == proposition_ids().end()) {
      throw Error(ErrorCode::UnknownProposition, "unknown proposition id '" + id + "'");
    }
  }
  std::size_t failed = 0;
  for (const auto& id : ids) {
    const PropReport report = check(id, opts.trials, opts.seed, caps);
    std::optional<std::string> path;
    if (report.first_counterexample) {
      std::filesystem::create_directories(opts.out_dir);
      path = (std::filesystem::path(opts.out_dir) / (id + "-seed" + std::to_string(opts.seed) + ".json")).string();
      write_file(*path, *report.first_counterexample);
    }
    out << report.to_line(path) << "\n";
    if (!report.passed()) ++failed;
  }
  out << "suites=" << ids.size() << " passed=" << ids.size() - failed << " failed=" << failed << "\n";
  return failed == 0 ? 0 : 1;
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DuplicateTriple:
    case ErrorCode::InvalidField:
    case ErrorCode::WeightInvalid:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::UnknownProposition:
    case ErrorCode::DivisionByZero:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with baric algebras and their bowtie products", "baric"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> cap_flag;
  std::string file, file2, output, field = "q", gens, side = "two", ideal_file, candidates;
  std::size_t n = 0;
  VerifyOptions verify_opts;

  auto* check_cmd = app.add_subcommand("check", "Validate a document and report its properties");
  check_cmd->add_option("FILE", file)->required();

  auto* bowtie_cmd = app.add_subcommand("bowtie", "Write the bowtie product of two documents");
  bowtie_cmd->add_option("A", file)->required();
  bowtie_cmd->add_option("B", file2)->required();
  bowtie_cmd->add_option("-o,--output", output)->required();

  auto* kpow_cmd = app.add_subcommand("kpow", "Write the iterated bowtie of the base field");
  kpow_cmd->add_option("N", n)->required();
  kpow_cmd->add_option("--field", field)->capture_default_str();
  kpow_cmd->add_option("-o,--output", output)->required();

  auto* weights_cmd = app.add_subcommand("weights", "Enumerate weights (prime fields) or verify the stored one");
  weights_cmd->add_option("FILE", file)->required();
  weights_cmd->add_option("--cap", cap_flag);

  auto* idem_cmd = app.add_subcommand("idempotents", "List weight-one idempotents");
  idem_cmd->add_option("FILE", file)->required();
  idem_cmd->add_option("--cap", cap_flag);

  auto* ideal_cmd = app.add_subcommand("ideal", "Ideal generated by vectors");
  ideal_cmd->add_option("FILE", file)->required();
  ideal_cmd->add_option("--gens", gens)->required();
  ideal_cmd->add_option("--side", side)->check(CLI::IsMember({"right", "two"}))->capture_default_str();

  auto* project_cmd = app.add_subcommand("project", "Project an ideal of a bowtie onto both factors");
  project_cmd->add_option("FILE", file)->required();
  project_cmd->add_option("--ideal", ideal_file)->required();

  auto* bij_cmd = app.add_subcommand("bijection", "Check the kernel-ideal correspondence of a bowtie");
  bij_cmd->add_option("FILE", file)->required();
  bij_cmd->add_option("--cap", cap_flag);

  auto* dec_cmd = app.add_subcommand("decompose", "Decide decomposability of the kernel");
  dec_cmd->add_option("FILE", file)->required();
  dec_cmd->add_option("--candidates", candidates, "Vectors tried as generators over the rationals");
  dec_cmd->add_option("--cap", cap_flag);

  auto* cls_cmd = app.add_subcommand("classify", "Classify scalar-action algebras");
  cls_cmd->add_option("FILE", file)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--props", verify_opts.props, "Comma-separated ids (default: all)");
  verify_cmd->add_option("--trials", verify_opts.trials)->capture_default_str();
  verify_cmd->add_option("--seed", verify_opts.seed)->capture_default_str();
  verify_cmd->add_option("--field", verify_opts.field, "Prime field override, e.g. p3");
  verify_cmd->add_option("--maxdim", verify_opts.max_dim)->capture_default_str();
  verify_cmd->add_option("--out", verify_opts.out_dir, "Directory for counterexample files")->capture_default_str();
  verify_cmd->add_option("--cap", cap_flag);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::uint64_t cap = cap_flag ? *cap_flag : default_cap();
    if (*check_cmd) return cmd_check(file, out);
    if (*bowtie_cmd) return cmd_bowtie(file, file2, output, out);
    if (*kpow_cmd) return cmd_kpow(n, field, output, out);
    if (*weights_cmd) return cmd_weights(file, cap, out);
    if (*idem_cmd) return cmd_idempotents(file, cap, out);
    if (*ideal_cmd) return cmd_ideal(file, gens, side, out);
    if (*project_cmd) return cmd_project(file, ideal_file, out);
    if (*bij_cmd) return cmd_bijection(file, cap, out);
    if (*dec_cmd) return cmd_decompose(file, candidates, cap, out);
    if (*cls_cmd) return cmd_classify(file, out);
    if (*verify_cmd) return cmd_verify(verify_opts, cap, out);
  } catch (const Error& e) {
    err << "error=" << to_string(e.code()) << " message=\"" << e.what() << "\"\n";
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error=Internal message=\"" << e.what() << "\"\n";
    return 2;
  }
  return 2;
}

}  // namespace baric::cli
