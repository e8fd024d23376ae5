#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "baric/baric.hpp"

namespace baric {

// An algebra document as read from disk, before the weight is validated.
struct RawDocument {
  Algebra algebra;
  Vector weight;
  std::optional<std::pair<std::size_t, std::size_t>> bowtie_blocks;
};

/// Parses the JSON algebra document. Throws ParseError naming the offending
/// field, or DuplicateTriple.
RawDocument parse_document(std::string_view text);

/// parse_document followed by weight validation (WeightInvalid) and
/// reconstruction of the bowtie tag from the weight blocks.
BaricAlgebra load_document(std::string_view text);
BaricAlgebra load(const std::filesystem::path& path);

/// Canonical text: triples sorted, scalars canonical, fixed layout, so one
/// save reaches a fixed point.
std::string save_document(const BaricAlgebra& algebra);
void save(const BaricAlgebra& algebra, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace baric
