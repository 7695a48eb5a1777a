#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tgs/structure.hpp"

namespace tgs {

/// Structure interchange format:
///   {"order": n, "gamma": m, "names": [...], "addition": [[...]],
///    "ternary": {"α,β": [[[...]]]}}
/// with α, β zero-based and ternary["α,β"][a][b][c] = a_α b_β c.
GammaStructure structure_from_json(const nlohmann::json& j);
nlohmann::json structure_to_json(const GammaStructure& s);

/// Parses text; syntax errors raise ParseError with the byte offset.
GammaStructure parse_structure(std::string_view text);

/// Canonical text layout: one table row per line, keys in the order above.
/// parse_structure(serialize_structure(s)) == s, and re-serializing a
/// canonically formatted file reproduces it byte for byte.
std::string serialize_structure(const GammaStructure& s);

GammaStructure load_structure(const std::filesystem::path& path);
void save_structure(const GammaStructure& s, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Parameter-pair key "α,β".
std::string pair_key(int alpha, int beta);

}  // namespace tgs
