#include "tgs/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tgs/errors.hpp"

namespace tgs {

using nlohmann::json;

std::string pair_key(int alpha, int beta) {
  return std::to_string(alpha) + "," + std::to_string(beta);
}

namespace {

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw InputError(std::string("missing or non-integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

std::vector<int> matrix_row(const json& row, int n, const std::string& where) {
  if (!row.is_array() || static_cast<int>(row.size()) != n)
    throw InputError(where + ": expected an array of length " + std::to_string(n));
  std::vector<int> out;
  for (const auto& v : row) {
    if (!v.is_number_integer()) throw InputError(where + ": non-integer entry");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

GammaStructure structure_from_json(const json& j) {
  if (!j.is_object()) throw InputError("structure must be a JSON object");
  const int n = get_int(j, "order");
  const int m = get_int(j, "gamma");
  if (n < 1 || n > kMaxCarrier) throw InputError("order must lie in [1, 32]");
  if (m < 1) throw InputError("gamma must be at least 1");

  std::vector<std::string> names;
  if (j.contains("names")) {
    const auto& arr = j.at("names");
    if (!arr.is_array()) throw InputError("names must be an array");
    for (const auto& v : arr) {
      if (!v.is_string()) throw InputError("names must be strings");
      names.push_back(v.get<std::string>());
    }
  }

  if (!j.contains("addition")) throw InputError("missing field \"addition\"");
  const auto& add = j.at("addition");
  if (!add.is_array() || static_cast<int>(add.size()) != n)
    throw InputError("addition must have " + std::to_string(n) + " rows");
  std::vector<int> addition;
  for (int a = 0; a < n; ++a) {
    auto row = matrix_row(add.at(static_cast<std::size_t>(a)), n, "addition row " + std::to_string(a));
    addition.insert(addition.end(), row.begin(), row.end());
  }

  if (!j.contains("ternary") || !j.at("ternary").is_object())
    throw InputError("missing object field \"ternary\"");
  const auto& tern = j.at("ternary");
  if (static_cast<int>(tern.size()) != m * m)
    throw InputError("ternary must hold exactly one table per parameter pair");
  std::vector<int> ternary;
  for (int alpha = 0; alpha < m; ++alpha)
    for (int beta = 0; beta < m; ++beta) {
      const std::string key = pair_key(alpha, beta);
      if (!tern.contains(key)) throw InputError("ternary table \"" + key + "\" missing");
      const auto& cube = tern.at(key);
      if (!cube.is_array() || static_cast<int>(cube.size()) != n)
        throw InputError("ternary table \"" + key + "\" must have " + std::to_string(n) + " planes");
      for (int a = 0; a < n; ++a) {
        const auto& plane = cube.at(static_cast<std::size_t>(a));
        if (!plane.is_array() || static_cast<int>(plane.size()) != n)
          throw InputError("ternary table \"" + key + "\" plane " + std::to_string(a) + " malformed");
        for (int b = 0; b < n; ++b) {
          auto row = matrix_row(plane.at(static_cast<std::size_t>(b)), n,
                                "ternary \"" + key + "\"[" + std::to_string(a) + "][" + std::to_string(b) + "]");
          ternary.insert(ternary.end(), row.begin(), row.end());
        }
      }
    }
  return GammaStructure(n, m, std::move(addition), std::move(ternary), std::move(names));
}

json structure_to_json(const GammaStructure& s) {
  const int n = s.order();
  const int m = s.gamma_size();
  json j = json::object();
  j["order"] = n;
  j["gamma"] = m;
  j["names"] = s.names();
  json add = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) row.push_back(s.add(a, b));
    add.push_back(row);
  }
  j["addition"] = add;
  json tern = json::object();
  for (int alpha = 0; alpha < m; ++alpha)
    for (int beta = 0; beta < m; ++beta) {
      json cube = json::array();
      for (int a = 0; a < n; ++a) {
        json plane = json::array();
        for (int b = 0; b < n; ++b) {
          json row = json::array();
          for (int c = 0; c < n; ++c) row.push_back(s.mul(a, alpha, b, beta, c));
          plane.push_back(row);
        }
        cube.push_back(plane);
      }
      tern[pair_key(alpha, beta)] = cube;
    }
  j["ternary"] = tern;
  return j;
}

GammaStructure parse_structure(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  return structure_from_json(j);
}

namespace {

void write_row(std::ostringstream& out, const std::vector<int>& row) {
  out << '[';
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? ", " : "") << row[i];
  out << ']';
}

}  // namespace

std::string serialize_structure(const GammaStructure& s) {
  const int n = s.order();
  const int m = s.gamma_size();
  std::ostringstream out;
  out << "{\n";
  out << "  \"order\": " << n << ",\n";
  out << "  \"gamma\": " << m << ",\n";
  out << "  \"names\": [";
  for (int i = 0; i < n; ++i) out << (i ? ", " : "") << json(s.element_name(i)).dump();
  out << "],\n";
  out << "  \"addition\": [\n";
  for (int a = 0; a < n; ++a) {
    std::vector<int> row;
    for (int b = 0; b < n; ++b) row.push_back(s.add(a, b));
    out << "    ";
    write_row(out, row);
    out << (a + 1 < n ? ",\n" : "\n");
  }
  out << "  ],\n";
  out << "  \"ternary\": {\n";
  for (int alpha = 0; alpha < m; ++alpha)
    for (int beta = 0; beta < m; ++beta) {
      out << "    \"" << pair_key(alpha, beta) << "\": [\n";
      for (int a = 0; a < n; ++a) {
        out << "      [";
        for (int b = 0; b < n; ++b) {
          std::vector<int> row;
          for (int c = 0; c < n; ++c) row.push_back(s.mul(a, alpha, b, beta, c));
          if (b) out << ", ";
          write_row(out, row);
        }
        out << (a + 1 < n ? "],\n" : "]\n");
      }
      const bool last = alpha == m - 1 && beta == m - 1;
      out << (last ? "    ]\n" : "    ],\n");
    }
  out << "  }\n}\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

GammaStructure load_structure(const std::filesystem::path& path) {
  return parse_structure(read_text_file(path));
}

void save_structure(const GammaStructure& s, const std::filesystem::path& path) {
  write_text_file(path, serialize_structure(s));
}

}  // namespace tgs
