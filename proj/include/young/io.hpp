#pragma once

#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "young/conjecture.hpp"
#include "young/matrix.hpp"
#include "young/verify.hpp"
#include "young/version.hpp"

namespace young {

using nlohmann::json;

inline json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      data.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

/// Parses {"rows": n, "cols": m, "data": [[re, im], ...]} row-major,
/// rejecting anything malformed with the offending field named.
inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix: expected a JSON object");
  for (const char* field : {"rows", "cols"}) {
    if (!j.contains(field) || !j[field].is_number_integer() || j[field].get<long>() < 1) {
      throw ParseError(std::string("matrix: field '") + field +
                       "' must be a positive integer");
    }
  }
  const int rows = j["rows"].get<int>();
  const int cols = j["cols"].get<int>();
  if (!j.contains("data") || !j["data"].is_array()) {
    throw ParseError("matrix: field 'data' must be an array");
  }
  const json& data = j["data"];
  const size_t expected = static_cast<size_t>(rows) * cols;
  if (data.size() != expected) {
    throw ParseError("matrix: field 'data' has length " + std::to_string(data.size()) +
                     ", expected rows*cols = " + std::to_string(expected));
  }
  std::vector<Complex> entries;
  entries.reserve(expected);
  for (size_t i = 0; i < data.size(); ++i) {
    const json& cell = data[i];
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
      throw ParseError("matrix: field 'data[" + std::to_string(i) +
                       "]' must be a [re, im] number pair");
    }
    const double re = cell[0].get<double>();
    const double im = cell[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw ParseError("matrix: field 'data[" + std::to_string(i) + "]' is not finite");
    }
    entries.emplace_back(re, im);
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

inline ComplexMatrix load_matrix(const std::string& path) {
  return matrix_from_json(load_json(path));
}

inline void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

inline void save_matrix(const std::string& path, const ComplexMatrix& m) {
  save_text(path, matrix_to_json(m).dump(2) + "\n");
}

/// Provenance block embedded in every report: replaying the same command
/// with the same parameters and seed reproduces the report byte-for-byte
/// except for the timestamp.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
  std::string timestamp;
};

inline std::string iso8601_now() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

inline RunManifest make_manifest(const std::string& command,
                                 std::map<std::string, std::string> parameters,
                                 std::uint64_t seed) {
  RunManifest m;
  m.command = command;
  m.parameters = std::move(parameters);
  m.seed = seed;
  m.timestamp = iso8601_now();
  return m;
}

inline json manifest_to_json(const RunManifest& m) {
  return json{{"command", m.command},
              {"parameters", m.parameters},
              {"seed", m.seed},
              {"toolVersion", m.tool_version},
              {"timestamp", m.timestamp}};
}

inline json equivalence_report_to_json(const EquivalenceReport& report,
                                       const RunManifest& manifest) {
  json cond3 = json::array();
  for (const NormEqualityVerdict& nv : report.cond3) {
    cond3.push_back(json{{"norm", nv.norm.name()},
                         {"strictlyIncreasing", nv.norm.strictly_increasing},
                         {"lhs", nv.lhs},
                         {"rhs", nv.rhs},
                         {"residual", std::abs(nv.lhs - nv.rhs)},
                         {"verdict", nv.verdict}});
  }
  return json{
      {"manifest", manifest_to_json(manifest)},
      {"cond1", {{"residual", report.cond1.residual}, {"scale", report.cond1.scale},
                 {"verdict", report.cond1.verdict}}},
      {"cond2", {{"residual", report.cond2.residual}, {"scale", report.cond2.scale},
                 {"verdict", report.cond2.verdict}, {"witness", matrix_to_json(report.witness)}}},
      {"cond3", {{"norms", std::move(cond3)}, {"applicable", report.cond3_applicable},
                 {"verdict", report.cond3_verdict}}},
      {"cond4", {{"gap", report.cond4.residual}, {"scale", report.cond4.scale},
                 {"verdict", report.cond4.verdict}}},
      {"spectra", {{"alpha", report.spectra.alpha}, {"beta", report.spectra.beta},
                   {"gamma", report.spectra.gamma}, {"delta", report.spectra.delta}}},
      {"overallConsistent", report.overall_consistent},
      {"notes", "cond2/cond3 are evaluated on the canonical polar witness; the "
                "universal quantification over all contraction pairs is not "
                "numerically decidable"}};
}

inline json search_result_to_json(const SearchResult& result, const RunManifest& manifest) {
  json out{{"manifest", manifest_to_json(manifest)},
           {"bestObjective", result.best_objective},
           {"trials", result.trials},
           {"seed", result.seed},
           {"candidates", result.candidates},
           {"witnessFound", result.has_witness}};
  if (result.has_witness) {
    out["witness"] = json{{"b", matrix_to_json(result.witness_b)},
                          {"z", matrix_to_json(result.witness_z)},
                          {"violation", result.witness_violation},
                          {"equalityResidual", result.witness_equality_residual}};
  }
  return out;
}

/// Minimal CSV writer; fields are quoted only when they need to be.
inline std::string to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      const bool quote = row[i].find_first_of(",\"\n") != std::string::npos;
      if (!quote) {
        out << row[i];
        continue;
      }
      out << '"';
      for (char c : row[i]) {
        if (c == '"') out << '"';
        out << c;
      }
      out << '"';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace young
