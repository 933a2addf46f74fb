// Copyright 2026 The qanneal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qanneal/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "qanneal/errors.hpp"

namespace qanneal {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

double parse_double(std::string_view token, int line) {
  double value = 0.0;
  const char* begin = token.data();
  if (!token.empty() && token.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

SpinProblem parse_tabular(std::string_view text) {
  SpinProblem problem;
  std::vector<bool> field_seen;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view key = tokens.front();
    if (!have_header) {
      if (key != "n" || tokens.size() != 2) throw ParseError(line_no, "expected header 'n <N>'");
      problem.n = parse_int(tokens[1], line_no);
      if (problem.n <= 0) throw ParseError(line_no, "spin count must be positive");
      problem.h_z.assign(problem.n, 0.0);
      field_seen.assign(problem.n, false);
      have_header = true;
    } else if (key == "h") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'h <i> <value>'");
      const int i = parse_int(tokens[1], line_no);
      const double v = parse_double(tokens[2], line_no);
      if (i < 1 || i > problem.n) {
        throw ValidationError("line " + std::to_string(line_no) + ": field index " +
                              std::to_string(i) + " out of range");
      }
      if (field_seen[i - 1]) {
        throw ValidationError("line " + std::to_string(line_no) + ": duplicate field for spin " +
                              std::to_string(i));
      }
      field_seen[i - 1] = true;
      problem.h_z[i - 1] = v;
    } else if (key == "J") {
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'J <i> <j> <value>'");
      int i = parse_int(tokens[1], line_no);
      int j = parse_int(tokens[2], line_no);
      const double v = parse_double(tokens[3], line_no);
      if (i < 1 || i > problem.n || j < 1 || j > problem.n) {
        throw ValidationError("line " + std::to_string(line_no) + ": coupling index out of range");
      }
      if (i == j) {
        throw ValidationError("line " + std::to_string(line_no) + ": coupling of spin " +
                              std::to_string(i) + " with itself");
      }
      if (i > j) std::swap(i, j);
      problem.z_couplings.push_back({i, j, v});
    } else if (key == "n") {
      throw ParseError(line_no, "repeated header");
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(key) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header 'n <N>'");
  problem.validate();
  return problem;
}

std::string serialize_tabular(const SpinProblem& problem) {
  problem.validate();
  if (problem.y_coupling_strength != 0.0) {
    throw ValidationError("tabular format cannot carry y-couplings; use the structured format");
  }
  std::ostringstream out;
  out << "n " << problem.n << '\n';
  for (int i = 1; i <= problem.n; ++i) out << "h " << i << ' ' << format_number(problem.h_z[i - 1]) << '\n';
  for (const auto& c : problem.z_couplings) {
    out << "J " << c.i << ' ' << c.j << ' ' << format_number(c.value) << '\n';
  }
  return out.str();
}

SpinProblem parse_structured(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; convert it to a line number.
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
    throw ParseError(line, e.what());
  }
  SpinProblem problem;
  try {
    problem.n = doc.at("n").get<int>();
    problem.h_z = doc.at("h_z").get<std::vector<double>>();
    for (const auto& entry : doc.at("z_couplings")) {
      if (!entry.is_array() || entry.size() != 3) {
        throw ValidationError("each coupling must be a [i, j, value] triple");
      }
      int i = entry[0].get<int>();
      int j = entry[1].get<int>();
      if (i == j) throw ValidationError("coupling of spin " + std::to_string(i) + " with itself");
      if (i > j) std::swap(i, j);
      problem.z_couplings.push_back({i, j, entry[2].get<double>()});
    }
    problem.y_coupling_strength = doc.value("y_coupling_strength", 0.0);
    problem.label = doc.value("label", std::string{});
    if (doc.contains("seed") && !doc["seed"].is_null()) problem.seed = doc["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("structured instance: ") + e.what());
  }
  problem.validate();
  return problem;
}

std::string serialize_structured(const SpinProblem& problem) {
  problem.validate();
  nlohmann::ordered_json doc;
  doc["n"] = problem.n;
  doc["h_z"] = problem.h_z;
  auto couplings = nlohmann::ordered_json::array();
  for (const auto& c : problem.z_couplings) couplings.push_back({c.i, c.j, c.value});
  doc["z_couplings"] = std::move(couplings);
  doc["y_coupling_strength"] = problem.y_coupling_strength;
  doc["label"] = problem.label;
  if (problem.seed) doc["seed"] = *problem.seed;
  return doc.dump(2) + "\n";
}

InstanceFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? InstanceFormat::Structured : InstanceFormat::Tabular;
  }
  return InstanceFormat::Tabular;
}

SpinProblem parse_instance(std::string_view text) {
  return detect_format(text) == InstanceFormat::Structured ? parse_structured(text)
                                                           : parse_tabular(text);
}

std::string serialize_instance(const SpinProblem& problem, InstanceFormat format) {
  return format == InstanceFormat::Structured ? serialize_structured(problem)
                                              : serialize_tabular(problem);
}

SpinProblem load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open instance file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  SpinProblem problem = parse_instance(buffer.str());
  if (problem.label.empty()) problem.label = path.stem().string();
  return problem;
}

void save_instance(const std::filesystem::path& path, const SpinProblem& problem,
                   InstanceFormat format) {
  const std::string text = serialize_instance(problem, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write instance file " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace qanneal
