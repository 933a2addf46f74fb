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

#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "qanneal/errors.hpp"
#include "qanneal/fixtures.hpp"
#include "qanneal/instance_io.hpp"
#include "qanneal/problem.hpp"

using namespace qanneal;

TEST(Tabular, Fixture950Values) {
  const SpinProblem p = parse_tabular(fixture_text(950));
  EXPECT_EQ(p.h_z[1], 4.0);
  ASSERT_FALSE(p.z_couplings.empty());
  EXPECT_EQ(p.z_couplings.front(), (Coupling{1, 11, -1.0}));
}

TEST(Tabular, RoundTripFixtures) {
  for (int label : kFixtureLabels) {
    const std::string text(fixture_text(label));
    EXPECT_EQ(serialize_tabular(parse_tabular(text)), text) << label;
  }
}

TEST(Tabular, NormalizesInput) {
  const std::string messy =
      "# comment\n"
      "n   3\n"
      "h 2 0.5\n"
      "\n"
      "J 3 1 -2\n"
      "h 1 -0\n";
  const SpinProblem p = parse_tabular(messy);
  EXPECT_EQ(p.h_z, (std::vector<double>{0.0, 0.5, 0.0}));
  EXPECT_EQ(p.z_couplings.front(), (Coupling{1, 3, -2.0}));
  const std::string norm = serialize_tabular(p);
  EXPECT_EQ(norm, "n 3\nh 1 0\nh 2 0.5\nh 3 0\nJ 1 3 -2\n");
  EXPECT_EQ(serialize_tabular(parse_tabular(norm)), norm);
}

TEST(Tabular, SelfCouplingRejected) {
  EXPECT_THROW(parse_tabular("n 3\nJ 2 2 1\n"), ValidationError);
}

TEST(Tabular, OutOfRangeRejected) {
  EXPECT_THROW(parse_tabular("n 3\nh 4 1\n"), ValidationError);
  EXPECT_THROW(parse_tabular("n 3\nJ 1 5 1\n"), ValidationError);
}

TEST(Tabular, MalformedLineReportsLine) {
  try {
    parse_tabular("n 3\nh 1 1\nh 2 x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    parse_tabular("n 3\n\nbogus 1 2\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_tabular("h 1 1\n"), ParseError);
  EXPECT_THROW(parse_tabular(""), ParseError);
}

TEST(Tabular, DuplicatePairRejected) {
  EXPECT_THROW(parse_tabular("n 3\nJ 1 2 1\nJ 2 1 1\n"), ValidationError);
}

TEST(Tabular, RefusesYCouplings) {
  SpinProblem p = fixture_problem(709).with_y_couplings(0.5);
  EXPECT_THROW(serialize_tabular(p), ValidationError);
}

TEST(Structured, RoundTripWithMetadata) {
  SpinProblem p = fixture_problem(103).with_y_couplings(0.5);
  p.label = "p103";
  p.seed = 987654321987ull;
  const std::string text = serialize_structured(p);
  const SpinProblem q = parse_structured(text);
  EXPECT_EQ(q.n, p.n);
  EXPECT_EQ(q.h_z, p.h_z);
  EXPECT_EQ(q.z_couplings, p.z_couplings);
  EXPECT_EQ(q.y_coupling_strength, 0.5);
  EXPECT_EQ(q.label, "p103");
  EXPECT_EQ(q.seed, p.seed);
  EXPECT_EQ(serialize_structured(q), text);
}

TEST(Structured, Errors) {
  EXPECT_THROW(parse_structured(R"({"n": 2, "h_z": [0, 0], "z_couplings": [[1, 1, 1]]})"),
               ValidationError);
  EXPECT_THROW(parse_structured(R"({"n": 2, "h_z": [0], "z_couplings": []})"), ValidationError);
  try {
    parse_structured("{\n\"n\": 2,\n\"h_z\": [0, 0\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GE(e.line(), 3);
  }
}

TEST(Formats, DetectAndFiles) {
  const SpinProblem p = fixture_problem(99);
  EXPECT_EQ(detect_format(serialize_structured(p)), InstanceFormat::Structured);
  EXPECT_EQ(detect_format(serialize_tabular(p)), InstanceFormat::Tabular);
  const auto dir = std::filesystem::temp_directory_path() / "qanneal_io_test";
  std::filesystem::create_directories(dir);
  for (auto fmt : {InstanceFormat::Tabular, InstanceFormat::Structured}) {
    const auto path = dir / (fmt == InstanceFormat::Tabular ? "p99.txt" : "p99.json");
    save_instance(path, p, fmt);
    const SpinProblem q = load_instance(path);
    EXPECT_EQ(q.h_z, p.h_z);
    EXPECT_EQ(q.z_couplings, p.z_couplings);
  }
  EXPECT_THROW(load_instance(dir / "missing.txt"), ValidationError);
  std::filesystem::remove_all(dir);
}

TEST(Formats, NumberFormatting) {
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-4.0), "-4");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}
