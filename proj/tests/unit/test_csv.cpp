// Copyright 2026 The acspin Authors
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


#include <doctest.h>

#include <cmath>
#include <limits>

#include "acspin/csv.hpp"
#include "acspin/error.hpp"

using namespace acspin;

TEST_CASE("numbers round-trip") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::stod(format_number(v)) == v);
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(42LL) == "42");
}

TEST_CASE("write and parse") {
  CsvTable t;
  t.schema = "acspin.test/1";
  t.set("seed", "7");
  t.set("grid", "4x4");
  t.set("seed", "8");
  t.columns = {"a", "b"};
  t.add_row({"1", "x"});
  t.add_row({"2", ""});
  const std::string text = write_csv(t);
  CHECK(text == "# schema: acspin.test/1\n# seed: 8\n# grid: 4x4\na,b\n1,x\n2,\n");
  const CsvTable back = parse_csv(text);
  CHECK(back.schema == t.schema);
  CHECK(back.get("seed") == "8");
  CHECK(back.get("missing").empty());
  CHECK(back.column("b") == 1);
  CHECK(back.column("c") == -1);
  CHECK(back.rows == t.rows);
}

TEST_CASE("rejects malformed tables") {
  CsvTable t;
  t.columns = {"a"};
  CHECK_THROWS_AS(t.add_row({"1", "2"}), Error);
  t.add_row({"1,2"});
  CHECK_THROWS_AS(write_csv(t), Error);
  CHECK_THROWS_AS(t.set("a:b", "1"), Error);
  CHECK_THROWS_AS(parse_csv("# schema: x\n"), Error);
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), Error);
  CHECK_THROWS_AS(read_file("/nonexistent/file.csv"), Error);
}
