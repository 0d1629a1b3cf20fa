#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "llab/report.hpp"

using namespace llab;

TEST_CASE("float formatting keeps 17 significant digits") {
  CHECK(format_field(0.1) == "0.10000000000000001");
  CHECK(format_field(std::int64_t{-7}) == "-7");
  CHECK(format_field(true) == "true");
  CHECK(format_field(std::string("x")) == "x");
  const double v = 1.0 / 3.0;
  CHECK(std::stod(format_field(v)) == v);
}

TEST_CASE("csv layout") {
  std::ostringstream os;
  Row r;
  r.add("b", std::int64_t{2}).add("a", std::string("p,q")).add("c", 1.5);
  write_csv(os, {"a", "b", "missing", "c"}, {r});
  CHECK(os.str() == "a,b,missing,c\n\"p,q\",2,,1.5\n");
}

TEST_CASE("verification report round-trips through JSON") {
  VerificationReport rep;
  rep.check_id = "dilation_defect";
  rep.inputs = {{"d", 2}, {"card", 4}};
  rep.lhs = 16.000000000000004;
  rep.rhs = 16;
  rep.pass = true;
  rep.tolerance = 1.1e-5;
  rep.detail = "note";
  CHECK(rep.input("d") == 2);
  CHECK_THROWS_AS(rep.input("zzz"), std::out_of_range);

  std::ostringstream os;
  write_json(os, {report_row(rep, 11, true)});
  const auto j = nlohmann::json::parse(os.str());
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["check_id"] == "dilation_defect");
  CHECK(j[0]["N"] == 11);
  CHECK(j[0]["inputs"] == "d=2;card=4");
  CHECK(j[0]["lhs"].get<double>() == rep.lhs);
  CHECK(j[0]["pass"] == true);
  CHECK(j[0]["detail"] == "note");
  CHECK(j[0].contains("elapsed_s"));

  const Row plain = report_row(rep, 11, false);
  for (const auto& [k, v] : plain.fields) CHECK(k != "elapsed_s");
}

TEST_CASE("emit reports unwritable paths") {
  CHECK_THROWS_AS(emit("/nonexistent_dir/x/out.csv", Format::csv, report_header(), {}),
                  std::runtime_error);
  const auto path = std::filesystem::temp_directory_path() / "llab_emit_test.json";
  emit(path, Format::json, {}, {});
  CHECK(std::filesystem::exists(path));
  std::filesystem::remove(path);
}
