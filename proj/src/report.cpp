#include "llab/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace llab {

std::int64_t VerificationReport::input(const std::string& key) const {
  for (const auto& [k, v] : inputs)
    if (k == key) return v;
  throw std::out_of_range("VerificationReport: no input named " + key);
}

std::vector<std::string> report_header() {
  return {"check_id", "N", "inputs", "lhs", "rhs", "pass", "tolerance"};
}

Row report_row(const VerificationReport& r, std::uint64_t N, bool with_elapsed) {
  std::string inputs;
  for (const auto& [k, v] : r.inputs) {
    if (!inputs.empty()) inputs += ';';
    inputs += k + '=' + std::to_string(v);
  }
  Row row;
  row.add("check_id", r.check_id)
      .add("N", static_cast<std::int64_t>(N))
      .add("inputs", inputs)
      .add("lhs", r.lhs)
      .add("rhs", r.rhs)
      .add("pass", r.pass)
      .add("tolerance", r.tolerance);
  if (with_elapsed) {
    row.add("elapsed_s", r.elapsed.count());
    if (!r.detail.empty()) row.add("detail", r.detail);
  }
  return row;
}

std::string format_field(const Field& f) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.17g", v);
          return buf;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      f);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<Row>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const Row& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) os << ',';
      for (const auto& [k, v] : row.fields)
        if (k == header[i]) {
          os << csv_escape(format_field(v));
          break;
        }
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<Row>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Row& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : row.fields)
      std::visit([&](const auto& x) { obj[k] = x; }, v);
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

void emit(const std::filesystem::path& path, Format format, const std::vector<std::string>& header,
          const std::vector<Row>& rows) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open output file " + path.string());
  if (format == Format::csv)
    write_csv(os, header, rows);
  else
    write_json(os, rows);
  os.flush();
  if (!os) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace llab
