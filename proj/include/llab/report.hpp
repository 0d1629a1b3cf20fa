#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace llab {

/// Outcome of one identity or inequality check.
struct VerificationReport {
  std::string check_id;
  std::vector<std::pair<std::string, std::int64_t>> inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
  double tolerance = 0.0;
  std::chrono::duration<double> elapsed{};
  std::string detail;

  std::int64_t input(const std::string& key) const;
};

using Field = std::variant<std::int64_t, double, std::string, bool>;

/// One output record; field order is the column order.
struct Row {
  std::vector<std::pair<std::string, Field>> fields;

  Row& add(std::string key, Field value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

enum class Format { csv, json };

/// Report columns for check records: check_id,N,inputs,lhs,rhs,pass,tolerance.
Row report_row(const VerificationReport& r, std::uint64_t N, bool with_elapsed);
std::vector<std::string> report_header();

/// Floats use 17 significant digits.
std::string format_field(const Field& f);

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<Row>& rows);
void write_json(std::ostream& os, const std::vector<Row>& rows);

/// Writes to path; throws std::runtime_error when the file cannot be written.
void emit(const std::filesystem::path& path, Format format, const std::vector<std::string>& header,
          const std::vector<Row>& rows);

}  // namespace llab
