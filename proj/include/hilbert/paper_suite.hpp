#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbert/json_io.hpp"

/// End-to-end reproduction of the worked examples, one row per acceptance
/// criterion. Expected printed values come from a golden JSON document; the
/// derived values are recomputed from independent oracles.
namespace hilbert::paper {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s);

struct Row {
  int id = 0;
  std::string title;
  Status status = Status::Fail;
  /// Largest truncation order the row works at.
  std::size_t required_order = 0;
  std::string detail;
};

/// The golden document compiled into the library.
const io::json& embedded_golden();

/// Parses a golden file; Validation error if it is not JSON or lacks a row object.
io::json load_golden(const std::string& path);

/// Runs every row. Rows needing more than `order_cap` are Skipped.
std::vector<Row> run_suite(const io::json& golden, std::optional<std::size_t> order_cap = std::nullopt);

/// "PASS  #1  Catalan ... : detail"
std::string format_row(const Row& row);

/// Skipped rows do not count as failures.
bool any_failed(const std::vector<Row>& rows);

}  // namespace hilbert::paper
