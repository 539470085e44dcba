#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace theta_lab::cli {

/// Value a computation is expected to reproduce, pinned as exact text.
struct PinnedConstant {
  std::string label;
  std::string paper_value;
  std::string location;
};

enum class RowStatus { kMatch, kMismatch };

struct ReportRow {
  std::string label;
  std::string computed;
  std::string paper_value;
  std::string location;
  RowStatus status = RowStatus::kMismatch;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// The pinned table, in report order. A build with THETA_LAB_CORRUPT_ROW defined
/// replaces that row's value with THETA_LAB_CORRUPT_VALUE (fault injection).
std::vector<PinnedConstant> pinned_constants();

/// Computes every row and compares it against `pinned` (matched by label).
std::vector<ReportRow> build_report(const std::vector<PinnedConstant>& pinned);
inline std::vector<ReportRow> build_report() { return build_report(pinned_constants()); }

bool all_match(const std::vector<ReportRow>& rows);

std::string render_text(const std::vector<ReportRow>& rows);
std::string render_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> parse_json(const std::string& text);

void to_json(nlohmann::json& j, const ReportRow& row);
void from_json(const nlohmann::json& j, ReportRow& row);

}  // namespace theta_lab::cli
