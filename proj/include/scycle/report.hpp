#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "scycle/instance.hpp"
#include "scycle/solver.hpp"

namespace scycle {

inline constexpr const char* kReportFormat = "scycle-report";
inline constexpr int kReportVersion = 1;

struct ReportOptions {
  bool trace = false;
  /// Omitted from the JSON when negative.
  double wall_ms = -1.0;
};

/// Machine-readable report. Keys appear in a fixed order and vertex lists are
/// canonical, so two runs on the same input differ only in "wall_ms".
std::string report_json(const Instance& inst, const SolveResult& result, const ReportOptions& opt = {});

/// Human-readable summary of the same content.
std::string report_text(const Instance& inst, const SolveResult& result);

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What `verify` needs back from a report. Vertex lists are kept raw so that
/// malformed content surfaces as a verification failure rather than a parse
/// failure.
struct ParsedReport {
  std::uint64_t fingerprint = 0;
  int k = 0;
  int ell = 0;
  bool packing = false;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> hitting_set;
};

/// Throws ReportError on malformed JSON or missing fields.
ParsedReport parse_report(const std::string& text);

std::string fingerprint_hex(std::uint64_t fp);

}  // namespace scycle
