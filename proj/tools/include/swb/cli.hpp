#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace swb::cli {

enum class Format { Json, Csv, Human };

/// Exit statuses of run().
inline constexpr int kPass = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kUsage = 64;

struct RunConfig {
  std::string subcommand;
  std::string group = "GL";   ///< GL, SL, A1, A1xA1, A2, B2, G2, flag; "SL2" style also accepted
  int n = 2;
  int d = 1;
  int maxdeg = 8;
  int q_order = 6;
  int y_degree = 0;
  std::optional<int> margin;  ///< default 2d
  int max_margin = 0;         ///< default margin + 4
  int window_lo = 0;
  int window_hi = 1;
  std::optional<int> ywindow_lo, ywindow_hi;
  std::string ring = "auto";  ///< poly | laurent | ktheory
  std::string klass;          ///< gkm-verify: b<k>, bprime<k>, a0
  std::string input;          ///< gkm-verify: JSON tuple file
  std::string curve = "3,3";
  std::string link = "T33";
  std::string graph_format = "json";  ///< gkm-graph: json | dot
  Format format = Format::Json;
  std::string output;  ///< empty: the stream passed to run()
};

/// Executes one subcommand and writes its report. Never throws: malformed
/// configurations produce a usage message on `err` and kUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace swb::cli
