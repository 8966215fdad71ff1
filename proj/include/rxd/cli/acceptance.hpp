#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rxd::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  /// Worker threads for the sampling criteria; 0 reads RXDLAB_THREADS.
  unsigned threads = 0;
  /// Scratch directory for the reproducibility runs; empty picks a temp dir.
  std::string workdir;
  /// Include the 64x64 two-dimensional relaxation run.
  bool include_2d = true;
};

/// Runs every acceptance criterion in order. A criterion that throws is
/// reported as failed with the exception text.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {}, std::ostream* progress = nullptr);

/// One line per criterion: "PASS  3  name  (1.2 s)  detail".
void print_acceptance_table(std::ostream& out, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace rxd::cli
