#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nwc/divisor.hpp"

namespace nwc::cli {

enum ExitCode : int {
  kOk = 0,
  kSuiteFailure = 1,
  kUsage = 2,
  kBoxTooSmall = 3,
  kFieldCurveMismatch = 4,
  kOtherError = 5,
};

struct ReferenceRow {
  DivisorVector a;
  DivisorVector nu;
  DivisorVector limits;
  int delta;
  int goppa;
};

struct Preset {
  std::string name;
  int q;
  std::vector<ReferenceRow> rows;
};

/// Built-in table presets "t1" (q = 3) and "t2" (q = 4) with the published
/// reference values used for discrepancy notes.
const Preset& preset(const std::string& name);

/// Runs one command line. Rows go to out (or the --out file), notes and
/// errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nwc::cli
