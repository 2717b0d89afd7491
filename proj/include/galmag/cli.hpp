#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galmag/magnetic.hpp"

namespace galmag::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInvalidInput = 2,
};

enum class Mode { Magnetic, NMagnetic };
enum class Format { Csv, Json };

struct RunSpec {
  Mode mode = Mode::Magnetic;
  KillingField field;
  NMagneticIC ic;  // T0/U0 unused in magnetic mode
  double s_start = 0.0;
  double s_end = 1.0;
  std::optional<double> sample_step;  // from --range a:b:step
  std::size_t samples = 1001;         // used when no step is given
  Format format = Format::Csv;
  std::string output = "-";
};

// Locale-independent parsers. All throw galmag::Error(InvalidConfig).

/// Decimal literal, optionally followed by "pi" ("2pi", "-0.5pi", "pi").
double parse_real(std::string_view text);
/// "v1,v2,v3"
KillingField parse_field(std::string_view text);
/// "key=value,..." over y0, Y0, T0, z0, Z0, U0. Missing keys stay 0.
NMagneticIC parse_ic(std::string_view text, Mode mode);
/// "a:b" or "a:b:step"
void parse_range(std::string_view text, RunSpec& spec);

/// Shortest 17-significant-digit rendering used for all exported numbers.
std::string format_real(double v);

/// Parameter grid requested by the run: stepped if --range had a step, else --samples points.
std::vector<double> sample_grid(const RunSpec& spec);

/// Runs the command line (argv[0] is the program name). Data goes to out,
/// diagnostics and errors to err. Returns one of ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace galmag::cli
