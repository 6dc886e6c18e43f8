#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "rotform/geometry.hpp"

namespace rotform::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailure = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitOracleContract = 3;

struct RecoverOptions {
  std::string form_path;
  bool random = false;
  std::uint64_t seed = 0;
  double max_condition = 1e3;
  std::string unit = "1,0,0";
  double tol = kDefaultTol;
};

struct VerifyOptions {
  std::string suite = "all";
  int trials = 1000;
  std::uint64_t seed = 1;
  std::string form_path;
  bool random = false;
  double max_condition = 1e3;
  std::string unit = "1,0,0";
};

struct TransportOptions {
  std::string form_path;
  std::string from;  // "x,y,z;x,y,z"
  std::string to;
};

struct PythagorasOptions {
  std::string form_path;
  std::string unit = "1,0,0";
  std::string v;
  std::string w;
};

/// Prints the recovered form (normalized so the unit has squared length 1)
/// as a form file on out.
int cmd_recover(const RecoverOptions& opts, std::ostream& out, std::ostream& err);

/// Runs the selected verification suites, one JSON report line each.
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

/// Prints the transport rotation, its determinant and the form-pullback
/// residual.
int cmd_transport(const TransportOptions& opts, std::ostream& out, std::ostream& err);

/// Prints the side lengths a, b, c of the right triangle spanned by v, w and
/// the residual a^2 + b^2 - c^2.
int cmd_pythagoras(const PythagorasOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace rotform::cli
