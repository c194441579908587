#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fracvar/solver.hpp"

namespace fracvar {

/// Tagged parameters of a catalog nonlinearity, as written in a config file.
struct NonlinearitySpec {
  std::string kind = "power_sum";
  double r = 1.5;
  double s = 3.0;
  double q = 4.0;
  std::vector<double> xs;
  std::vector<double> ys;

  Nonlinearity build() const;
};

/// Single source of truth for a run, loaded from a JSON config:
///   {"alpha": 0.75, "T": 1, "n": 1024, "k_max": 64,
///    "nonlinearity": {"kind": "power_sum", "r": 1.5, "s": 3},
///    "solver": {"grad_tol": 1e-8, ...}}
struct ProblemSpec {
  double alpha = 0.75;
  double T = 1.0;
  int n = 1024;
  int k_max = 64;
  NonlinearitySpec nonlinearity;
  SolverConfig solver;

  SpaceConfig space_config() const { return {alpha, T, n, k_max}; }
  /// Throws DomainError / ValidationError on any out-of-range field.
  void validate() const;
  Problem build() const;

  static ProblemSpec from_json_text(const std::string& text);
  static ProblemSpec load(const std::filesystem::path& path);
  std::string to_json_text() const;
};

}  // namespace fracvar
