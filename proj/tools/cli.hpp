#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "hecke/coeff_ring.hpp"
#include "hecke/root_data.hpp"

namespace hecke::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, invalid_input = 2, resource_guard = 3 };

/// Runs one command line (without the program name). Reports go to out,
/// structured errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "formal", "rat:v=<q>" or "ell=<p>,v=<r>[,q=<s>]"
ScalarDomain parse_field(const std::string& text);

/// Renders sum_i coeffs[i] X^{d-i} with coeffs[i] = sum_lambda c_lambda sym(lambda).
std::string render_polynomial(const std::vector<std::map<Coweight, Laurent>>& coeffs, const std::string& sym);

/// Per-trial generator; the stream depends only on (seed, trial).
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);
  /// Uniform in [0, n), by rejection so the stream is platform independent.
  std::uint64_t below(std::uint64_t n);
  long range(long lo, long hi);

 private:
  std::mt19937_64 gen_;
};

}  // namespace hecke::cli
