#ifndef PALEOREC_ERRORS_HPP
#define PALEOREC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace paleorec {

// Exit-code mapping in the CLI: config_error -> 2, data_error -> 3,
// numeric_error (and derived) -> 4.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Optimizer gave up; carries the best iterate seen so the caller can
/// inspect how far it got.
struct estimation_error : numeric_error {
  explicit estimation_error(const std::string& msg) : numeric_error(msg) {}
  estimation_error(const std::string& msg, std::vector<double> best)
      : numeric_error(msg), best_iterate(std::move(best)) {}
  std::vector<double> best_iterate;
};

struct calibration_error : numeric_error {
  using numeric_error::numeric_error;
};

}  // namespace paleorec

#endif
