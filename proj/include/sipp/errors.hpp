#pragma once

#include <stdexcept>

namespace sipp {

// Error taxonomy shared across the library. The CLI maps any of these to
// exit code 2; verdict failures are reported through reports, not thrown.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };     // bad argument value
struct RangeError : Error { using Error::Error; };      // outside sieved/tabulated range
struct ResourceError : Error { using Error::Error; };   // above memory budget
struct HorizonError : Error { using Error::Error; };    // query outside generated window
struct BudgetError : Error { using Error::Error; };     // exact-computation size cap
struct NumericError : Error { using Error::Error; };    // iteration failed to converge
struct ConfigError : Error { using Error::Error; };     // bad config file / CLI args
struct IoError : Error { using Error::Error; };

}  // namespace sipp
