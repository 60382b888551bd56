#pragma once

#include <stdexcept>
#include <string>

namespace sgpd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DisconnectedError : Error {
  using Error::Error;
};

struct NotStronglyConnectedError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct AsymmetricError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Thrown when fewer candidate edges exist than additions requested.
struct AddsExhaustedError : Error {
  int added;
  AddsExhaustedError(const std::string& msg, int added_count)
      : Error(msg), added(added_count) {}
};

}  // namespace sgpd
