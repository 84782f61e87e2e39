#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spv {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument lies outside an operation's domain (e.g. the divergent n = 1
/// integral, a quadrature point outside (0,1)).
struct DomainError : Error {
  using Error::Error;
};

/// 0 raised to a negative power.
struct ZeroToNegativePowerError : DomainError {
  ZeroToNegativePowerError() : DomainError("zero raised to a negative power") {}
};

/// Some denominator f*k + g vanishes on the summation range. Carries every
/// offending index, not just the first.
struct PoleError : Error {
  std::vector<long long> poles;

  explicit PoleError(std::vector<long long> ks)
      : Error(describe(ks)), poles(std::move(ks)) {}

private:
  static std::string describe(const std::vector<long long>& ks) {
    std::string msg = "denominator vanishes at k =";
    for (auto k : ks) msg += " " + std::to_string(k);
    return msg;
  }
};

/// A double-precision result exceeds the representable range.
struct OverflowError : Error {
  using Error::Error;
};

/// File could not be read.
struct IoError : Error {
  using Error::Error;
};

} // namespace spv
