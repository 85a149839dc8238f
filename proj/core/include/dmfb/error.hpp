#pragma once

#include <stdexcept>
#include <string>

namespace dmfb {

// Bad scenario/lab configuration: unknown keys, grids too small, sites
// that do not fit. Maps to CLI exit code 3.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A chemical instruction was applied to reagents that do not match its
// expected pattern (e.g. Gibson on a droplet without Gibson-mix).
class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant: a referenced droplet vanished, a route
// double-reserved a cell, an unwanted collision occurred. Maps to CLI
// exit code 4.
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dmfb
