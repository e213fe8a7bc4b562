#pragma once

#include <stdexcept>
#include <string>

namespace palcrit {

/// Caller violated a precondition (bad index, bad letter, odd/even mismatch, ...).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size or work cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A constructed object failed its own post-check (e.g. a corrupted catalog image).
class VerificationFailure : public std::logic_error {
 public:
  explicit VerificationFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace palcrit
