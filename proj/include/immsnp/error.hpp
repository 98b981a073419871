#pragma once

#include <stdexcept>
#include <string>

namespace immsnp {

// Raised for precondition violations and malformed inputs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a configured enumeration bound would be exceeded.
class ResourceBoundError : public Error {
 public:
  ResourceBoundError(const std::string& bound, long long limit)
      : Error("resource bound exceeded: " + bound + " > " + std::to_string(limit)),
        bound_(bound) {}
  const std::string& bound() const { return bound_; }

 private:
  std::string bound_;
};

}  // namespace immsnp
