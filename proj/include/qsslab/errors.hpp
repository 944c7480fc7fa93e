#pragma once

#include <stdexcept>
#include <string>

namespace qss {

// Malformed or inconsistent user input (bad labels, dimension mismatch,
// invariant violations). CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Problem size exceeds a configured guard (tensor dimension cap,
// subset-enumeration player cap).
class size_error : public input_error {
public:
  explicit size_error(const std::string& what) : input_error(what) {}
};

// Encoding matrix fails the isometry requirement.
class encoding_error : public input_error {
public:
  explicit encoding_error(const std::string& what) : input_error(what) {}
};

// Internal numeric failure (eigensolver non-convergence, fidelity below
// certification threshold). CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Recovery synthesis precondition failure: the requested coalition cannot
// recover the secret. CLI maps this to exit code 1.
class recovery_error : public std::runtime_error {
public:
  explicit recovery_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qss
