#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tamehall {

/// Broad failure categories; the CLI maps each one to a process exit code.
enum class ErrorKind {
  InvalidInput,   // exit 3
  Infeasible,     // exit 2: an enumeration budget would be exceeded
  Verification,   // exit 4: a computed value failed an internal cross-check
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

class InfeasibleEnumeration : public Error {
 public:
  explicit InfeasibleEnumeration(const std::string& what) : Error(ErrorKind::Infeasible, what) {}
};

class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(const std::string& what) : Error(ErrorKind::Verification, what) {}
};

int exit_code(ErrorKind kind) noexcept;

/// Enumeration budgets shared by every exhaustive search in the library.
struct Limits {
  std::uint64_t hom_elements = 2'000'000;    // elements of Hom(M,N) walked by iso / mono searches
  std::uint64_t subspaces = 200'000'000;     // Gaussian-binomial guard for subspace enumeration
  std::uint64_t subreps = 50'000'000;        // product-of-Grassmannians guard for subrep enumeration
  int gr_max_length = 14;                    // largest module length accepted by GR searches
  int gr_max_q = 5;
};

/// Process-wide limits. Set once at startup (the CLI does this); reads are unsynchronized.
Limits& limits() noexcept;

}  // namespace tamehall
