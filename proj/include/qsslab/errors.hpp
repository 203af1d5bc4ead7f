#pragma once

#include <stdexcept>
#include <string>

namespace qsslab {

/// Invalid input: out-of-range indices, mismatched dimensions, unnormalized
/// states, non-Hermitian matrices.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Reconstruction was requested from a share set that carries no information
/// about the secret.
class UnqualifiedError : public DomainError {
 public:
  explicit UnqualifiedError(const std::string& what) : DomainError(what) {}
};

/// A subset was neither perfectly distinguishing nor perfectly hiding. The
/// scheme is perfect, so this always indicates a numerical or logic bug.
class IndeterminateError : public std::logic_error {
 public:
  explicit IndeterminateError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qsslab
