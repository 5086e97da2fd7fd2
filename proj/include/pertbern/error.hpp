#pragma once

#include <stdexcept>

namespace pertbern {

/// Raised for arguments outside an operation's domain (n too small, delta out
/// of range, missing derivative, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for inconsistent configuration: a missing scheme for an M1 operator,
/// a quadrature rule too weak for the basis degree, an unparsable flag.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pertbern
