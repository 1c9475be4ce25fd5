#pragma once

#include <stdexcept>
#include <string>

namespace iwahori {

/// An argument lies outside the domain of an analytic function (exp, log, inverse).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A request exceeds what the working precision can certify.
class PrecisionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The parameter gate p - 1 > e*h (or a similar hypothesis) is violated.
class GateError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A group element is not in the subgroup an operation requires.
class MembershipError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace iwahori
