#pragma once

#include <stdexcept>
#include <string>

namespace pathhom {

/// Arguments outside the range where an operation is defined or proven.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Brute-force request above its configured enumeration limit.
class SizeError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// A formula produced a value it can never legitimately produce.
class InconsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace pathhom
