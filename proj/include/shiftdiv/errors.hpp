#pragma once

#include <stdexcept>
#include <string>

namespace shiftdiv {

/// Input outside the domain of an operation (n < 2, composite where a prime is required, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A value would leave the 64-bit range. Never wrapped.
class arithmetic_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Allocation or size-limit failure (e.g. an absurd sieve limit).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An orbit exceeded its step budget without closing a cycle.
class nontermination_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computed object failed re-validation (cycle not closed, bound violated, ...).
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace shiftdiv
