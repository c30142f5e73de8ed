#pragma once

#include <stdexcept>
#include <string>

namespace tamelat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class RankError : public Error {
public:
    using Error::Error;
};

class NotPositiveDefiniteError : public Error {
public:
    using Error::Error;
};

/// A configured limit (dimension cap, box ceiling) was exceeded.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The enumeration node budget ran out before the search was exhaustive.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// Inputs violate the documented preconditions of an operation.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Phi_(r,s) is not injective (m = 0).
class DegenerateMapError : public Error {
public:
    using Error::Error;
};

/// A closed-form route does not apply to the given parameters.
class NotApplicableError : public Error {
public:
    using Error::Error;
};

/// A proven identity failed to hold. Always an implementation bug.
class TheoremFalsifiedError : public Error {
public:
    using Error::Error;
};

class OracleCeilingError : public Error {
public:
    using Error::Error;
};

class OracleInconsistencyError : public Error {
public:
    using Error::Error;
};

class NoWitnessError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace tamelat
