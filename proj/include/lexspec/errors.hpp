#ifndef LEXSPEC_ERRORS_HPP
#define LEXSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lexspec {

/** Base class for all library errors. */
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Two values from incompatible spaces (different m, different grids, ...). */
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/** A group element fell outside the interval [0, (k,0)]. */
class OutOfIntervalError : public Error {
public:
  explicit OutOfIntervalError(const std::string& what) : Error(what) {}
};

/** Partial effect-algebra operation not defined for the operands. */
class UndefinedOperationError : public Error {
public:
  explicit UndefinedOperationError(const std::string& what) : Error(what) {}
};

/** Decorated symbol that does not exist (-inf^-, inf^+) or misuse of one. */
class UndefinedSymbolError : public Error {
public:
  explicit UndefinedSymbolError(const std::string& what) : Error(what) {}
};

/** Malformed file, number, or region expression. */
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/** Operation applied to an input that violates its stated preconditions. */
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

} // namespace lexspec

#endif
