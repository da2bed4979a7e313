#ifndef FALVA_ERROR_HPP
#define FALVA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace falva {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A symbol required by eval() is missing from the environment.
class UnboundSymbolError : public Error {
  public:
    using Error::Error;
};

// log of a non-positive value, division by zero, real power of a
// negative base, gamma of a non-positive argument, ...
class DomainError : public Error {
  public:
    using Error::Error;
};

// Differentiation reached a function tag the kernel does not know.
class UnsupportedFunctionError : public Error {
  public:
    using Error::Error;
};

// linear_coeffs_in was asked for coefficients of a symbol the
// expression is not affine in.
class NonlinearInSymbolError : public Error {
  public:
    using Error::Error;
};

// A sampler or integrator configuration is unusable (empty ranges,
// too many rejected samples, bad spans, ...).
class ConfigError : public Error {
  public:
    using Error::Error;
};

// A single sample point could not be evaluated.
class SampleRejectedError : public Error {
  public:
    using Error::Error;
};

// The gauge specification cannot be resolved to a rate expression.
class GaugeUnresolvableError : public Error {
  public:
    using Error::Error;
};

// Syntax error in expression or problem text. Position is 1-based.
class ParseError : public Error {
  public:
    ParseError(std::string message, int line, int column, std::string token)
        : Error(std::move(message)), line_(line), column_(column), token_(std::move(token)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& token() const { return token_; }

  private:
    int line_;
    int column_;
    std::string token_;
};

// An identifier that resolves to nothing in the parse context.
class UnknownIdentifierError : public ParseError {
  public:
    using ParseError::ParseError;
};

// A state symbol with derivative order above the context bound.
class OrderExceededError : public ParseError {
  public:
    using ParseError::ParseError;
};

// Problem document fails schema validation; path names the field.
class SchemaError : public Error {
  public:
    SchemaError(std::string path, std::string message)
        : Error(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

// The Euler-Lagrange residual is not affine in the top derivative.
class NonlinearInTopDerivativeError : public Error {
  public:
    using Error::Error;
};

// The leading-coefficient matrix is numerically singular at theta.
class SingularLeadingCoefficientError : public Error {
  public:
    SingularLeadingCoefficientError(std::string message, double theta)
        : Error(std::move(message)), theta_(theta) {}

    double theta() const { return theta_; }

  private:
    double theta_;
};

// Adaptive step fell below h_min.
class StepUnderflowError : public Error {
  public:
    using Error::Error;
};

class MaxStepsExceededError : public Error {
  public:
    using Error::Error;
};

} // namespace falva

#endif
