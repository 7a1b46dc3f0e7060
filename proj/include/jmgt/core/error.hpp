#pragma once

#include <stdexcept>
#include <string>

namespace jmgt {

/// Failure taxonomy shared by all modules; the CLI maps kinds to exit codes.
enum class ErrorKind {
    argument,    // bad parameter / unsupported kind
    shape,       // field/grid dimension mismatch
    geometry,    // invalid domain geometry (q inside Omega, missing normal, ...)
    config,      // experiment-config parse/validation failure
    resolution,  // grid does not resolve the requested frequency
    hypothesis,  // mode hypothesis violated (e.g. B_T support window)
    solver,      // linear solver failed
    divergence,  // NaN/Inf detected or iteration did not converge
    data,        // missing/insufficient data
    range,       // numeric over/underflow in quadrature
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace jmgt
