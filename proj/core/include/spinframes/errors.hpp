#ifndef SPINFRAMES_ERRORS_HPP
#define SPINFRAMES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinframes {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// spinor algebra
class ZeroSpinorError : public Error {
 public:
  using Error::Error;
};
class ZeroTriadError : public Error {
 public:
  using Error::Error;
};
class NotOrthonormalError : public Error {
 public:
  using Error::Error;
};

// frame geometry
class CurvatureVanishesError : public Error {
 public:
  using Error::Error;
};
class OffSurfaceError : public Error {
 public:
  using Error::Error;
};
class DegenerateNormalError : public Error {
 public:
  using Error::Error;
};
class TangentMismatchError : public Error {
 public:
  using Error::Error;
};

// catalog
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};
class VanishingSpeedError : public Error {
 public:
  using Error::Error;
};

// evolution
class BadGridError : public Error {
 public:
  using Error::Error;
};
class NonFiniteStateError : public Error {
 public:
  using Error::Error;
};

// verification / configuration
class ScenarioInvalidError : public Error {
 public:
  using Error::Error;
};
class ConfigParseError : public Error {
 public:
  using Error::Error;
};
class ConfigSchemaError : public Error {
 public:
  ConfigSchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Violation of an internal algebraic assertion (e.g. a quantity that must be
/// real up to rounding carries a large imaginary residue).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinframes

#endif
