// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mmwloc {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

class InvalidGeometryError : public Error {
  public:
    using Error::Error;
};

/// A derived quantity (e.g. a TOA) left its admissible range.
class OutOfRangeError : public Error {
  public:
    using Error::Error;
};

class UnsupportedConfigError : public Error {
  public:
    using Error::Error;
};

/// Input matrix violates a required structure (block-Hankel, Hermitian, ...).
class StructureViolationError : public Error {
  public:
    using Error::Error;
};

class InvalidGeneratorError : public Error {
  public:
    using Error::Error;
};

class SolverError : public Error {
  public:
    using Error::Error;
};

class NoPathDetectedError : public Error {
  public:
    using Error::Error;
};

class DegenerateDecompositionError : public Error {
  public:
    using Error::Error;
};

class PairingFailureError : public Error {
  public:
    using Error::Error;
};

class CollinearityError : public Error {
  public:
    using Error::Error;
};

class NumericalDifferentiationError : public Error {
  public:
    using Error::Error;
};

}  // namespace mmwloc
