// errors.hpp - exception hierarchy shared by the polardf library.
//
// Two families matter to callers (and to the CLI exit codes):
//   ConfigError / IoError     -> bad input from the user (files, fields, units)
//   NumericalError subclasses -> a computation has no admissible answer for
//                                the given data (degenerate signals, empty
//                                candidate sets, inconsistent scales)

#pragma once

#include <stdexcept>
#include <string>

namespace polardf {

/// Base class for every polardf exception.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or invariant-violating configuration (scenario files, CLI args).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Filesystem failure; the message carries the offending path.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

/// Base for data-dependent failures of the numerical methods.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(what) {}
};

/// Input carries no usable signal (e.g. zero-intensity wave, both arms dark).
class DegenerateInputError : public NumericalError {
public:
    explicit DegenerateInputError(const std::string& what) : NumericalError(what) {}
};

/// Phase requested from an arm with (numerically) zero amplitude.
class DegeneratePhaseError : public NumericalError {
public:
    DegeneratePhaseError(const std::string& what, int arm_index)
        : NumericalError(what), arm(arm_index) {}

    /// 1 or 2: which receiver arm was dark.
    int arm;
};

/// The inversion produced an empty candidate set.
class NoSolutionError : public NumericalError {
public:
    explicit NoSolutionError(const std::string& what) : NumericalError(what) {}
};

}  // namespace polardf
