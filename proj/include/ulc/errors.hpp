#pragma once

#include <stdexcept>
#include <string>

namespace ulc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -- geometry / partition errors ------------------------------------------

struct WrongDimensionError : Error {
    using Error::Error;
};
struct DuplicatePointsError : Error {
    using Error::Error;
};
struct SplitTieError : Error {
    using Error::Error;
};
struct DomainMismatchError : Error {
    using Error::Error;
};

// -- kernel / estimator errors ---------------------------------------------

struct NonpositiveBandwidthError : Error {
    using Error::Error;
};
struct InvalidBaseError : Error {
    using Error::Error;
};
struct LengthMismatchError : Error {
    using Error::Error;
};
struct EmptyGridError : Error {
    using Error::Error;
};
struct InsufficientCopiesError : Error {
    using Error::Error;
};
struct ZeroWindowError : Error {
    using Error::Error;
};

// -- theory errors ----------------------------------------------------------

struct InvalidOrderError : Error {
    using Error::Error;
};
struct PreconditionViolatedError : Error {
    using Error::Error;
};
struct NoRootError : Error {
    using Error::Error;
};
struct UnsupportedGeometryError : Error {
    using Error::Error;
};

// -- simulation / experiment errors ------------------------------------

struct RejectionStallError : Error {
    using Error::Error;
};
struct InvalidScheduleError : Error {
    using Error::Error;
};
struct EmptyFoldError : Error {
    using Error::Error;
};
struct AllZeroDifferencesError : Error {
    using Error::Error;
};
struct InvalidConfigError : Error {
    using Error::Error;
};

// -- I/O errors -------------------------------------------------------------

struct IoError : Error {
    using Error::Error;
};
struct MissingColumnError : Error {
    using Error::Error;
};
struct MalformedRowError : Error {
    MalformedRowError(const std::string& what, long line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    long line;
};
struct EmptyDatasetError : Error {
    using Error::Error;
};

}  // namespace ulc
