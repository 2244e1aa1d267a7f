#pragma once

#include <stdexcept>
#include <string>

namespace smenc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Interval operation outside its domain (division by an interval containing
/// zero, sqrt of a partially negative interval, non-finite endpoint).
struct DomainError : Error {
    using Error::Error;
};

/// The configured sheet of the critical manifold loses normal hyperbolicity:
/// the interval enclosure of the fast partial of f contains zero.
struct FoldError : Error {
    using Error::Error;
};

/// A face normal whose fast component straddles zero; the surface cannot be
/// sign-oriented there.
struct FoldProximity : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct DegenerateInput : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

struct IOError : Error {
    using Error::Error;
};

} // namespace smenc
