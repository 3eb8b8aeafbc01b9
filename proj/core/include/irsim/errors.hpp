// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

#include <stdexcept>
#include <string>

namespace irsim {

/// Base class for all irsim errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-positive distance or path-loss exponent, negative Rice factor.
class InvalidGeometryError : public Error {
public:
    explicit InvalidGeometryError(const std::string& msg) : Error(msg) {}
};

/// Inconsistent or out-of-range system configuration (counts, amplitude, dimensions).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Argument outside the domain of a special function or metric.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Second moment <= squared first moment: the SNR distribution has collapsed
/// numerically and no gamma fit exists.
class DegenerateVarianceError : public Error {
public:
    explicit DegenerateVarianceError(const std::string& msg) : Error(msg) {}
};

/// Enumeration guard tripped (instance too large for exhaustive search).
class GuardError : public Error {
public:
    explicit GuardError(const std::string& msg) : Error(msg) {}
};

/// Filesystem failure; message carries the offending path.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

namespace detail {

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw ConfigError(msg);
}

} // namespace detail
} // namespace irsim
