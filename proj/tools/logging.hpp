// SPDX-License-Identifier: Apache-2.0
//
// irsim - statistical-CSI phase-shift design for IRS-assisted SIMO uplinks

#pragma once

#include <string>

namespace irsim::experiments {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Level parsed from IRS_LOG_LEVEL (error|warn|info|debug), default info.
LogLevel log_level();

void log(LogLevel level, const std::string& msg);

inline void log_error(const std::string& msg) { log(LogLevel::Error, msg); }
inline void log_warn(const std::string& msg) { log(LogLevel::Warn, msg); }
inline void log_info(const std::string& msg) { log(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log(LogLevel::Debug, msg); }

} // namespace irsim::experiments
