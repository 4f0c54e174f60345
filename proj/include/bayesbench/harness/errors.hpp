// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bayesbench {

//! Invalid or unreadable run configuration. Carries every violation found,
//! not just the first.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& summary,
                       std::vector<std::string> details = {})
      : std::runtime_error(join(summary, details)),
        details_(std::move(details)) {}

  const std::vector<std::string>& details() const { return details_; }

 private:
  static std::string join(const std::string& summary,
                          const std::vector<std::string>& details) {
    std::string msg = summary;
    for (const auto& d : details) {
      msg += "\n  - " + d;
    }
    return msg;
  }

  std::vector<std::string> details_;
};

//! Malformed artifact file (samples, CSV); the message carries the location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! External backend misbehaved: nonzero exit, timeout, or bad output. Never
//! aborts a run; the orchestrator records it and moves on.
class BackendFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bayesbench
