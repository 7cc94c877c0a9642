// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace exnil {

/// Output of one command in both renderings.
struct Report {
  std::string text;
  nlohmann::json json;
  /// False when a verification inside the command failed.
  bool ok = true;
  /// A computation cap refused the request.
  bool cap_exceeded = false;
};

/// Names accepted by run_command.
const std::vector<std::string>& command_names();

/// Runs a command on a flat JSON object of arguments (keys as the CLI long flags,
/// dashes replaced by underscores). Throws the library errors on bad input.
Report run_command(const std::string& command, const nlohmann::json& args);

}  // namespace exnil
