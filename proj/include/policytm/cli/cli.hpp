// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace policytm {

// Entry point of the policytm command-line tool. Returns the process exit
// status: 0 on success, 1 on a runtime failure, 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace policytm
