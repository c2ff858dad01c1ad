// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

namespace policytm {

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partial file. Creates missing parent directories. Throws
// IoError naming the path and the cause.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

// Two-space indented JSON with a trailing newline. Output is a pure function
// of the value.
std::string dump_json(const nlohmann::json& j);
void save_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json load_json(const std::filesystem::path& path);

}  // namespace policytm
