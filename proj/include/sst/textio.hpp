// Copyright 2026 The SST Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sst {

// Small text/file helpers shared by the serialization code and the CLI.

// Formats a double with enough digits (%.17g) to round-trip exactly.
std::string format_full(double v);

// Fixed-point formatting, e.g. format_fixed(1.5, 2) == "1.50".
std::string format_fixed(double v, int decimals);

std::string read_text_file(const std::string& path);
std::vector<std::uint8_t> read_binary_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Splits on any run of the given delimiters; no empty tokens.
std::vector<std::string> split_ws(const std::string& line);
// Splits on a single character, keeping empty fields.
std::vector<std::string> split_char(const std::string& line, char delim);

std::string trim(const std::string& s);

// Strict numeric parsing; throws Error(kParse) on garbage.
double parse_double(const std::string& token, const std::string& context);
long parse_long(const std::string& token, const std::string& context);

}  // namespace sst
