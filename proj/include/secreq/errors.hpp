// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 secreq contributors

#pragma once

#include <stdexcept>
#include <string>

namespace secreq {

/// Malformed or inconsistent input data (bad rows, duplicate keys,
/// unreadable files, corrupt model files). The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace secreq
