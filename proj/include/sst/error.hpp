// Copyright 2026 The SST Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sst {

// Error categories used across the toolkit. The CLI maps each category to
// a distinct process exit code (see tools/sst.cpp).
enum class ErrorCode {
  kFormat,            // malformed container/header
  kUnsupported,       // recognized but not handled (e.g. 24-bit WAV)
  kTooShort,          // signal shorter than one analysis window
  kEmptyInput,        // empty matrix/list where data is required
  kInsufficientData,  // fewer points than model components
  kData,              // non-finite or otherwise unusable values
  kDim,               // dimension mismatch
  kConfig,            // invalid configuration value
  kDomain,            // value outside a kernel/op domain (e.g. negative histogram)
  kDegenerateData,    // all-identical points, zero mean distance, one-class labels
  kParse,             // unparseable text input
  kValidation,        // parsed but semantically invalid (e.g. offset <= onset)
  kInput,             // generic bad argument (length mismatch, unknown label)
  kIo,                // file system failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sst
