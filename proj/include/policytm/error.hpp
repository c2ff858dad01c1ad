// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace policytm {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A source file or directory could not be read.
class IngestionError : public Error {
 public:
  using Error::Error;
};

// Input records violate a documented invariant (duplicate ids, bad dates...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A configuration value is out of its legal range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Arguments to a numerical routine violate its preconditions.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Reading or writing an exported file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

// A serialized file is malformed or of an unsupported version.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace policytm
