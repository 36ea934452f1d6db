// Copyright 2026 The subjid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBJID_ERRORS_HPP_
#define SUBJID_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subjid {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A body token that is not of the form surface(TAG)[feature]...
class MalformedTokenError : public Error {
 public:
  MalformedTokenError(std::size_t line, std::string token)
      : Error("line " + std::to_string(line) + ": malformed token '" + token +
              "'"),
        line_(line),
        token_(std::move(token)) {}

  std::size_t line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

class EmptyDocumentError : public Error {
 public:
  using Error::Error;
};

// Bad tagset configuration (overlapping noun/verb rules, bad file).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

class UnsupportedVersionError : public Error {
 public:
  using Error::Error;
};

class CorruptModelError : public Error {
 public:
  using Error::Error;
};

class NoUsableSamplesError : public Error {
 public:
  using Error::Error;
};

class TooFewDocumentsError : public Error {
 public:
  using Error::Error;
};

class CrossParagraphError : public Error {
 public:
  using Error::Error;
};

class NoCommonParagraphError : public Error {
 public:
  using Error::Error;
};

class UnknownNounError : public Error {
 public:
  using Error::Error;
};

class NoNounsError : public Error {
 public:
  using Error::Error;
};

class IdMismatchError : public Error {
 public:
  using Error::Error;
};

// Malformed annotation / prediction data.
class DataError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failures (unreadable file, unwritable path).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace subjid

#endif  // SUBJID_ERRORS_HPP_
