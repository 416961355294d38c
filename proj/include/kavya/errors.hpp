// kavya/errors.hpp

// Copyright 2026  The Kavya Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kavya {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A byte in the input does not belong to the requested scheme.
class InvalidCharacterError : public Error {
 public:
  InvalidCharacterError(std::size_t position, const std::string& what)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Text contains consonants but no vowel, so it cannot be syllabified.
class NoVowelError : public Error {
 public:
  using Error::Error;
};

class MeterDbError : public Error {
 public:
  enum class Kind { DuplicateName, MalformedPattern, FamilyInvariantViolated, Io };
  MeterDbError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class EmptyDatabaseError : public Error {
 public:
  using Error::Error;
};

// suggest_corrections called on an exact match.
class NotFuzzyError : public Error {
 public:
  using Error::Error;
};

// Annotation file violates the schema; path points at the offending node.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A closed-vocabulary field carries a value outside its vocabulary.
class UnknownLabelError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class InvalidWeightsError : public Error {
 public:
  using Error::Error;
};

}  // namespace kavya
