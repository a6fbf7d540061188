#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hatecode {

// Base class for all data/contract errors raised by the library. The CLI
// maps these to exit code 2; flag validation failures exit with 1 before
// any of these can be thrown.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FileNotFound : Error {
  explicit FileNotFound(const std::string& path)
      : Error("FileNotFound: " + path), path(path) {}
  std::string path;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& reason)
      : Error("ParseError at line " + std::to_string(line) + ": " + reason),
        line(line),
        reason(reason) {}
  std::size_t line;
  std::string reason;
};

struct DuplicateId : Error {
  explicit DuplicateId(const std::string& id)
      : Error("DuplicateId: " + id), id(id) {}
  std::string id;
};

struct UnknownTweetId : Error {
  explicit UnknownTweetId(const std::string& id)
      : Error("UnknownTweetId: " + id), id(id) {}
  std::string id;
};

struct InvalidLabel : Error {
  explicit InvalidLabel(const std::string& value)
      : Error("InvalidLabel: \"" + value + "\" (expected benign or hateful)"),
        value(value) {}
  std::string value;
};

struct EmptyVocabulary : Error {
  EmptyVocabulary() : Error("EmptyVocabulary: no term survived pruning") {}
};

struct SingleClassData : Error {
  SingleClassData() : Error("SingleClassData: training data contains only one class") {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what)
      : Error("DimensionMismatch: " + what) {}
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error("SchemaError: " + what) {}
};

struct TooFewExamples : Error {
  explicit TooFewExamples(const std::string& what)
      : Error("TooFewExamples: " + what) {}
};

struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& what)
      : Error("LengthMismatch: " + what) {}
};

struct InvalidSupport : Error {
  explicit InvalidSupport(double value)
      : Error("InvalidSupport: " + std::to_string(value) +
              " is outside (0, 1]"),
        value(value) {}
  double value;
};

struct EmptyTimeline : Error {
  EmptyTimeline() : Error("EmptyTimeline: no bins to inspect") {}
};

// Catch-all for violated preconditions without a dedicated error type
// (empty inputs, bad thresholds, ...).
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what)
      : Error("InvalidArgument: " + what) {}
};

}  // namespace hatecode
