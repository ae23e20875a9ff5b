#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jzero {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A token environment would contain an identity class that is also
// required to be distinct from itself.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

class UnifyFailure : public Error {
 public:
  UnifyFailure(std::string path, std::string left, std::string right)
      : Error("unification clash at " + (path.empty() ? std::string("<root>") : path) +
              ": " + left + " vs " + right),
        path_(std::move(path)),
        left_(std::move(left)),
        right_(std::move(right)) {}

  const std::string& path() const { return path_; }
  const std::string& left() const { return left_; }
  const std::string& right() const { return right_; }

 private:
  std::string path_;
  std::string left_;
  std::string right_;
};

// Malformed input text (lexicon, rule table, context, corpus). Line is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Morpheme-level failure. Position is the 0-based morpheme index.
class MorphError : public Error {
 public:
  MorphError(const std::string& what, std::size_t position)
      : Error("morpheme " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class BuildError : public Error {
 public:
  using Error::Error;
};

class RuleRoleMissing : public Error {
 public:
  using Error::Error;
};

class UnsupportedMainClass : public Error {
 public:
  using Error::Error;
};

class UnsupportedConstruction : public Error {
 public:
  using Error::Error;
};

}  // namespace jzero
