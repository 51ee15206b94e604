#pragma once

#include <stdexcept>
#include <string>

namespace gvt {

/// Malformed input or an argument outside an operation's contract.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance exceeds a configured enumeration cap.
class SizeError : public std::runtime_error {
  public:
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration window was too small to certify the result.
class WindowError : public std::runtime_error {
  public:
    explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

/// A stated hypothesis fails; the message names a witness.
class HypothesisError : public ValidationError {
  public:
    explicit HypothesisError(const std::string& what) : ValidationError(what) {}
};

/// The active subgraph is disconnected, so the cell is not a tile.
class NotATileError : public ValidationError {
  public:
    explicit NotATileError(const std::string& what) : ValidationError(what) {}
};

/// A point claimed to lie on the arrangement does not.
class NotInYError : public ValidationError {
  public:
    explicit NotInYError(const std::string& what) : ValidationError(what) {}
};

/// Two assignments do not lie on the same fiber.
class NotSameFiberError : public ValidationError {
  public:
    explicit NotSameFiberError(const std::string& what) : ValidationError(what) {}
};

/// A solution exists only over a field extension.
class FieldExtensionError : public ValidationError {
  public:
    explicit FieldExtensionError(const std::string& what) : ValidationError(what) {}
};

/// Rendering is limited to rank <= 2.
class UnsupportedRankError : public ValidationError {
  public:
    explicit UnsupportedRankError(const std::string& what) : ValidationError(what) {}
};

}  // namespace gvt
