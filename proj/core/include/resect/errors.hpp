// errors.hpp
// Exception hierarchy shared by all resect modules. Every exception carries a
// stable machine-readable kind string, surfaced by the CLI error summary.

#pragma once

#include <stdexcept>
#include <string>

namespace resect {

class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

class InvalidArgument : public Error {
public:
  explicit InvalidArgument(const std::string& message)
      : Error("invalid-argument", message) {}
};

class IncompatibleGrids : public Error {
public:
  explicit IncompatibleGrids(const std::string& message)
      : Error("incompatible-grids", message) {}
};

class InvalidGeometry : public Error {
public:
  explicit InvalidGeometry(const std::string& message)
      : Error("invalid-geometry", message) {}
};

class NotNifti : public Error {
public:
  explicit NotNifti(const std::string& message)
      : Error("not-nifti", message) {}
};

class UnsupportedFormat : public Error {
public:
  explicit UnsupportedFormat(const std::string& message)
      : Error("unsupported-format", message) {}
};

class CorruptFile : public Error {
public:
  explicit CorruptFile(const std::string& message)
      : Error("corrupt-file", message) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& message) : Error("io-error", message) {}
};

class DegenerateHistogram : public Error {
public:
  explicit DegenerateHistogram(const std::string& message)
      : Error("degenerate-histogram", message) {}
};

class ManifestError : public Error {
public:
  explicit ManifestError(const std::string& message)
      : Error("manifest-error", message) {}
};

class PlanError : public Error {
public:
  explicit PlanError(const std::string& message)
      : Error("plan-error", message) {}
};

class ExperimentError : public Error {
public:
  explicit ExperimentError(const std::string& message)
      : Error("experiment-error", message) {}
};

}  // namespace resect
