#pragma once

#include <stdexcept>
#include <string>

namespace lrx {

// Error taxonomy shared by every module. The category string doubles as the
// machine-readable prefix printed by the CLI ("error:<category>: ...").
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error("config", m) {}
};
struct ShapeError : Error {
  explicit ShapeError(const std::string& m) : Error("shape", m) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& m) : Error("numeric", m) {}
};
struct IngestError : Error {
  explicit IngestError(const std::string& m) : Error("ingest", m) {}
};
struct IoError : Error {
  explicit IoError(const std::string& m) : Error("io", m) {}
};

}  // namespace lrx
