#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slt {

// Exit-code categories. The CLI maps uncaught errors to process exit codes:
// 1 usage/config, 2 data, 3 numerical failure.
enum class ErrorCategory { config = 1, data = 2, numeric = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, std::string msg)
      : std::runtime_error(std::move(msg)), cat_(cat) {}
  ErrorCategory category() const noexcept { return cat_; }

 private:
  ErrorCategory cat_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::string msg) : Error(ErrorCategory::config, std::move(msg)) {}
};

class DataError : public Error {
 public:
  explicit DataError(std::string msg) : Error(ErrorCategory::data, std::move(msg)) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(std::string msg) : Error(ErrorCategory::numeric, std::move(msg)) {}
};

// --- corpus ---

class MalformedLine : public DataError {
 public:
  MalformedLine(const std::string& file, std::size_t line, const std::string& why)
      : DataError(file + ":" + std::to_string(line) + ": " + why), line_no(line) {}
  std::size_t line_no;
};

class IntervalError : public DataError {
 public:
  IntervalError(double start_s, double end_s)
      : DataError("caption interval [" + std::to_string(start_s) + ", " +
                  std::to_string(end_s) + ") requires start < end"),
        start_s(start_s), end_s(end_s) {}
  double start_s, end_s;
};

class DimMismatch : public DataError {
 public:
  explicit DimMismatch(std::size_t found)
      : DataError("landmark dim " + std::to_string(found) + ", expected 255"), found(found) {}
  std::size_t found;
};

class TruncatedFile : public DataError {
 public:
  explicit TruncatedFile(const std::string& path) : DataError("truncated file: " + path) {}
};

// --- clips / tasks ---

class EmptyVideo : public DataError {
 public:
  explicit EmptyVideo(const std::string& id) : DataError("video has no frames: " + id) {}
};

class MixedLanguage : public DataError {
 public:
  MixedLanguage(const std::string& want, const std::string& got)
      : DataError("covered captions expected lang '" + want + "', found '" + got + "'") {}
};

class OracleUndefined : public ConfigError {
 public:
  OracleUndefined(const std::string& src, const std::string& tgt)
      : ConfigError("MT oracle undefined for " + src + "->" + tgt) {}
};

class UnknownWord : public DataError {
 public:
  explicit UnknownWord(const std::string& word) : DataError("word not in lexicon: '" + word + "'"), word(word) {}
  std::string word;
};

class UnknownGesture : public DataError {
 public:
  explicit UnknownGesture(int id) : DataError("gesture id out of range: " + std::to_string(id)) {}
};

// --- mixture ---

class EmptyInventory : public ConfigError {
 public:
  explicit EmptyInventory(const std::string& what) : ConfigError("empty inventory: " + what) {}
};

// --- model / decode ---

class LengthExceeded : public DataError {
 public:
  LengthExceeded(const std::string& what, std::size_t got, std::size_t cap)
      : DataError(what + " length " + std::to_string(got) + " exceeds cap " + std::to_string(cap)) {}
};

class NaNLoss : public NumericError {
 public:
  explicit NaNLoss(const std::string& diag) : NumericError("non-finite loss: " + diag) {}
};

// --- metrics / eval ---

class LengthMismatch : public DataError {
 public:
  LengthMismatch(std::size_t hyp, std::size_t ref)
      : DataError("hypothesis/reference count mismatch: " + std::to_string(hyp) + " vs " +
                  std::to_string(ref)) {}
};

class EmptyCorpus : public DataError {
 public:
  EmptyCorpus() : DataError("metric called on empty corpus") {}
};

class MissingDirection : public DataError {
 public:
  explicit MissingDirection(const std::string& dir)
      : DataError("no references for direction " + dir) {}
};

}  // namespace slt
