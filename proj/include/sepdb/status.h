#pragma once

#include <string>
#include <string_view>
#include <utility>

namespace sepdb {

// Result of an operation that can fail. Cheap to copy when ok.
class Status {
 public:
  Status() = default;

  static Status OK() { return Status(); }
  static Status NotFound(std::string_view msg = {}) {
    return Status(Code::kNotFound, msg);
  }
  static Status Corruption(std::string_view msg) {
    return Status(Code::kCorruption, msg);
  }
  static Status IOError(std::string_view msg) {
    return Status(Code::kIOError, msg);
  }
  static Status InvalidArgument(std::string_view msg) {
    return Status(Code::kInvalidArgument, msg);
  }
  static Status Busy(std::string_view msg) { return Status(Code::kBusy, msg); }
  static Status Aborted(std::string_view msg) {
    return Status(Code::kAborted, msg);
  }

  bool ok() const { return code_ == Code::kOk; }
  bool IsNotFound() const { return code_ == Code::kNotFound; }
  bool IsCorruption() const { return code_ == Code::kCorruption; }
  bool IsIOError() const { return code_ == Code::kIOError; }
  bool IsInvalidArgument() const { return code_ == Code::kInvalidArgument; }
  bool IsBusy() const { return code_ == Code::kBusy; }
  bool IsAborted() const { return code_ == Code::kAborted; }

  std::string ToString() const {
    if (ok()) return "OK";
    std::string out;
    switch (code_) {
      case Code::kNotFound: out = "NotFound"; break;
      case Code::kCorruption: out = "Corruption"; break;
      case Code::kIOError: out = "IOError"; break;
      case Code::kInvalidArgument: out = "InvalidArgument"; break;
      case Code::kBusy: out = "Busy"; break;
      case Code::kAborted: out = "Aborted"; break;
      default: out = "Unknown"; break;
    }
    if (!msg_.empty()) {
      out += ": ";
      out += msg_;
    }
    return out;
  }

 private:
  enum class Code {
    kOk = 0,
    kNotFound,
    kCorruption,
    kIOError,
    kInvalidArgument,
    kBusy,
    kAborted,
  };

  Status(Code code, std::string_view msg) : code_(code), msg_(msg) {}

  Code code_ = Code::kOk;
  std::string msg_;
};

}  // namespace sepdb
