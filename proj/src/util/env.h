#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sepdb/status.h"
#include "util/io_stats.h"

namespace sepdb {

class SequentialFile {
 public:
  virtual ~SequentialFile() = default;
  // Reads up to n bytes; *out points into *scratch. Short read means EOF.
  virtual Status Read(size_t n, std::string* scratch,
                      std::string_view* out) = 0;
};

class RandomAccessFile {
 public:
  virtual ~RandomAccessFile() = default;
  // Reads exactly n bytes at offset into *out (resized). Fails if the range
  // extends past EOF.
  virtual Status Read(uint64_t offset, size_t n, std::string* out) const = 0;
};

class WritableFile {
 public:
  virtual ~WritableFile() = default;
  virtual Status Append(std::string_view data) = 0;
  virtual Status Flush() = 0;  // push buffered bytes to the OS
  virtual Status Sync() = 0;   // durable
  virtual Status Close() = 0;
};

class Env {
 public:
  virtual ~Env() = default;

  static Env* Default();

  virtual Status NewSequentialFile(const std::string& path,
                                   std::unique_ptr<SequentialFile>* file) = 0;
  virtual Status NewRandomAccessFile(
      const std::string& path, std::unique_ptr<RandomAccessFile>* file) = 0;
  virtual Status NewWritableFile(const std::string& path,
                                 std::unique_ptr<WritableFile>* file) = 0;

  virtual bool FileExists(const std::string& path) = 0;
  virtual Status GetChildren(const std::string& dir,
                             std::vector<std::string>* out) = 0;
  virtual Status RemoveFile(const std::string& path) = 0;
  virtual Status CreateDirIfMissing(const std::string& dir) = 0;
  virtual Status RenameFile(const std::string& from, const std::string& to) = 0;
  virtual Status GetFileSize(const std::string& path, uint64_t* size) = 0;
};

// Wraps another Env, attributing byte counts to an IoStats instance (one per
// DB) and optionally recording exact read ranges.
class InstrumentedEnv : public Env {
 public:
  InstrumentedEnv(Env* base, IoStats* stats, ReadLog* read_log = nullptr)
      : base_(base), stats_(stats), read_log_(read_log) {}

  Status NewSequentialFile(const std::string& path,
                           std::unique_ptr<SequentialFile>* file) override;
  Status NewRandomAccessFile(const std::string& path,
                             std::unique_ptr<RandomAccessFile>* file) override;
  Status NewWritableFile(const std::string& path,
                         std::unique_ptr<WritableFile>* file) override;

  bool FileExists(const std::string& path) override {
    return base_->FileExists(path);
  }
  Status GetChildren(const std::string& dir,
                     std::vector<std::string>* out) override {
    return base_->GetChildren(dir, out);
  }
  Status RemoveFile(const std::string& path) override {
    return base_->RemoveFile(path);
  }
  Status CreateDirIfMissing(const std::string& dir) override {
    return base_->CreateDirIfMissing(dir);
  }
  Status RenameFile(const std::string& from, const std::string& to) override {
    return base_->RenameFile(from, to);
  }
  Status GetFileSize(const std::string& path, uint64_t* size) override {
    return base_->GetFileSize(path, size);
  }

  IoStats* stats() const { return stats_; }

 private:
  Env* base_;
  IoStats* stats_;
  ReadLog* read_log_;
};

Status ReadFileToString(Env* env, const std::string& path, std::string* out);
Status WriteStringToFile(Env* env, const std::string& path,
                         std::string_view data, bool sync);

}  // namespace sepdb
