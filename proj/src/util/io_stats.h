#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

namespace sepdb {

// Attribution for file I/O issued on the current thread. Background jobs set
// the category with ScopedIoCategory; everything else counts as user traffic.
enum class IoCategory : int {
  kUser = 0,
  kWal,
  kFlush,
  kCompaction,
  kGcRead,    // value-phase reads of a GC job
  kGcLookup,  // index-tree point queries issued by GC
  kGcWrite,
  kManifest,
  kOther,
};
inline constexpr int kNumIoCategories = 9;

const char* IoCategoryName(IoCategory c);

IoCategory CurrentIoCategory();

class ScopedIoCategory {
 public:
  explicit ScopedIoCategory(IoCategory c);
  ~ScopedIoCategory();

  ScopedIoCategory(const ScopedIoCategory&) = delete;
  ScopedIoCategory& operator=(const ScopedIoCategory&) = delete;

 private:
  IoCategory saved_;
};

struct IoCounterSnapshot {
  uint64_t bytes_read = 0;
  uint64_t bytes_written = 0;
  uint64_t read_ops = 0;
  uint64_t write_ops = 0;
};

class IoStats {
 public:
  void RecordRead(IoCategory c, uint64_t bytes) {
    auto& ctr = counters_[static_cast<int>(c)];
    ctr.bytes_read.fetch_add(bytes, std::memory_order_relaxed);
    ctr.read_ops.fetch_add(1, std::memory_order_relaxed);
  }
  void RecordWrite(IoCategory c, uint64_t bytes) {
    auto& ctr = counters_[static_cast<int>(c)];
    ctr.bytes_written.fetch_add(bytes, std::memory_order_relaxed);
    ctr.write_ops.fetch_add(1, std::memory_order_relaxed);
  }

  IoCounterSnapshot Get(IoCategory c) const {
    const auto& ctr = counters_[static_cast<int>(c)];
    IoCounterSnapshot s;
    s.bytes_read = ctr.bytes_read.load(std::memory_order_relaxed);
    s.bytes_written = ctr.bytes_written.load(std::memory_order_relaxed);
    s.read_ops = ctr.read_ops.load(std::memory_order_relaxed);
    s.write_ops = ctr.write_ops.load(std::memory_order_relaxed);
    return s;
  }

  IoCounterSnapshot Total() const {
    IoCounterSnapshot t;
    for (int i = 0; i < kNumIoCategories; ++i) {
      auto s = Get(static_cast<IoCategory>(i));
      t.bytes_read += s.bytes_read;
      t.bytes_written += s.bytes_written;
      t.read_ops += s.read_ops;
      t.write_ops += s.write_ops;
    }
    return t;
  }

 private:
  struct Counter {
    std::atomic<uint64_t> bytes_read{0};
    std::atomic<uint64_t> bytes_written{0};
    std::atomic<uint64_t> read_ops{0};
    std::atomic<uint64_t> write_ops{0};
  };
  std::array<Counter, kNumIoCategories> counters_;
};

// Per-range read log, enabled only by tests that assert on exact byte ranges.
class ReadLog {
 public:
  struct Entry {
    std::string path;
    uint64_t offset;
    uint64_t length;
    IoCategory category;
  };

  void Record(const std::string& path, uint64_t offset, uint64_t length) {
    std::lock_guard<std::mutex> l(mu_);
    entries_.push_back(Entry{path, offset, length, CurrentIoCategory()});
  }
  std::vector<Entry> Entries() const {
    std::lock_guard<std::mutex> l(mu_);
    return entries_;
  }
  void Clear() {
    std::lock_guard<std::mutex> l(mu_);
    entries_.clear();
  }

 private:
  mutable std::mutex mu_;
  std::vector<Entry> entries_;
};

}  // namespace sepdb
