#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sepdb/status.h"

namespace sepdb {

class Env;

// Engine configuration. Field defaults mirror the stock tuning the benchmark
// harness assumes; everything is overridable through a key=value config file
// (see ApplyConfig).
struct Options {
  // Write path.
  uint64_t memtable_size = 64ull << 20;
  bool wal_sync = false;

  // Table sizing.
  uint64_t ksst_size = 64ull << 20;   // key SST cut size (logical bytes)
  uint64_t vsst_size = 256ull << 20;  // value SST cut size
  uint64_t block_size = 32ull << 10;  // DTable block target
  int bloom_bits_per_key = 10;

  // KV separation.
  uint64_t separation_threshold = 512;

  // Block cache.
  uint64_t block_cache = 1ull << 30;

  // Index tree shape.
  int num_levels = 7;
  int level_size_multiplier = 10;  // T
  int l0_compaction_trigger = 4;
  // Compaction scores use compensated sizes when true; physical bytes when
  // false (emulates the plain key-SST baseline).
  bool compensated_compaction = true;

  // DTable layout: separate small-KV and index-entry blocks when true;
  // interleave them in shared blocks when false (block-based baseline).
  bool dtable_separation = true;

  // GC.
  double gc_garbage_ratio = 0.2;  // R_G
  bool gc_readahead = true;
  double drop_cache_fraction = 0.01;  // of observed unique keys

  // Background scheduling.
  int background_threads = 16;
  bool auto_compaction = true;
  bool auto_gc = true;

  // Bandwidth throttling.
  uint64_t device_write_budget = 2ull << 30;  // bytes/s
  uint64_t device_read_budget = 4ull << 30;   // bytes/s
  double throttle_step = 0.2;
  double busy_threshold = 0.8;
  double dip_threshold = 0.2;
  uint64_t telemetry_window_ms = 1000;

  // Space guard. limit = space_limit_multiplier * dataset_bytes; 0 disables.
  double space_limit_multiplier = 1.5;
  uint64_t dataset_bytes = 0;

  // Telemetry sinks (empty disables).
  std::string stats_csv_path;
  std::string gc_log_path;
  std::string scheduler_log_path;

  Env* env = nullptr;  // defaults to Env::Default()

  bool create_if_missing = true;
  bool error_if_exists = false;

  // Applies `key=value` pairs. Unknown keys are ignored and copied to
  // `unknown` (shared config files carry harness keys too).
  Status ApplyConfig(const std::map<std::string, std::string>& kv,
                     std::map<std::string, std::string>* unknown = nullptr);
  Status ApplyConfigFile(const std::string& path,
                         std::map<std::string, std::string>* unknown = nullptr);
};

struct ReadOptions {
  bool fill_cache = true;
};

struct WriteOptions {
  bool sync = false;
};

}  // namespace sepdb
