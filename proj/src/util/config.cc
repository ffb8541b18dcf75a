#include "util/config.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "sepdb/options.h"
#include "util/env.h"

namespace sepdb {

namespace {

std::string Trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Status ParseConfigString(const std::string& text,
                         std::map<std::string, std::string>* out) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      return Status::InvalidArgument("config line " + std::to_string(lineno) +
                                     " has no '='");
    }
    std::string key = Trim(line.substr(0, eq));
    std::string value = Trim(line.substr(eq + 1));
    if (key.empty()) {
      return Status::InvalidArgument("config line " + std::to_string(lineno) +
                                     " has empty key");
    }
    (*out)[key] = value;
  }
  return Status::OK();
}

Status ParseConfigFile(const std::string& path,
                       std::map<std::string, std::string>* out) {
  std::string text;
  Status s = ReadFileToString(Env::Default(), path, &text);
  if (!s.ok()) return s;
  return ParseConfigString(text, out);
}

Status ParseByteSize(const std::string& text, uint64_t* out) {
  if (text.empty()) return Status::InvalidArgument("empty size");
  size_t pos = 0;
  errno = 0;
  double base = std::stod(text, &pos);
  if (errno != 0 || base < 0) return Status::InvalidArgument("bad size: " + text);
  std::string suffix = text.substr(pos);
  std::transform(suffix.begin(), suffix.end(), suffix.begin(), ::toupper);
  uint64_t mult = 1;
  if (suffix.empty() || suffix == "B") {
    mult = 1;
  } else if (suffix == "K" || suffix == "KB") {
    mult = 1ull << 10;
  } else if (suffix == "M" || suffix == "MB") {
    mult = 1ull << 20;
  } else if (suffix == "G" || suffix == "GB") {
    mult = 1ull << 30;
  } else {
    return Status::InvalidArgument("bad size suffix: " + text);
  }
  *out = static_cast<uint64_t>(base * static_cast<double>(mult));
  return Status::OK();
}

Status ParseDouble(const std::string& text, double* out) {
  try {
    size_t pos = 0;
    *out = std::stod(text, &pos);
    if (pos != text.size()) return Status::InvalidArgument("bad number: " + text);
  } catch (const std::exception&) {
    return Status::InvalidArgument("bad number: " + text);
  }
  return Status::OK();
}

Status ParseBool(const std::string& text, bool* out) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), ::tolower);
  if (t == "true" || t == "1" || t == "on" || t == "yes") {
    *out = true;
  } else if (t == "false" || t == "0" || t == "off" || t == "no") {
    *out = false;
  } else {
    return Status::InvalidArgument("bad bool: " + text);
  }
  return Status::OK();
}

Status Options::ApplyConfig(const std::map<std::string, std::string>& kv,
                            std::map<std::string, std::string>* unknown) {
  for (const auto& [key, value] : kv) {
    Status s;
    if (key == "memtable_size") {
      s = ParseByteSize(value, &memtable_size);
    } else if (key == "ksst_size") {
      s = ParseByteSize(value, &ksst_size);
    } else if (key == "vsst_size") {
      s = ParseByteSize(value, &vsst_size);
    } else if (key == "block_size") {
      s = ParseByteSize(value, &block_size);
    } else if (key == "block_cache") {
      s = ParseByteSize(value, &block_cache);
    } else if (key == "separation_threshold") {
      s = ParseByteSize(value, &separation_threshold);
    } else if (key == "gc_garbage_ratio") {
      s = ParseDouble(value, &gc_garbage_ratio);
    } else if (key == "background_threads") {
      uint64_t n;
      s = ParseByteSize(value, &n);
      background_threads = static_cast<int>(n);
    } else if (key == "space_limit_multiplier") {
      s = ParseDouble(value, &space_limit_multiplier);
    } else if (key == "dataset_bytes") {
      s = ParseByteSize(value, &dataset_bytes);
    } else if (key == "num_levels") {
      uint64_t n;
      s = ParseByteSize(value, &n);
      num_levels = static_cast<int>(n);
    } else if (key == "level_size_multiplier") {
      uint64_t n;
      s = ParseByteSize(value, &n);
      level_size_multiplier = static_cast<int>(n);
    } else if (key == "l0_compaction_trigger") {
      uint64_t n;
      s = ParseByteSize(value, &n);
      l0_compaction_trigger = static_cast<int>(n);
    } else if (key == "bloom_bits_per_key") {
      uint64_t n;
      s = ParseByteSize(value, &n);
      bloom_bits_per_key = static_cast<int>(n);
    } else if (key == "compensated_compaction") {
      s = ParseBool(value, &compensated_compaction);
    } else if (key == "dtable_separation") {
      s = ParseBool(value, &dtable_separation);
    } else if (key == "gc_readahead") {
      s = ParseBool(value, &gc_readahead);
    } else if (key == "drop_cache_fraction") {
      s = ParseDouble(value, &drop_cache_fraction);
    } else if (key == "wal_sync") {
      s = ParseBool(value, &wal_sync);
    } else if (key == "auto_compaction") {
      s = ParseBool(value, &auto_compaction);
    } else if (key == "auto_gc") {
      s = ParseBool(value, &auto_gc);
    } else if (key == "device_write_budget") {
      s = ParseByteSize(value, &device_write_budget);
    } else if (key == "device_read_budget") {
      s = ParseByteSize(value, &device_read_budget);
    } else if (key == "throttle_step") {
      s = ParseDouble(value, &throttle_step);
    } else if (key == "busy_threshold") {
      s = ParseDouble(value, &busy_threshold);
    } else if (key == "dip_threshold") {
      s = ParseDouble(value, &dip_threshold);
    } else if (key == "telemetry_window_ms") {
      s = ParseByteSize(value, &telemetry_window_ms);
    } else if (key == "stats_csv_path") {
      stats_csv_path = value;
    } else if (key == "gc_log_path") {
      gc_log_path = value;
    } else if (key == "scheduler_log_path") {
      scheduler_log_path = value;
    } else {
      if (unknown != nullptr) (*unknown)[key] = value;
      continue;
    }
    if (!s.ok()) {
      return Status::InvalidArgument("option '" + key + "': " + s.ToString());
    }
  }
  return Status::OK();
}

Status Options::ApplyConfigFile(const std::string& path,
                                std::map<std::string, std::string>* unknown) {
  std::map<std::string, std::string> kv;
  Status s = ParseConfigFile(path, &kv);
  if (!s.ok()) return s;
  return ApplyConfig(kv, unknown);
}

}  // namespace sepdb
