#include "util/io_stats.h"

namespace sepdb {

namespace {
thread_local IoCategory tls_category = IoCategory::kUser;
}  // namespace

const char* IoCategoryName(IoCategory c) {
  switch (c) {
    case IoCategory::kUser: return "user";
    case IoCategory::kWal: return "wal";
    case IoCategory::kFlush: return "flush";
    case IoCategory::kCompaction: return "compaction";
    case IoCategory::kGcRead: return "gc_read";
    case IoCategory::kGcLookup: return "gc_lookup";
    case IoCategory::kGcWrite: return "gc_write";
    case IoCategory::kManifest: return "manifest";
    case IoCategory::kOther: return "other";
  }
  return "unknown";
}

IoCategory CurrentIoCategory() { return tls_category; }

ScopedIoCategory::ScopedIoCategory(IoCategory c) : saved_(tls_category) {
  tls_category = c;
}

ScopedIoCategory::~ScopedIoCategory() { tls_category = saved_; }

}  // namespace sepdb
