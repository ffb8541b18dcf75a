#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "sepdb/status.h"
#include "util/env.h"

namespace sepdb {

inline constexpr uint64_t kRTableMagic = 0x0164707365626c76ull;  // value table
inline constexpr uint64_t kDTableMagic = 0x01647073656b6579ull;  // key table
inline constexpr uint8_t kFormatVersion = 1;

struct BlockHandle {
  uint64_t offset = 0;
  uint64_t size = 0;  // payload size, excluding the 4-byte checksum trailer

  void EncodeTo(std::string* dst) const;
  static bool DecodeFrom(std::string_view* input, BlockHandle* out);
};

// Fixed-size trailer: [index ref][filter ref][meta ref][version:1][magic:8],
// each ref being (offset: 8 LE, size: 8 LE).
struct Footer {
  BlockHandle index;
  BlockHandle filter;
  BlockHandle meta;
  uint8_t version = kFormatVersion;
  uint64_t magic = 0;

  static constexpr size_t kEncodedLength = 3 * 16 + 1 + 8;

  void EncodeTo(std::string* dst) const;
  Status DecodeFrom(std::string_view input);
};

// Appends `payload` plus a crc32 trailer; returns the handle to the payload.
Status WriteBlock(WritableFile* file, std::string_view payload,
                  uint64_t* file_offset, BlockHandle* handle);

// Reads a block and verifies its checksum. `what` names the block in errors.
Status ReadBlock(const RandomAccessFile* file, const BlockHandle& handle,
                 const char* what, std::string* payload);

// Reads and validates the footer of a table file.
Status ReadFooter(const RandomAccessFile* file, uint64_t file_size,
                  uint64_t expected_magic, Footer* footer);

}  // namespace sepdb
