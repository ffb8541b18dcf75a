#pragma once

#include <zlib.h>

#include <cstdint>
#include <string_view>

namespace sepdb {

inline uint32_t Crc32(std::string_view data) {
  return static_cast<uint32_t>(
      crc32_z(0, reinterpret_cast<const Bytef*>(data.data()), data.size()));
}

inline uint32_t Crc32Extend(uint32_t seed, std::string_view data) {
  return static_cast<uint32_t>(
      crc32_z(seed, reinterpret_cast<const Bytef*>(data.data()), data.size()));
}

}  // namespace sepdb
