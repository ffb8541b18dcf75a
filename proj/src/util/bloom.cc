#include "util/bloom.h"

#include <algorithm>
#include <cstring>

namespace sepdb {

uint32_t BloomHash(std::string_view key) {
  // Murmur-inspired string hash (LevelDB's Hash with a fixed seed).
  constexpr uint32_t kSeed = 0xbc9f1d34;
  constexpr uint32_t kM = 0xc6a4a793;
  const char* data = key.data();
  size_t n = key.size();
  uint32_t h = kSeed ^ (static_cast<uint32_t>(n) * kM);
  while (n >= 4) {
    uint32_t w;
    std::memcpy(&w, data, 4);
    h += w;
    h *= kM;
    h ^= (h >> 16);
    data += 4;
    n -= 4;
  }
  switch (n) {
    case 3: h += static_cast<unsigned char>(data[2]) << 16; [[fallthrough]];
    case 2: h += static_cast<unsigned char>(data[1]) << 8; [[fallthrough]];
    case 1:
      h += static_cast<unsigned char>(data[0]);
      h *= kM;
      h ^= (h >> 24);
  }
  return h;
}

BloomFilterBuilder::BloomFilterBuilder(int bits_per_key)
    : bits_per_key_(bits_per_key) {}

void BloomFilterBuilder::AddKey(std::string_view key) {
  hashes_.push_back(BloomHash(key));
}

std::string BloomFilterBuilder::Finish() const {
  // k = ln(2) * bits_per_key, clamped to a sane range.
  int k = static_cast<int>(bits_per_key_ * 0.69);
  k = std::clamp(k, 1, 30);

  size_t bits = std::max<size_t>(hashes_.size() * bits_per_key_, 64);
  size_t bytes = (bits + 7) / 8;
  bits = bytes * 8;

  std::string filter(bytes, '\0');
  for (uint32_t h : hashes_) {
    uint32_t delta = (h >> 17) | (h << 15);
    for (int j = 0; j < k; ++j) {
      uint32_t bit = h % bits;
      filter[bit / 8] |= static_cast<char>(1 << (bit % 8));
      h += delta;
    }
  }
  filter.push_back(static_cast<char>(k));
  return filter;
}

bool BloomMayMatch(std::string_view filter, std::string_view key) {
  if (filter.size() < 2) return true;
  size_t bytes = filter.size() - 1;
  size_t bits = bytes * 8;
  int k = filter.back();
  if (k <= 0 || k > 30) return true;  // treat unknown encodings as a match

  uint32_t h = BloomHash(key);
  uint32_t delta = (h >> 17) | (h << 15);
  for (int j = 0; j < k; ++j) {
    uint32_t bit = h % bits;
    if ((filter[bit / 8] & (1 << (bit % 8))) == 0) return false;
    h += delta;
  }
  return true;
}

}  // namespace sepdb
