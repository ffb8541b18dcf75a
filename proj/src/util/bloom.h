#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sepdb {

// Standard double-hashing bloom filter. Encoding: bit array followed by one
// byte holding the probe count.
class BloomFilterBuilder {
 public:
  explicit BloomFilterBuilder(int bits_per_key);

  void AddKey(std::string_view key);
  std::string Finish() const;
  size_t NumKeys() const { return hashes_.size(); }

 private:
  int bits_per_key_;
  std::vector<uint32_t> hashes_;
};

bool BloomMayMatch(std::string_view filter, std::string_view key);

uint32_t BloomHash(std::string_view key);

}  // namespace sepdb
