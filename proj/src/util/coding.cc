#include "util/coding.h"

namespace sepdb {

bool GetVarint32(std::string_view* input, uint32_t* value) {
  uint32_t result = 0;
  for (int shift = 0; shift <= 28; shift += 7) {
    if (input->empty()) return false;
    auto byte = static_cast<unsigned char>(input->front());
    input->remove_prefix(1);
    if (byte & 0x80) {
      result |= (static_cast<uint32_t>(byte & 0x7f) << shift);
    } else {
      result |= (static_cast<uint32_t>(byte) << shift);
      *value = result;
      return true;
    }
  }
  return false;
}

bool GetVarint64(std::string_view* input, uint64_t* value) {
  uint64_t result = 0;
  for (int shift = 0; shift <= 63; shift += 7) {
    if (input->empty()) return false;
    auto byte = static_cast<unsigned char>(input->front());
    input->remove_prefix(1);
    if (byte & 0x80) {
      result |= (static_cast<uint64_t>(byte & 0x7f) << shift);
    } else {
      result |= (static_cast<uint64_t>(byte) << shift);
      *value = result;
      return true;
    }
  }
  return false;
}

bool GetLengthPrefixed(std::string_view* input, std::string_view* out) {
  uint32_t len;
  if (!GetVarint32(input, &len)) return false;
  if (input->size() < len) return false;
  *out = input->substr(0, len);
  input->remove_prefix(len);
  return true;
}

}  // namespace sepdb
