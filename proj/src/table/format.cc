#include "table/format.h"

#include "util/coding.h"
#include "util/crc32.h"

namespace sepdb {

void BlockHandle::EncodeTo(std::string* dst) const {
  PutFixed64(dst, offset);
  PutFixed64(dst, size);
}

bool BlockHandle::DecodeFrom(std::string_view* input, BlockHandle* out) {
  if (input->size() < 16) return false;
  out->offset = DecodeFixed64(input->data());
  out->size = DecodeFixed64(input->data() + 8);
  input->remove_prefix(16);
  return true;
}

void Footer::EncodeTo(std::string* dst) const {
  index.EncodeTo(dst);
  filter.EncodeTo(dst);
  meta.EncodeTo(dst);
  dst->push_back(static_cast<char>(version));
  PutFixed64(dst, magic);
}

Status Footer::DecodeFrom(std::string_view input) {
  if (input.size() != kEncodedLength) {
    return Status::Corruption("footer has wrong length");
  }
  if (!BlockHandle::DecodeFrom(&input, &index) ||
      !BlockHandle::DecodeFrom(&input, &filter) ||
      !BlockHandle::DecodeFrom(&input, &meta)) {
    return Status::Corruption("footer refs truncated");
  }
  version = static_cast<uint8_t>(input[0]);
  input.remove_prefix(1);
  magic = DecodeFixed64(input.data());
  if (version != kFormatVersion) {
    return Status::Corruption("unsupported format version " +
                              std::to_string(version));
  }
  return Status::OK();
}

Status WriteBlock(WritableFile* file, std::string_view payload,
                  uint64_t* file_offset, BlockHandle* handle) {
  handle->offset = *file_offset;
  handle->size = payload.size();
  Status s = file->Append(payload);
  if (!s.ok()) return s;
  std::string trailer;
  PutFixed32(&trailer, Crc32(payload));
  s = file->Append(trailer);
  if (!s.ok()) return s;
  *file_offset += payload.size() + 4;
  return Status::OK();
}

Status ReadBlock(const RandomAccessFile* file, const BlockHandle& handle,
                 const char* what, std::string* payload) {
  std::string raw;
  Status s = file->Read(handle.offset, handle.size + 4, &raw);
  if (!s.ok()) return s;
  uint32_t expected = DecodeFixed32(raw.data() + handle.size);
  raw.resize(handle.size);
  if (Crc32(raw) != expected) {
    return Status::Corruption(std::string("checksum mismatch in ") + what +
                              " block at offset " +
                              std::to_string(handle.offset));
  }
  *payload = std::move(raw);
  return Status::OK();
}

Status ReadFooter(const RandomAccessFile* file, uint64_t file_size,
                  uint64_t expected_magic, Footer* footer) {
  if (file_size < Footer::kEncodedLength) {
    return Status::Corruption("file too short for footer");
  }
  std::string raw;
  Status s = file->Read(file_size - Footer::kEncodedLength,
                        Footer::kEncodedLength, &raw);
  if (!s.ok()) return s;
  s = footer->DecodeFrom(raw);
  if (!s.ok()) return s;
  if (footer->magic != expected_magic) {
    return Status::Corruption("bad table magic");
  }
  return Status::OK();
}

}  // namespace sepdb
