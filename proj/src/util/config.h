#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sepdb/status.h"

namespace sepdb {

// Parses `key=value` lines. '#' starts a comment; blank lines are skipped.
Status ParseConfigString(const std::string& text,
                         std::map<std::string, std::string>* out);
Status ParseConfigFile(const std::string& path,
                       std::map<std::string, std::string>* out);

// Accepts plain integers plus K/KB/M/MB/G/GB suffixes (binary units).
Status ParseByteSize(const std::string& text, uint64_t* out);
Status ParseDouble(const std::string& text, double* out);
Status ParseBool(const std::string& text, bool* out);

}  // namespace sepdb
