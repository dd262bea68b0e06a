#pragma once

#include <string>

namespace sgc {

// SHA-256 hex digest of a byte string; used for the cache manifest.
std::string sha256_hex(const std::string& data);

}  // namespace sgc
