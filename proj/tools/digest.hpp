#pragma once

#include <string>
#include <string_view>

namespace supermorph::io {

/// SHA-256 of the bytes, as lowercase hex.
std::string sha256_hex(std::string_view data);

/// "sha256:<hex>" — the content-digest format used in run reports.
std::string content_digest(std::string_view data);

} // namespace supermorph::io
