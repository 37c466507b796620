#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace egoarena {

// FNV-1a 64-bit over the bytes of `text`, rendered as 16 lowercase hex digits.
// Used for engine-state digests in session logs.
std::string fnv1a_hex(std::string_view text);

}  // namespace egoarena
