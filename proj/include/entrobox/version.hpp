#pragma once

namespace entrobox {

inline constexpr const char* kVersion = "0.1.0";

} // namespace entrobox
