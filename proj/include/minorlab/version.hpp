#pragma once

namespace minorlab {

inline constexpr const char* kEngineVersion = "minorlab 1.0.0";

}  // namespace minorlab
