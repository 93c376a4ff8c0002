#pragma once

namespace pdo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pdo
