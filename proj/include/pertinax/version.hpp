#pragma once

namespace pertinax {

inline constexpr const char* kPertinaxVersion = "0.1.0";

}  // namespace pertinax
