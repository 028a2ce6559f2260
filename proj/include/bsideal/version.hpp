#pragma once

// Engine version string. Participates in cache keys and result documents, so
// bump it whenever any computation path changes observable output.

namespace bsideal {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace bsideal
