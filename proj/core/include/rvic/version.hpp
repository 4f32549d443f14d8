#pragma once

namespace rvic {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr int kCheckpointFormatVersion = 1;
inline constexpr int kConfigSchemaVersion = 1;

}  // namespace rvic
