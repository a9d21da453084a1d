/*
 * Copyright 2026 The fse3d Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fse3d/core.hpp"

namespace fse3d {

enum class PixelFormat { Y8, Yuv420p };

PixelFormat parse_pixel_format(const std::string& name);

/// Headerless raw video: dimensions come from the caller.
struct RawVideoSpec {
  std::filesystem::path path;
  int width = 0;
  int height = 0;
  int frames = 0;  ///< 0 reads until end of file
  PixelFormat format = PixelFormat::Y8;

  [[nodiscard]] std::size_t luma_bytes() const;
  /// Both chroma planes of one frame, (w+1)/2 x (h+1)/2 each; 0 for Y8.
  [[nodiscard]] std::size_t chroma_bytes() const;
  [[nodiscard]] std::size_t frame_bytes() const { return luma_bytes() + chroma_bytes(); }
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Luma volume plus the untouched chroma planes of every frame (empty for Y8).
struct RawVideo {
  VideoVolume luma;
  std::vector<std::uint8_t> chroma;
};

RawVideo read_raw_video(const RawVideoSpec& spec);
VideoVolume read_volume(const RawVideoSpec& spec);

/// Rounds half away from zero and clamps to [0, 255].
std::uint8_t to_byte(double sample);

/// Writes the volume. For YUV420P, `chroma` (as returned by read_raw_video) is
/// passed through; when empty, neutral 128 chroma is written.
void write_volume(const VideoVolume& volume, const RawVideoSpec& spec, std::span<const std::uint8_t> chroma = {});

/// Mask bytes: 0 = KNOWN, 255 = UNKNOWN, 128 = RECONSTRUCTED.
inline constexpr std::uint8_t kMaskKnown = 0;
inline constexpr std::uint8_t kMaskUnknown = 255;
inline constexpr std::uint8_t kMaskReconstructed = 128;

HoleMask read_mask(const std::filesystem::path& path, const Dims& dims);
void write_mask(const HoleMask& mask, const std::filesystem::path& path);

/// Maps a step index to a gray level: linear onto [0, 254]; reserved cells become 255.
std::vector<std::uint8_t> scale_order_map(const std::vector<int>& frame, int max_step);

/// Writes one binary PGM (P5) per frame as `<prefix>_<frame, 4 digits>.pgm`.
/// Returns the written paths.
std::vector<std::filesystem::path> write_order_map(const std::vector<std::vector<int>>& frames, int width,
                                                   int height, const std::filesystem::path& prefix);

}  // namespace fse3d
