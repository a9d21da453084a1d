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

#include "fse3d/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>

namespace fse3d {
namespace {

std::vector<std::uint8_t> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read error on '" + path.string() + "'");
  return bytes;
}

void dump(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write error on '" + path.string() + "'");
}

}  // namespace

PixelFormat parse_pixel_format(const std::string& name) {
  if (name == "y8" || name == "gray") return PixelFormat::Y8;
  if (name == "yuv420p" || name == "i420") return PixelFormat::Yuv420p;
  throw std::invalid_argument("unknown pixel format '" + name + "' (expected y8, yuv420p)");
}

std::size_t RawVideoSpec::luma_bytes() const {
  return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

std::size_t RawVideoSpec::chroma_bytes() const {
  if (format == PixelFormat::Y8) return 0;
  return 2 * static_cast<std::size_t>((width + 1) / 2) * static_cast<std::size_t>((height + 1) / 2);
}

RawVideo read_raw_video(const RawVideoSpec& spec) {
  if (spec.width < 1 || spec.height < 1 || spec.frames < 0) throw std::invalid_argument("video dimensions must be positive");
  const auto bytes = slurp(spec.path);
  const std::size_t frame = spec.frame_bytes();
  const std::string name = "'" + spec.path.string() + "'";
  if (bytes.empty()) throw IoError(name + " is empty");

  std::size_t frames = 0;
  if (spec.frames == 0) {
    if (bytes.size() % frame != 0) {
      throw IoError(name + ": size " + std::to_string(bytes.size()) + " is not a multiple of the frame size " +
                    std::to_string(frame) + "; partial frame starts at byte offset " +
                    std::to_string(bytes.size() - bytes.size() % frame));
    }
    frames = bytes.size() / frame;
  } else {
    frames = static_cast<std::size_t>(spec.frames);
    if (bytes.size() < frames * frame) {
      throw IoError(name + " is truncated: frame " + std::to_string(bytes.size() / frame) + " ends at byte offset " +
                    std::to_string((bytes.size() / frame + 1) * frame) + " but the file has " +
                    std::to_string(bytes.size()) + " bytes");
    }
    if (bytes.size() != frames * frame) {
      throw IoError(name + ": size " + std::to_string(bytes.size()) + " does not match " + std::to_string(frames) +
                    " frames of " + std::to_string(frame) + " bytes; unexpected data at byte offset " +
                    std::to_string(frames * frame));
    }
  }

  RawVideo video;
  video.luma = VideoVolume(Dims{spec.width, spec.height, static_cast<int>(frames)});
  auto samples = video.luma.samples();
  const std::size_t luma = spec.luma_bytes();
  const std::size_t chroma = spec.chroma_bytes();
  video.chroma.reserve(chroma * frames);
  for (std::size_t f = 0; f < frames; ++f) {
    const std::uint8_t* src = bytes.data() + f * frame;
    std::transform(src, src + luma, samples.begin() + static_cast<std::ptrdiff_t>(f * luma),
                   [](std::uint8_t b) { return static_cast<double>(b); });
    video.chroma.insert(video.chroma.end(), src + luma, src + luma + chroma);
  }
  return video;
}

VideoVolume read_volume(const RawVideoSpec& spec) { return read_raw_video(spec).luma; }

std::uint8_t to_byte(double sample) {
  // std::round rounds halfway cases away from zero.
  return static_cast<std::uint8_t>(std::round(clamp_sample(sample)));
}

void write_volume(const VideoVolume& volume, const RawVideoSpec& spec, std::span<const std::uint8_t> chroma) {
  const Dims& d = volume.dims();
  RawVideoSpec layout = spec;
  layout.width = d.width;
  layout.height = d.height;
  const std::size_t luma = layout.luma_bytes();
  const std::size_t chroma_frame = layout.chroma_bytes();
  const auto frames = static_cast<std::size_t>(d.frames);
  if (!chroma.empty() && chroma.size() != chroma_frame * frames) {
    throw std::invalid_argument("chroma passthrough has " + std::to_string(chroma.size()) + " bytes, expected " +
                                std::to_string(chroma_frame * frames));
  }

  std::vector<std::uint8_t> bytes;
  bytes.reserve(layout.frame_bytes() * frames);
  const auto samples = volume.samples();
  for (std::size_t f = 0; f < frames; ++f) {
    for (std::size_t i = 0; i < luma; ++i) bytes.push_back(to_byte(samples[f * luma + i]));
    if (chroma_frame == 0) continue;
    if (chroma.empty()) {
      bytes.insert(bytes.end(), chroma_frame, std::uint8_t{128});
    } else {
      const auto first = chroma.begin() + static_cast<std::ptrdiff_t>(f * chroma_frame);
      bytes.insert(bytes.end(), first, first + static_cast<std::ptrdiff_t>(chroma_frame));
    }
  }
  dump(spec.path, bytes);
}

HoleMask read_mask(const std::filesystem::path& path, const Dims& dims) {
  if (!dims.valid()) throw std::invalid_argument("mask dimensions must be positive");
  const auto bytes = slurp(path);
  if (bytes.size() != dims.size()) {
    throw IoError("mask '" + path.string() + "' has " + std::to_string(bytes.size()) + " bytes, expected " +
                  std::to_string(dims.size()));
  }
  HoleMask mask(dims);
  auto states = mask.states();
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    switch (bytes[i]) {
      case kMaskKnown:
        states[i] = SampleState::Known;
        break;
      case kMaskUnknown:
        states[i] = SampleState::Unknown;
        break;
      case kMaskReconstructed:
        states[i] = SampleState::Reconstructed;
        break;
      default:
        throw IoError("mask '" + path.string() + "' has invalid byte " + std::to_string(bytes[i]) +
                      " at offset " + std::to_string(i));
    }
  }
  return mask;
}

void write_mask(const HoleMask& mask, const std::filesystem::path& path) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(mask.dims().size());
  for (SampleState s : mask.states()) {
    switch (s) {
      case SampleState::Known:
        bytes.push_back(kMaskKnown);
        break;
      case SampleState::Unknown:
        bytes.push_back(kMaskUnknown);
        break;
      case SampleState::Reconstructed:
        bytes.push_back(kMaskReconstructed);
        break;
    }
  }
  dump(path, bytes);
}

std::vector<std::uint8_t> scale_order_map(const std::vector<int>& frame, int max_step) {
  std::vector<std::uint8_t> out(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (frame[i] < 0) {
      out[i] = 255;
    } else if (max_step <= 0) {
      out[i] = 0;
    } else {
      out[i] = static_cast<std::uint8_t>(std::lround(254.0 * frame[i] / max_step));
    }
  }
  return out;
}

std::vector<std::filesystem::path> write_order_map(const std::vector<std::vector<int>>& frames, int width,
                                                   int height, const std::filesystem::path& prefix) {
  int max_step = 0;
  for (const auto& f : frames) {
    if (f.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw std::invalid_argument("order map frame size does not match dimensions");
    }
    for (int v : f) max_step = std::max(max_step, v);
  }
  std::vector<std::filesystem::path> written;
  for (std::size_t t = 0; t < frames.size(); ++t) {
    char suffix[32];
    std::snprintf(suffix, sizeof(suffix), "_%04zu.pgm", t);
    std::filesystem::path path = prefix;
    path += suffix;
    const std::string header = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> bytes(header.begin(), header.end());
    const auto pixels = scale_order_map(frames[t], max_step);
    bytes.insert(bytes.end(), pixels.begin(), pixels.end());
    dump(path, bytes);
    written.push_back(path);
  }
  return written;
}

}  // namespace fse3d
