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

// fse3d: fill holes in raw video volumes, generate hole masks, score reconstructions.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fse3d/io.hpp"
#include "fse3d/metrics.hpp"
#include "fse3d/patterns.hpp"
#include "fse3d/report.hpp"
#include "fse3d/scheduler.hpp"

namespace {

struct VideoArgs {
  int width = 0;
  int height = 0;
  int frames = 0;
  std::string format = "y8";

  fse3d::RawVideoSpec spec(const std::string& path) const {
    return fse3d::RawVideoSpec{path, width, height, frames, fse3d::parse_pixel_format(format)};
  }
};

void add_video_args(CLI::App* cmd, VideoArgs& v) {
  cmd->add_option("--w,--width", v.width, "Frame width in samples")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--h,--height", v.height, "Frame height in samples")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--frames", v.frames, "Frames to read (0 = whole file)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", v.format, "Pixel format: y8 or yuv420p")->check(CLI::IsMember({"y8", "yuv420p"}));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw fse3d::IoError("cannot open '" + path + "' for writing");
  out << text;
}

struct FillArgs {
  std::string in, mask, out, order = "opt", report, order_map;
  VideoArgs video;
  int threads = 0;
  fse3d::FseParams params;
};

int cmd_fill(const FillArgs& a) {
  const auto input = fse3d::read_raw_video(a.video.spec(a.in));
  fse3d::HoleMask mask = fse3d::read_mask(a.mask, input.luma.dims());
  fse3d::VideoVolume volume = input.luma;

  const auto report = fse3d::run_fill(volume, mask, a.params, fse3d::parse_order(a.order), a.threads);
  fse3d::write_volume(volume, a.video.spec(a.out), input.chroma);

  if (!a.order_map.empty()) {
    const auto& d = volume.dims();
    fse3d::write_order_map(fse3d::export_order_map(report.state), d.width, d.height, a.order_map);
  }
  if (!a.report.empty()) write_text(a.report, fse3d::fill_report_json(report, a.params).dump(2) + "\n");
  std::cout << fse3d::fill_report_text(report);
  return 0;
}

struct GenmaskArgs {
  std::string kind, out;
  int width = 0, height = 0, frames = 0;
  std::optional<int> count;
  int sx = 32, sy = 32, st = 12;
  double rs = 24.0, rt = 4.0;
  std::uint64_t seed = 1;
};

int cmd_genmask(const GenmaskArgs& a) {
  fse3d::PatternSpec spec;
  spec.kind = fse3d::parse_pattern_kind(a.kind);
  spec.count = a.count.value_or(spec.kind == fse3d::PatternKind::DiagonalBars ? 8 : 30);
  spec.extent_x = a.sx;
  spec.extent_y = a.sy;
  spec.extent_t = a.st;
  spec.radius_spatial = a.rs;
  spec.radius_temporal = a.rt;
  spec.seed = a.seed;
  const fse3d::Dims dims{a.width, a.height, a.frames};
  const auto mask = fse3d::generate(dims, spec);
  fse3d::write_mask(mask, a.out);
  std::printf("%s: %d x %d x %d, hole ratio %.4f\n", a.kind.c_str(), a.width, a.height, a.frames,
              fse3d::hole_ratio(mask));
  return 0;
}

struct MetricsArgs {
  std::string original, reconstructed, mask, json;
  VideoArgs video;
};

int cmd_metrics(const MetricsArgs& a) {
  const auto original = fse3d::read_volume(a.video.spec(a.original));
  const auto reconstructed = fse3d::read_volume(a.video.spec(a.reconstructed));
  if (original.dims() != reconstructed.dims()) {
    throw std::invalid_argument("original has " + std::to_string(original.dims().frames) +
                                " frames, reconstruction has " + std::to_string(reconstructed.dims().frames));
  }
  const auto mask = fse3d::read_mask(a.mask, original.dims());
  const auto quality = fse3d::evaluate(original, reconstructed, mask);
  if (!a.json.empty()) write_text(a.json, fse3d::quality_report_json(quality).dump(2) + "\n");
  std::cout << fse3d::quality_report_text(quality);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hole filling in video volumes by 3D frequency selective extrapolation"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  FillArgs fill;
  auto* fill_cmd = app.add_subcommand("fill", "Fill the holes of a raw video");
  fill_cmd->add_option("--in", fill.in, "Input raw video")->required();
  fill_cmd->add_option("--mask", fill.mask, "Hole mask (one byte per sample)")->required();
  fill_cmd->add_option("--out", fill.out, "Output raw video")->required();
  add_video_args(fill_cmd, fill.video);
  fill_cmd->add_option("--order", fill.order, "Cube order: opt or ls")->check(CLI::IsMember({"opt", "ls"}));
  fill_cmd->add_option("--threads", fill.threads, "Worker threads (0 = all cores, 1 = sequential)")
      ->check(CLI::NonNegativeNumber);
  fill_cmd->add_option("--cube", fill.params.cube_edge, "Cube edge C")->capture_default_str();
  fill_cmd->add_option("--border", fill.params.border, "Border width B")->capture_default_str();
  fill_cmd->add_option("--rho", fill.params.decay, "Weight decay base")->capture_default_str();
  fill_cmd->add_option("--gamma", fill.params.compensation, "Orthogonality deficiency compensation")
      ->capture_default_str();
  fill_cmd->add_option("--delta", fill.params.reconstructed_weight, "Weight of reconstructed samples")
      ->capture_default_str();
  fill_cmd->add_option("--iterations", fill.params.max_iterations, "Iterations per cube")->capture_default_str();
  fill_cmd->add_option("--order-map", fill.order_map, "Write per-frame PGM order maps with this prefix");
  fill_cmd->add_option("--report", fill.report, "Write the JSON fill report here");

  GenmaskArgs gen;
  auto* gen_cmd = app.add_subcommand("genmask", "Generate a synthetic hole mask");
  gen_cmd->add_option("kind", gen.kind, "bars-diagonal, lenses or bars-linear")->required();
  gen_cmd->add_option("--out", gen.out, "Output mask file")->required();
  gen_cmd->add_option("--w,--width", gen.width)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--h,--height", gen.height)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--frames", gen.frames)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--count", gen.count, "Number of shapes (8 diagonal bars, 30 otherwise)");
  gen_cmd->add_option("--sx", gen.sx, "Bar extent in x")->capture_default_str();
  gen_cmd->add_option("--sy", gen.sy, "Bar extent in y")->capture_default_str();
  gen_cmd->add_option("--st", gen.st, "Linear bar extent in t")->capture_default_str();
  gen_cmd->add_option("--rs", gen.rs, "Lens spatial radius")->capture_default_str();
  gen_cmd->add_option("--rt", gen.rt, "Lens temporal radius")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();

  MetricsArgs met;
  auto* met_cmd = app.add_subcommand("metrics", "PSNR over the holes and per-frame SSIM");
  met_cmd->add_option("--orig", met.original, "Original raw video")->required();
  met_cmd->add_option("--recon", met.reconstructed, "Reconstructed raw video")->required();
  met_cmd->add_option("--mask", met.mask, "Hole mask")->required();
  add_video_args(met_cmd, met.video);
  met_cmd->add_option("--json", met.json, "Write the JSON quality report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (fill_cmd->parsed()) return cmd_fill(fill);
    if (gen_cmd->parsed()) return cmd_genmask(gen);
    if (met_cmd->parsed()) return cmd_metrics(met);
  } catch (const std::exception& e) {
    std::cerr << "fse3d: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
