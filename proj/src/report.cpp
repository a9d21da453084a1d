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

#include "fse3d/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace fse3d {

std::string order_name(FillOrder order) { return order == FillOrder::Optimized ? "opt" : "ls"; }

FillOrder parse_order(const std::string& name) {
  if (name == "opt") return FillOrder::Optimized;
  if (name == "ls") return FillOrder::LineScan;
  throw std::invalid_argument("unknown order '" + name + "' (expected opt, ls)");
}

nlohmann::json fill_report_json(const FillReport& report, const FseParams& params) {
  nlohmann::json j;
  j["order"] = order_name(report.order);
  j["params"] = {{"cube_edge", params.cube_edge},
                 {"border", params.border},
                 {"decay", params.decay},
                 {"reconstructed_weight", params.reconstructed_weight},
                 {"compensation", params.compensation},
                 {"max_iterations", params.max_iterations}};
  const Dims& g = report.state.grid.grid_dims();
  j["grid"] = {g.width, g.height, g.frames};
  j["hole_cubes"] = report.hole_cubes;
  j["hole_samples"] = report.hole_samples;
  j["steps"] = report.batch_sizes.size();
  j["batch_sizes"] = report.batch_sizes;
  j["no_support_cubes"] = report.no_support_cubes;
  return j;
}

std::string fill_report_text(const FillReport& report) {
  std::size_t largest = 0;
  for (auto s : report.batch_sizes) largest = std::max(largest, s);
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "order            %s\n"
                "hole cubes       %zu\n"
                "hole samples     %zu\n"
                "steps            %zu\n"
                "largest batch    %zu\n"
                "no-support cubes %zu\n",
                order_name(report.order).c_str(), report.hole_cubes, report.hole_samples, report.batch_sizes.size(),
                largest, report.no_support_cubes.size());
  return buf;
}

nlohmann::json quality_report_json(const QualityReport& quality) {
  nlohmann::json j;
  j["psnr_db"] = quality.psnr.db;
  j["psnr_identical"] = quality.psnr.identical;
  j["mse"] = quality.psnr.mse;
  j["hole_samples"] = quality.psnr.samples;
  j["ssim_mean"] = quality.ssim.mean;
  j["ssim_per_frame"] = quality.ssim.per_frame;
  return j;
}

std::string quality_report_text(const QualityReport& quality) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "psnr (holes)  %8.2f dB%s\n"
                "ssim (mean)   %8.4f\n"
                "hole samples  %8zu\n",
                quality.psnr.db, quality.psnr.identical ? "  [identical]" : "", quality.ssim.mean,
                quality.psnr.samples);
  return buf;
}

}  // namespace fse3d
