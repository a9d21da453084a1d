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

#include "fse3d/scheduler.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <limits>
#include <stdexcept>

#include "fse3d/fse.hpp"

namespace fse3d {

bool OrderState::complete() const {
  const auto counts = grid.counts();
  return std::none_of(counts.begin(), counts.end(), [](int n) { return n >= 0; });
}

void init_counts(CubeGrid& grid) {
  const std::size_t cubes = grid.cube_count();
  for (CubeId c = 0; c < cubes; ++c) grid.count(c) = 0;
  for (CubeId c = 0; c < cubes; ++c) {
    if (grid.has_unknown(c)) {
      for (CubeId nb : grid.neighbors(c)) grid.count(nb) += 1;
    }
    switch (grid.boundary_axes(c)) {
      case 3:
        grid.count(c) += kCornerIncrement;
        break;
      case 2:
        grid.count(c) += kEdgeIncrement;
        break;
      case 1:
        grid.count(c) += kSideIncrement;
        break;
      default:
        break;
    }
  }
  for (CubeId c = 0; c < cubes; ++c) {
    if (!grid.has_unknown(c)) grid.count(c) = -1;
  }
}

OrderState make_order_state(CubeGrid grid) {
  OrderState state;
  state.timestamp.assign(grid.cube_count(), -1);
  state.grid = std::move(grid);
  return state;
}

std::vector<CubeId> next_batch(const OrderState& state) {
  const CubeGrid& grid = state.grid;
  const std::size_t cubes = grid.cube_count();

  // Minimum over cubes still waiting; finished cubes (-1) do not take part.
  int min_count = std::numeric_limits<int>::max();
  for (CubeId c = 0; c < cubes; ++c) {
    const int n = grid.count(c);
    if (n >= 0) min_count = std::min(min_count, n);
  }
  std::vector<CubeId> batch;
  if (min_count == std::numeric_limits<int>::max()) return batch;

  std::vector<std::uint8_t> taken(cubes, 0);
  for (CubeId c = 0; c < cubes; ++c) {
    if (grid.count(c) != min_count) continue;
    const auto nbs = grid.neighbors(c);
    if (std::any_of(nbs.begin(), nbs.end(), [&](CubeId nb) { return taken[nb] != 0; })) continue;
    taken[c] = 1;
    batch.push_back(c);
  }
  return batch;
}

void complete_batch(OrderState& state, const std::vector<CubeId>& batch) {
  CubeGrid& grid = state.grid;
  for (CubeId c : batch) {
    if (state.finished(c)) throw std::logic_error("cube completed twice");
    grid.count(c) = -1;
    state.timestamp[c] = state.steps;
  }
  for (CubeId c : batch) {
    for (CubeId nb : grid.neighbors(c)) {
      int& n = grid.count(nb);
      if (n >= 0) n = std::max(n - 1, 0);
    }
  }
  ++state.steps;
}

FillReport run_fill(VideoVolume& volume, HoleMask& mask, const FseParams& params, FillOrder order, int threads) {
  params.validate();
  CubeGrid grid = partition(volume, mask, params.cube_edge);
  init_counts(grid);

  FillReport report;
  report.order = order;
  report.hole_samples = mask.count(SampleState::Unknown);
  for (CubeId c = 0; c < grid.cube_count(); ++c) report.hole_cubes += grid.has_unknown(c) ? 1 : 0;
  report.state = make_order_state(std::move(grid));
  OrderState& state = report.state;

  if (order == FillOrder::LineScan) {
    for (CubeId c = 0; c < state.grid.cube_count(); ++c) {
      if (!state.grid.has_unknown(c)) continue;
      const CubeFill fill = fill_cube(volume, mask, state.grid, c, params);
      if (fill.no_support) report.no_support_cubes.push_back(c);
      commit_cube(volume, mask, state.grid, c, fill.values);
      complete_batch(state, {c});
      report.batch_sizes.push_back(1);
    }
    return report;
  }

  const int team = threads > 0 ? threads : omp_get_max_threads();
  for (auto batch = next_batch(state); !batch.empty(); batch = next_batch(state)) {
    std::vector<CubeFill> fills(batch.size());
    std::vector<std::exception_ptr> errors(batch.size());
    const auto jobs = static_cast<long>(batch.size());

    // Every fill reads the volume as left by the previous batch; writes happen below.
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
    for (long i = 0; i < jobs; ++i) {
      const auto j = static_cast<std::size_t>(i);
      try {
        fills[j] = fill_cube(volume, mask, state.grid, batch[j], params);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    for (std::size_t j = 0; j < batch.size(); ++j) {
      if (fills[j].no_support) report.no_support_cubes.push_back(batch[j]);
      commit_cube(volume, mask, state.grid, batch[j], fills[j].values);
    }
    complete_batch(state, batch);
    report.batch_sizes.push_back(batch.size());
  }
  return report;
}

std::vector<std::vector<int>> export_order_map(const OrderState& state) {
  const CubeGrid& grid = state.grid;
  for (CubeId c = 0; c < grid.cube_count(); ++c) {
    if (grid.has_unknown(c) && !state.finished(c)) throw std::logic_error("fill run is not complete");
  }
  const Dims& d = grid.volume_dims();
  const int edge = grid.cube_edge();
  std::vector<std::vector<int>> frames(static_cast<std::size_t>(d.frames));
  for (int t = 0; t < d.frames; ++t) {
    auto& img = frames[static_cast<std::size_t>(t)];
    img.resize(static_cast<std::size_t>(d.width) * static_cast<std::size_t>(d.height));
    for (int y = 0; y < d.height; ++y) {
      for (int x = 0; x < d.width; ++x) {
        const CubeId c = grid.id({x / edge, y / edge, t / edge});
        img[static_cast<std::size_t>(y) * static_cast<std::size_t>(d.width) + static_cast<std::size_t>(x)] =
            grid.has_unknown(c) ? state.timestamp[c] : kOrderMapReserved;
      }
    }
  }
  return frames;
}

}  // namespace fse3d
