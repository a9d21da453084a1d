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

#include <cstddef>
#include <vector>

#include "fse3d/core.hpp"
#include "fse3d/params.hpp"

namespace fse3d {

enum class FillOrder { Optimized, LineScan };

/// Neighbor-count bookkeeping for the cube processing order.
///
/// N(c) counts the not-yet-extrapolated neighbors of a cube, padded at the
/// volume boundary (+9 side, +15 edge, +19 corner) since nothing outside the
/// volume can support a fill. Cubes with nothing left to fill hold -1.
struct OrderState {
  CubeGrid grid;
  std::vector<int> timestamp;  ///< step at which each cube was filled, -1 if never
  int steps = 0;               ///< batches (optimized) or cubes (line scan) completed

  [[nodiscard]] bool finished(CubeId c) const { return timestamp[c] >= 0; }
  /// True when no cube with N(c) >= 0 is left.
  [[nodiscard]] bool complete() const;
};

inline constexpr int kSideIncrement = 9;
inline constexpr int kEdgeIncrement = 15;
inline constexpr int kCornerIncrement = 19;

/// Initializes N(c) on `grid` in place.
void init_counts(CubeGrid& grid);

/// Wraps an initialized grid into an order state.
OrderState make_order_state(CubeGrid grid);

/// Next batch: unfinished cubes whose N equals the minimum non-negative N, taken
/// in scan order and skipping any cube adjacent to one already chosen.
/// Empty when nothing is left to process.
std::vector<CubeId> next_batch(const OrderState& state);

/// Marks the batch filled and decrements the counts of its neighbors.
void complete_batch(OrderState& state, const std::vector<CubeId>& batch);

struct FillReport {
  FillOrder order = FillOrder::Optimized;
  std::size_t hole_cubes = 0;
  std::size_t hole_samples = 0;
  std::vector<std::size_t> batch_sizes;  ///< per step; all ones for line scan
  std::vector<CubeId> no_support_cubes;
  OrderState state;
};

/// Fills every UNKNOWN sample of `volume` in place.
///
/// Optimized order: cubes of one batch are modeled against the volume as it was
/// at batch start, on up to `threads` OpenMP threads, then committed together.
/// Output is bit-identical for every thread count. Line scan is sequential.
/// `threads` <= 0 uses the OpenMP default.
FillReport run_fill(VideoVolume& volume, HoleMask& mask, const FseParams& params, FillOrder order, int threads = 1);

inline constexpr int kOrderMapReserved = -1;

/// Per-frame images (width x height, x fastest) holding the step at which the
/// covering cube was filled, or kOrderMapReserved for cubes without holes.
/// Throws std::logic_error if the run is not complete.
std::vector<std::vector<int>> export_order_map(const OrderState& state);

}  // namespace fse3d
