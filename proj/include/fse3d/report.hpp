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

#include <string>

#include <json.hpp>

#include "fse3d/metrics.hpp"
#include "fse3d/params.hpp"
#include "fse3d/scheduler.hpp"

namespace fse3d {

std::string order_name(FillOrder order);
FillOrder parse_order(const std::string& name);

/// Machine-readable fill report. Contains nothing that depends on thread count or timing.
nlohmann::json fill_report_json(const FillReport& report, const FseParams& params);

/// Aligned plain-text summary of a fill report.
std::string fill_report_text(const FillReport& report);

nlohmann::json quality_report_json(const QualityReport& quality);
std::string quality_report_text(const QualityReport& quality);

}  // namespace fse3d
