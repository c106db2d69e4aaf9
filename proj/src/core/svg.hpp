// Copyright 2026 The narrative-net Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace narnet {

struct HistogramGroup {
  std::string label;
  std::vector<double> values;
};

// Renders overlaid per-group histogram outlines over a shared binning of
// the pooled value range, with a vertical line at each group mean.
// Deterministic output: fixed layout, fixed palette, fixed-precision
// coordinates. Groups without values are skipped; with no data at all a
// labeled empty frame is produced.
std::string grouped_histogram_svg(const std::string& title,
                                  const std::vector<HistogramGroup>& groups, int bins = 30);

}  // namespace narnet
