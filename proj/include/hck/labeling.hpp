/*
 * Copyright (c) 2026, the hck authors.
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

#include <memory>
#include <vector>

#include "hck/distance.hpp"
#include "hck/geometry.hpp"
#include "hck/taxonomy.hpp"

namespace hck {

// A fitted body-model surface: mesh faces carry source part ids valid in
// `taxonomy`; the body itself is an input here, never fitted by this code.
struct FittedBody {
  TriangleMesh mesh;
  int32_t instance_id = 0;
  BodyFamily family = BodyFamily::kSmplX;

  void validate(const BodyPartTaxonomy& taxonomy) const;
};

struct LabelConfig {
  double distance_threshold = 0.05;  // meters, strict "under"
};

struct HumanLabels {
  std::vector<uint8_t> semantic;
  std::vector<int32_t> instance;
};

// A point is human iff its distance to at least one body mesh is strictly
// under the threshold; the instance is the nearest such body (ties to the
// lower instance id). Empty body list labels everything background.
HumanLabels segment_human_points(const LabeledPointCloud& cloud,
                                 const std::vector<FittedBody>& bodies,
                                 const LabelConfig& cfg);

// Same, against prebuilt accelerators (one per body, same order).
HumanLabels segment_human_points(const LabeledPointCloud& cloud,
                                 const std::vector<FittedBody>& bodies,
                                 const std::vector<const DistanceAccelerator*>& accels,
                                 const LabelConfig& cfg);

// For each human point: nearest face of its assigned body -> source part ->
// merge map -> final part id. Background points get part 0.
std::vector<uint8_t> assign_and_merge_parts(
    const LabeledPointCloud& cloud, const std::vector<FittedBody>& bodies,
    const std::vector<const DistanceAccelerator*>& accels,
    const HumanLabels& labels, const BodyPartTaxonomy& taxonomy);

std::vector<uint8_t> assign_and_merge_parts(const LabeledPointCloud& cloud,
                                            const std::vector<FittedBody>& bodies,
                                            const HumanLabels& labels,
                                            const BodyPartTaxonomy& taxonomy);

// Keeps a human label only where the externally released mask agrees;
// instance and part ids are zeroed where the label is removed.
struct PointLabels {
  std::vector<uint8_t> semantic;
  std::vector<int32_t> instance;
  std::vector<uint8_t> part;
};

PointLabels refine_with_released_masks(const PointLabels& labels,
                                       const std::vector<uint8_t>& external_mask);

// Convenience: full pseudo-label pass writing semantic/instance/part into a
// copy of the cloud.
LabeledPointCloud pseudo_label(const LabeledPointCloud& cloud,
                               const std::vector<FittedBody>& bodies,
                               const BodyPartTaxonomy& taxonomy,
                               const LabelConfig& cfg);

}  // namespace hck
