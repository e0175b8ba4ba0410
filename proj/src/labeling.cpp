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
#include "hck/labeling.hpp"

#include <limits>

#include "hck/parallel.hpp"

namespace hck {

void FittedBody::validate(const BodyPartTaxonomy& taxonomy) const {
  mesh.validate();
  require(instance_id > 0, "body_bad_instance", "instance_id must be positive");
  require(mesh.has_parts(), "unlabeled_face", "body mesh has no face parts");
  require(taxonomy.family() == family, "body_family_mismatch",
          "taxonomy family does not match body family");
  for (std::size_t f = 0; f < mesh.face_count(); ++f)
    require(taxonomy.valid_source_id(mesh.face_part[f]), "unlabeled_face",
            "face " + std::to_string(f) + " carries an invalid part id");
}

namespace {

std::vector<std::unique_ptr<DistanceAccelerator>> build_accels(
    const std::vector<FittedBody>& bodies) {
  std::vector<std::unique_ptr<DistanceAccelerator>> accels;
  accels.reserve(bodies.size());
  for (const FittedBody& body : bodies)
    accels.push_back(std::make_unique<DistanceAccelerator>(body.mesh));
  return accels;
}

std::vector<const DistanceAccelerator*> raw_pointers(
    const std::vector<std::unique_ptr<DistanceAccelerator>>& accels) {
  std::vector<const DistanceAccelerator*> out;
  out.reserve(accels.size());
  for (const auto& a : accels) out.push_back(a.get());
  return out;
}

}  // namespace

HumanLabels segment_human_points(
    const LabeledPointCloud& cloud, const std::vector<FittedBody>& bodies,
    const std::vector<const DistanceAccelerator*>& accels,
    const LabelConfig& cfg) {
  require(cfg.distance_threshold > 0, "bad_threshold",
          "distance threshold must be positive");
  require(accels.size() == bodies.size(), "accel_mismatch",
          "one accelerator per body required");

  HumanLabels out;
  out.semantic.assign(cloud.size(), kSemanticBackground);
  out.instance.assign(cloud.size(), 0);

  if (bodies.empty()) return out;

  parallel_for(cloud.size(), [&](std::size_t i) {
    double best = std::numeric_limits<double>::infinity();
    int32_t best_instance = 0;
    for (std::size_t b = 0; b < bodies.size(); ++b) {
      const double d = accels[b]->distance(cloud.positions[i]);
      if (d < best || (d == best && bodies[b].instance_id < best_instance)) {
        best = d;
        best_instance = bodies[b].instance_id;
      }
    }
    if (best < cfg.distance_threshold) {
      out.semantic[i] = kSemanticHuman;
      out.instance[i] = best_instance;
    }
  });
  return out;
}

HumanLabels segment_human_points(const LabeledPointCloud& cloud,
                                 const std::vector<FittedBody>& bodies,
                                 const LabelConfig& cfg) {
  const auto owned = build_accels(bodies);
  return segment_human_points(cloud, bodies, raw_pointers(owned), cfg);
}

std::vector<uint8_t> assign_and_merge_parts(
    const LabeledPointCloud& cloud, const std::vector<FittedBody>& bodies,
    const std::vector<const DistanceAccelerator*>& accels,
    const HumanLabels& labels, const BodyPartTaxonomy& taxonomy) {
  require(labels.semantic.size() == cloud.size() &&
              labels.instance.size() == cloud.size(),
          "label_size_mismatch", "human labels do not match cloud size");
  require(accels.size() == bodies.size(), "accel_mismatch",
          "one accelerator per body required");

  // body lookup by instance id
  std::vector<int> body_of_instance;
  for (std::size_t b = 0; b < bodies.size(); ++b) {
    const int32_t id = bodies[b].instance_id;
    if (static_cast<std::size_t>(id) >= body_of_instance.size())
      body_of_instance.resize(id + 1, -1);
    body_of_instance[id] = static_cast<int>(b);
  }

  std::vector<uint8_t> part(cloud.size(), 0);
  parallel_for(cloud.size(), [&](std::size_t i) {
    if (labels.semantic[i] != kSemanticHuman) return;
    const int32_t inst = labels.instance[i];
    require(inst > 0 && static_cast<std::size_t>(inst) < body_of_instance.size() &&
                body_of_instance[inst] >= 0,
            "unknown_instance", "human point with unknown instance id");
    const int b = body_of_instance[inst];
    const NearestHit hit = accels[b]->nearest(cloud.positions[i]);
    const TriangleMesh& mesh = bodies[b].mesh;
    require(mesh.has_parts(), "unlabeled_face", "body mesh has no face parts");
    const int source = mesh.face_part[hit.face];
    require(taxonomy.valid_source_id(source), "unlabeled_face",
            "nearest face carries an invalid part id");
    part[i] = static_cast<uint8_t>(taxonomy.merge(source));
  });
  return part;
}

std::vector<uint8_t> assign_and_merge_parts(const LabeledPointCloud& cloud,
                                            const std::vector<FittedBody>& bodies,
                                            const HumanLabels& labels,
                                            const BodyPartTaxonomy& taxonomy) {
  const auto owned = build_accels(bodies);
  return assign_and_merge_parts(cloud, bodies, raw_pointers(owned), labels, taxonomy);
}

PointLabels refine_with_released_masks(const PointLabels& labels,
                                       const std::vector<uint8_t>& external_mask) {
  const std::size_t n = labels.semantic.size();
  require(labels.instance.size() == n && labels.part.size() == n,
          "label_size_mismatch", "label arrays disagree in size");
  require(external_mask.size() == n, "mask_size_mismatch",
          "external mask must have one flag per point");

  PointLabels out = labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels.semantic[i] == kSemanticHuman && !external_mask[i]) {
      out.semantic[i] = kSemanticBackground;
      out.instance[i] = 0;
      out.part[i] = 0;
    }
  }
  return out;
}

LabeledPointCloud pseudo_label(const LabeledPointCloud& cloud,
                               const std::vector<FittedBody>& bodies,
                               const BodyPartTaxonomy& taxonomy,
                               const LabelConfig& cfg) {
  const auto owned = build_accels(bodies);
  const auto accels = raw_pointers(owned);
  const HumanLabels human = segment_human_points(cloud, bodies, accels, cfg);
  const std::vector<uint8_t> parts =
      assign_and_merge_parts(cloud, bodies, accels, human, taxonomy);

  LabeledPointCloud out = cloud;
  out.semantic = human.semantic;
  out.instance = human.instance;
  out.part = parts;
  return out;
}

}  // namespace hck
