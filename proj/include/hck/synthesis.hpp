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

#include <optional>
#include <string>
#include <vector>

#include "hck/labeling.hpp"
#include "hck/noise.hpp"
#include "hck/raster.hpp"
#include "hck/rng.hpp"

namespace hck {

struct SynthConfig {
  std::size_t min_points = 20000;
  int humans_min = 1;
  int humans_max = 10;
  int cameras_per_scene = 1;
  uint64_t rng_seed = 0;
  int placement_retries = 200;
  CameraModel camera_template;  // intrinsics shared by sampled cameras

  void validate() const;
};

struct ComposedScene {
  TriangleMesh scene;
  std::vector<FittedBody> bodies;   // posed, world frame, instance ids 1..N
  std::vector<CameraModel> cameras;
};

// Horizontal support detection: the largest axis-aligned horizontal face
// cluster at minimal height.
struct FloorPlane {
  double height = 0.0;
  double min_x = 0.0, max_x = 0.0;
  double min_y = 0.0, max_y = 0.0;
};

FloorPlane find_floor(const TriangleMesh& scene);

// Rigidly drops each human onto the floor at a sampled position/heading;
// rejection-sampled so the humans' world AABBs stay pairwise disjoint and
// inside the floor rectangle. Throws "placement_failed" when the retry
// budget runs out for some human.
ComposedScene place_humans(const TriangleMesh& scene,
                           const std::vector<FittedBody>& humans,
                           const SynthConfig& cfg, Rng& rng);

// Cameras on a ring inside the scene, aimed at its center.
std::vector<CameraModel> sample_cameras(const FloorPlane& floor,
                                        const CameraModel& intrinsics, int count,
                                        Rng& rng);

// Render + (optional) noise + backprojection, one cloud per camera. Labels
// are taken from the rendered label maps; a pixel invalidated by noise
// contributes no point. Part channel carries merged final ids.
std::vector<LabeledPointCloud> generate_labeled_scene(
    const ComposedScene& composed, const std::optional<NoiseConfig>& noise,
    Rng& rng);

struct FilterResult {
  std::vector<LabeledPointCloud> kept;
  std::vector<std::pair<std::size_t, std::size_t>> rejected;  // (index, count)
};

FilterResult filter_sparse(std::vector<LabeledPointCloud> clouds,
                           std::size_t min_points);

struct CloudRecord {
  std::string path;
  std::size_t point_count = 0;
  int scene_id = 0;
  int camera_id = 0;
};

struct SceneRecord {
  int scene_id = 0;
  int human_count = 0;
  std::vector<CloudRecord> clouds;
  std::vector<std::pair<int, std::size_t>> rejected;  // (camera id, count)
};

struct DatasetManifest {
  int format_version = 1;
  uint64_t seed = 0;
  SynthConfig synth;
  std::optional<NoiseConfig> noise;
  std::vector<SceneRecord> scenes;
  std::vector<int> skipped_scenes;  // placement failures
};

// End-to-end dataset generation: per scene, sample a human count, place,
// render every camera, add noise, backproject, filter, and write cloud
// files under out_dir. Scenes own derived rng streams, so regeneration with
// one seed is byte-identical regardless of the worker count.
DatasetManifest generate_dataset(const std::vector<TriangleMesh>& scene_assets,
                                 const std::vector<FittedBody>& human_assets,
                                 const SynthConfig& cfg,
                                 const std::optional<NoiseConfig>& noise,
                                 int scene_count, const std::string& out_dir);

}  // namespace hck
