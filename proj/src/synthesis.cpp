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
#include "hck/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hck/cloud_io.hpp"
#include "hck/parallel.hpp"

namespace hck {

void SynthConfig::validate() const {
  require(humans_min >= 0 && humans_max >= humans_min, "synth_bad_config",
          "humans_per_scene range must satisfy 0 <= min <= max");
  require(cameras_per_scene >= 1, "synth_bad_config",
          "need at least one camera per scene");
  require(placement_retries >= 1, "synth_bad_config",
          "placement retry budget must be positive");
  camera_template.validate();
}

FloorPlane find_floor(const TriangleMesh& scene) {
  require(!scene.faces.empty(), "empty_mesh", "scene mesh is empty");

  struct Bin {
    double area = 0.0;
    double z_weighted = 0.0;
    double min_x = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();
  };
  std::map<int64_t, Bin> bins;  // 1 cm height bins over horizontal faces

  for (std::size_t f = 0; f < scene.face_count(); ++f) {
    const Vec3 a = scene.face_vertex(f, 0);
    const Vec3 b = scene.face_vertex(f, 1);
    const Vec3 c = scene.face_vertex(f, 2);
    const Vec3 n = (b - a).cross(c - a);
    const double len = n.norm();
    if (len < 1e-15 || std::abs(n.z()) < 0.99 * len) continue;
    const double z = (a.z() + b.z() + c.z()) / 3.0;
    Bin& bin = bins[static_cast<int64_t>(std::floor(z * 100.0))];
    bin.area += 0.5 * len;
    bin.z_weighted += 0.5 * len * z;
    for (const Vec3& v : {a, b, c}) {
      bin.min_x = std::min(bin.min_x, v.x());
      bin.max_x = std::max(bin.max_x, v.x());
      bin.min_y = std::min(bin.min_y, v.y());
      bin.max_y = std::max(bin.max_y, v.y());
    }
  }
  require(!bins.empty(), "no_floor", "scene has no horizontal faces");

  double max_area = 0.0;
  for (const auto& [key, bin] : bins) max_area = std::max(max_area, bin.area);
  // lowest cluster among those comparable to the largest one
  for (const auto& [key, bin] : bins) {
    if (bin.area < 0.5 * max_area) continue;
    FloorPlane floor;
    floor.height = bin.z_weighted / bin.area;
    floor.min_x = bin.min_x;
    floor.max_x = bin.max_x;
    floor.min_y = bin.min_y;
    floor.max_y = bin.max_y;
    return floor;
  }
  fail("no_floor", "scene has no usable floor cluster");
}

namespace {

struct Aabb2 {
  double min_x, max_x, min_y, max_y;
  bool overlaps(const Aabb2& o) const {
    return min_x < o.max_x && o.min_x < max_x && min_y < o.max_y &&
           o.min_y < max_y;
  }
};

constexpr double kTwoPi = 6.283185307179586476925286766559;

Pose heading_about_z(double angle) {
  Pose pose;
  const double c = std::cos(angle), s = std::sin(angle);
  pose.rotation << c, -s, 0, s, c, 0, 0, 0, 1;
  return pose;
}

}  // namespace

ComposedScene place_humans(const TriangleMesh& scene,
                           const std::vector<FittedBody>& humans,
                           const SynthConfig& cfg, Rng& rng) {
  ComposedScene composed;
  composed.scene = scene;
  if (humans.empty()) return composed;

  const FloorPlane floor = find_floor(scene);
  std::vector<Aabb2> placed;

  for (std::size_t h = 0; h < humans.size(); ++h) {
    const FittedBody& human = humans[h];
    Vec3 lo, hi;
    human.mesh.aabb(lo, hi);

    bool done = false;
    for (int attempt = 0; attempt < cfg.placement_retries && !done; ++attempt) {
      Pose pose = heading_about_z(rng.uniform(0.0, kTwoPi));

      // rotated footprint about the origin
      double rx = 0, ry = 0;
      for (const int ix : {0, 1})
        for (const int iy : {0, 1}) {
          const Vec3 corner(ix ? hi.x() : lo.x(), iy ? hi.y() : lo.y(), 0.0);
          const Vec3 rot = pose.rotation * corner;
          rx = std::max(rx, std::abs(rot.x()));
          ry = std::max(ry, std::abs(rot.y()));
        }
      if (floor.min_x + rx > floor.max_x - rx || floor.min_y + ry > floor.max_y - ry)
        continue;  // human larger than the floor plane

      const double x = rng.uniform(floor.min_x + rx, floor.max_x - rx);
      const double y = rng.uniform(floor.min_y + ry, floor.max_y - ry);
      const Aabb2 box{x - rx, x + rx, y - ry, y + ry};
      bool collides = false;
      for (const Aabb2& other : placed)
        if (box.overlaps(other)) {
          collides = true;
          break;
        }
      if (collides) continue;

      pose.translation = Vec3(x, y, floor.height - lo.z());
      FittedBody placed_body = human;
      placed_body.mesh.transform(pose);
      placed_body.instance_id = static_cast<int32_t>(h) + 1;
      composed.bodies.push_back(std::move(placed_body));
      placed.push_back(box);
      done = true;
    }
    require(done, "placement_failed",
            "placement failed for human " + std::to_string(h + 1));
  }
  return composed;
}

std::vector<CameraModel> sample_cameras(const FloorPlane& floor,
                                        const CameraModel& intrinsics, int count,
                                        Rng& rng) {
  const double cx = 0.5 * (floor.min_x + floor.max_x);
  const double cy = 0.5 * (floor.min_y + floor.max_y);
  const double radius =
      0.46 * std::min(floor.max_x - floor.min_x, floor.max_y - floor.min_y);

  std::vector<CameraModel> cams;
  for (int i = 0; i < count; ++i) {
    const double angle = rng.uniform(0.0, kTwoPi);
    const double height = floor.height + rng.uniform(1.2, 1.9);
    const Vec3 eye(cx + radius * std::cos(angle), cy + radius * std::sin(angle),
                   height);
    const Vec3 target(cx, cy, floor.height + 0.9);

    Vec3 forward = (target - eye).normalized();
    Vec3 up = Vec3::UnitZ();
    if (std::abs(forward.dot(up)) > 0.999) up = Vec3::UnitX();
    const Vec3 right = forward.cross(up).normalized();
    const Vec3 down = forward.cross(right);

    CameraModel cam = intrinsics;
    cam.pose.rotation.row(0) = right;
    cam.pose.rotation.row(1) = down;
    cam.pose.rotation.row(2) = forward;
    cam.pose.translation = -(cam.pose.rotation * eye);
    cam.validate();
    cams.push_back(cam);
  }
  return cams;
}

std::vector<LabeledPointCloud> generate_labeled_scene(
    const ComposedScene& composed, const std::optional<NoiseConfig>& noise,
    Rng& rng) {
  require(!composed.cameras.empty(), "no_cameras", "composed scene has no cameras");

  // render copies carry merged final part ids so label maps are in the
  // 15-part vocabulary
  std::vector<TriangleMesh> merged;
  merged.reserve(composed.bodies.size());
  for (const FittedBody& body : composed.bodies) {
    const BodyPartTaxonomy tax = build_taxonomy(body.family);
    TriangleMesh m = body.mesh;
    for (auto& part : m.face_part) part = tax.merge(part);
    merged.push_back(std::move(m));
  }

  std::vector<RenderInstance> instances;
  instances.push_back({&composed.scene, 0});
  for (std::size_t b = 0; b < merged.size(); ++b)
    instances.push_back({&merged[b], composed.bodies[b].instance_id});

  std::vector<LabeledPointCloud> clouds(composed.cameras.size());
  for (std::size_t i = 0; i < composed.cameras.size(); ++i) {
    const CameraModel& cam = composed.cameras[i];
    const RenderResult render = rasterize_meshes(instances, cam);
    if (noise) {
      Rng cam_rng = rng.stream(i);
      const DepthImage noisy = simulate_kinect_noise(render.depth, cam, *noise, cam_rng);
      clouds[i] = backproject_depth(noisy, &render.instance, &render.part, cam,
                                    static_cast<int>(i));
    } else {
      clouds[i] = backproject_depth(render.depth, &render.instance, &render.part,
                                    cam, static_cast<int>(i));
    }
  }
  return clouds;
}

FilterResult filter_sparse(std::vector<LabeledPointCloud> clouds,
                           std::size_t min_points) {
  FilterResult out;
  for (std::size_t i = 0; i < clouds.size(); ++i) {
    if (clouds[i].size() < min_points)
      out.rejected.emplace_back(i, clouds[i].size());
    else
      out.kept.push_back(std::move(clouds[i]));
  }
  return out;
}

DatasetManifest generate_dataset(const std::vector<TriangleMesh>& scene_assets,
                                 const std::vector<FittedBody>& human_assets,
                                 const SynthConfig& cfg,
                                 const std::optional<NoiseConfig>& noise,
                                 int scene_count, const std::string& out_dir) {
  cfg.validate();
  if (noise) noise->validate();
  require(!scene_assets.empty(), "no_assets", "no scene assets");
  require(cfg.humans_max == 0 || !human_assets.empty(), "no_assets",
          "no human assets");

  DatasetManifest manifest;
  manifest.seed = cfg.rng_seed;
  manifest.synth = cfg;
  manifest.noise = noise;

  std::vector<SceneRecord> records(scene_count);
  std::vector<uint8_t> skipped(scene_count, 0);

  parallel_for(static_cast<std::size_t>(scene_count), [&](std::size_t s) {
    Rng scene_rng = Rng(cfg.rng_seed).stream(s);
    const TriangleMesh& scene =
        scene_assets[scene_rng.uniform_int(0, scene_assets.size() - 1)];
    const int human_count =
        static_cast<int>(scene_rng.uniform_int(cfg.humans_min, cfg.humans_max));

    std::vector<FittedBody> humans;
    for (int h = 0; h < human_count; ++h)
      humans.push_back(
          human_assets[scene_rng.uniform_int(0, human_assets.size() - 1)]);

    SceneRecord record;
    record.scene_id = static_cast<int>(s);
    record.human_count = human_count;

    ComposedScene composed;
    try {
      composed = place_humans(scene, humans, cfg, scene_rng);
    } catch (const Error&) {
      skipped[s] = 1;  // placement failure: log and skip the scene
      return;
    }
    composed.cameras = sample_cameras(find_floor(scene), cfg.camera_template,
                                      cfg.cameras_per_scene, scene_rng);

    Rng noise_rng = scene_rng.stream(0x6e6f6973);
    std::vector<LabeledPointCloud> clouds =
        generate_labeled_scene(composed, noise, noise_rng);

    for (std::size_t c = 0; c < clouds.size(); ++c) {
      if (clouds[c].size() < cfg.min_points) {
        record.rejected.emplace_back(static_cast<int>(c), clouds[c].size());
        continue;
      }
      char name[64];
      std::snprintf(name, sizeof(name), "scene_%04zu_cam_%zu.hck", s, c);
      const std::string path = out_dir + "/" + name;
      write_labeled_cloud(path, clouds[c]);
      record.clouds.push_back(
          {name, clouds[c].size(), static_cast<int>(s), static_cast<int>(c)});
    }
    records[s] = std::move(record);
  });

  for (int s = 0; s < scene_count; ++s) {
    if (skipped[s])
      manifest.skipped_scenes.push_back(s);
    else
      manifest.scenes.push_back(std::move(records[s]));
  }
  return manifest;
}

}  // namespace hck
