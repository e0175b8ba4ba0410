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
#include "hck/projection.hpp"

#include <cmath>

namespace hck {

PixelHit project_point(const Vec3& world, const CameraModel& cam) {
  PixelHit hit;
  const Vec3 p = cam.to_camera(world);
  hit.depth = p.z();
  if (!(p.z() > 0.0)) return hit;  // behind camera (or on its plane)
  hit.u = cam.fx * p.x() / p.z() + cam.cx;
  hit.v = cam.fy * p.y() / p.z() + cam.cy;
  hit.col = static_cast<int>(std::floor(hit.u));
  hit.row = static_cast<int>(std::floor(hit.v));
  hit.in_frame = hit.col >= 0 && hit.col < cam.width && hit.row >= 0 &&
                 hit.row < cam.height;
  return hit;
}

std::vector<PixelHit> project_points(const std::vector<Vec3>& points,
                                     const CameraModel& cam) {
  std::vector<PixelHit> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    out[i] = project_point(points[i], cam);
  return out;
}

LabeledPointCloud backproject_depth(const DepthImage& depth,
                                    const IndexImage* instance,
                                    const IndexImage* part,
                                    const CameraModel& cam, int camera_id) {
  require(depth.width == cam.width && depth.height == cam.height,
          "dimension_mismatch", "depth image does not match camera size");
  for (const IndexImage* img : {instance, part}) {
    if (img)
      require(img->width == depth.width && img->height == depth.height,
              "dimension_mismatch", "label image does not match depth image");
  }

  LabeledPointCloud cloud;
  const std::size_t n = depth.valid_count();
  cloud.positions.reserve(n);
  cloud.semantic.reserve(n);
  cloud.instance.reserve(n);
  cloud.part.reserve(n);
  cloud.provenance.reserve(n);

  for (int r = 0; r < depth.height; ++r) {
    for (int c = 0; c < depth.width; ++c) {
      if (!depth.is_valid(r, c)) continue;
      const double z = depth.at(r, c);
      const Vec3 p_cam((c + 0.5 - cam.cx) / cam.fx * z,
                       (r + 0.5 - cam.cy) / cam.fy * z, z);
      cloud.positions.push_back(cam.to_world(p_cam));
      const int32_t inst = instance ? instance->at(r, c) : 0;
      const int32_t prt = part ? part->at(r, c) : 0;
      cloud.instance.push_back(inst);
      cloud.part.push_back(static_cast<uint8_t>(prt));
      cloud.semantic.push_back(inst != 0 || prt != 0 ? kSemanticHuman
                                                     : kSemanticBackground);
      cloud.provenance.push_back({camera_id, r, c});
    }
  }
  return cloud;
}

std::vector<int32_t> project_2d_mask_to_3d(const IndexImage& mask2d,
                                           const DepthImage& depth,
                                           const CameraModel& cam,
                                           const LabeledPointCloud& cloud,
                                           int camera_id) {
  require(mask2d.width == depth.width && mask2d.height == depth.height,
          "dimension_mismatch", "mask does not match depth image");
  require(depth.width == cam.width && depth.height == cam.height,
          "dimension_mismatch", "depth image does not match camera size");

  std::vector<int32_t> labels(cloud.size(), 0);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    int row, col;
    if (cloud.has_provenance()) {
      const Provenance& prov = cloud.provenance[i];
      require(prov.camera == camera_id, "camera_mismatch",
              "point provenance refers to a different camera");
      row = prov.row;
      col = prov.col;
    } else {
      const PixelHit hit = project_point(cloud.positions[i], cam);
      if (!hit.in_frame) continue;
      row = hit.row;
      col = hit.col;
    }
    if (!depth.is_valid(row, col)) continue;
    labels[i] = mask2d.at(row, col);
  }
  return labels;
}

}  // namespace hck
