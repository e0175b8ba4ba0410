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
#include <vector>

#include "hck/geometry.hpp"

namespace hck {

// Pixel (r, c) samples the ray through image coordinates (c + 0.5, r + 0.5);
// a point projecting to continuous (u, v) lands in pixel (floor(v), floor(u)).
struct PixelHit {
  bool in_frame = false;
  int row = 0, col = 0;
  double u = 0.0, v = 0.0;  // continuous image coordinates
  double depth = 0.0;       // camera-frame z
};

PixelHit project_point(const Vec3& world, const CameraModel& cam);
std::vector<PixelHit> project_points(const std::vector<Vec3>& points,
                                     const CameraModel& cam);

// One point per valid pixel, world frame. Optional label images supply the
// instance / part channels; provenance records (camera id, row, col).
LabeledPointCloud backproject_depth(const DepthImage& depth,
                                    const IndexImage* instance,
                                    const IndexImage* part,
                                    const CameraModel& cam, int camera_id = 0);

// Image-baseline mask lifting: each cloud point inherits the 2D mask value at
// its pixel (provenance when recorded for this camera, projection otherwise).
// Points landing on invalid depth pixels or out of frame stay 0.
std::vector<int32_t> project_2d_mask_to_3d(const IndexImage& mask2d,
                                           const DepthImage& depth,
                                           const CameraModel& cam,
                                           const LabeledPointCloud& cloud,
                                           int camera_id = 0);

}  // namespace hck
