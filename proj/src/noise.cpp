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
#include "hck/noise.hpp"

#include <algorithm>
#include <cmath>

namespace hck {

void NoiseConfig::validate() const {
  require(scale_factor > 0 && baseline > 0 && sigma >= 0, "noise_bad_config",
          "scale_factor and baseline must be positive, sigma non-negative");
  require(filter_size >= 1, "noise_bad_config", "filter_size must be >= 1");
  require(z_near > 0 && z_near < z_far, "noise_bad_config",
          "need 0 < z_near < z_far");
}

DepthImage simulate_kinect_noise(const DepthImage& depth, const CameraModel& cam,
                                 const NoiseConfig& cfg, Rng& rng) {
  cfg.validate();
  require(depth.width == cam.width && depth.height == cam.height,
          "dimension_mismatch", "depth image does not match camera size");

  const int w = depth.width;
  const int h = depth.height;
  const double k = cam.fx * cfg.baseline;   // disparity = k / z
  const double step = 1.0 / cfg.scale_factor;

  // input disparities, for the discontinuity test
  std::vector<double> disparity(depth.depth.size(), 0.0);
  for (std::size_t i = 0; i < depth.depth.size(); ++i)
    if (depth.valid[i]) disparity[i] = k / depth.depth[i];

  DepthImage out = DepthImage::with_size(w, h);

  // the window spans offsets [-size/2, (size-1)/2] on both axes
  const int lo = -cfg.filter_size / 2;
  const int hi = (cfg.filter_size - 1) / 2;

  // Gaussian draws happen in row-major pixel order over valid pixels only,
  // which pins the stream layout for reproducibility.
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const std::size_t px = depth.index(r, c);
      if (!depth.valid[px]) continue;

      double d = disparity[px];
      if (cfg.sigma > 0) d += cfg.sigma * rng.gaussian();
      d = std::round(d * cfg.scale_factor) * step;
      if (d <= 0.0) continue;  // disparity folded to or below zero
      const double z = k / d;
      if (z < cfg.z_near || z > cfg.z_far) continue;

      // depth-discontinuity dropout around strong disparity edges
      std::size_t n_valid = 0, n_far = 0;
      for (int dr = lo; dr <= hi; ++dr) {
        const int rr = r + dr;
        if (rr < 0 || rr >= h) continue;
        for (int dc = lo; dc <= hi; ++dc) {
          const int cc = c + dc;
          if (cc < 0 || cc >= w) continue;
          const std::size_t q = depth.index(rr, cc);
          if (!depth.valid[q]) continue;
          ++n_valid;
          if (std::abs(disparity[q] - disparity[px]) > step) ++n_far;
        }
      }
      if (2 * n_far > n_valid) continue;

      out.depth[px] = z;
      out.valid[px] = 1;
    }
  }
  return out;
}

}  // namespace hck
