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

#include "hck/geometry.hpp"
#include "hck/rng.hpp"

namespace hck {

// Structured-light noise model in the disparity domain
// d = fx * baseline / z. Gaussian perturbation, quantization to a
// 1/scale_factor grid, range clipping, and discontinuity dropout.
struct NoiseConfig {
  double scale_factor = 100.0;  // quantization denominator: steps of 1/100
  double baseline = 0.075;      // meters
  double sigma = 0.5;           // disparity-domain std deviation
  int filter_size = 6;          // discontinuity window, pixels
  double z_near = 0.01;         // meters
  double z_far = 20.0;          // meters

  void validate() const;
};

// Per valid pixel: disparity -> +N(0, sigma) -> quantize -> depth. The pixel
// is invalidated when the depth leaves [z_near, z_far] or when, inside the
// filter_size x filter_size window, more than half of the valid input pixels
// differ from the center by over one quantization step in disparity.
// Deterministic for a given rng state; output validity never exceeds input.
DepthImage simulate_kinect_noise(const DepthImage& depth, const CameraModel& cam,
                                 const NoiseConfig& cfg, Rng& rng);

}  // namespace hck
