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

#include <string>

#include "hck/geometry.hpp"

namespace hck {

// Labeled-cloud container, little-endian:
//   magic "HCK1" | u32 flags (bit 0: provenance) | u64 point count
//   per point: f32 x,y,z | u8 semantic | i32 instance | u8 part
//              [ i32 camera, row, col when flagged ]
// Positions are stored in 32-bit floats; writing refuses clouds violating
// the label invariants. Errors: bad_magic / truncated / flag_mismatch.
void write_labeled_cloud(const std::string& path, const LabeledPointCloud& cloud);
LabeledPointCloud read_labeled_cloud(const std::string& path);

// Test-fixture image dumps: u32 width | u32 height | row-major payload
// (f64 for depth with 0.0 marking invalid pixels, i32 for index images).
void write_depth_image(const std::string& path, const DepthImage& img);
DepthImage read_depth_image(const std::string& path);
void write_index_image(const std::string& path, const IndexImage& img);
IndexImage read_index_image(const std::string& path);

// Lossy viewer export (ASCII PLY with label scalars).
void export_ply(const std::string& path, const LabeledPointCloud& cloud);

}  // namespace hck
