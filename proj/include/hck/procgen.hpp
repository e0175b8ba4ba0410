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

#include "hck/labeling.hpp"

namespace hck {

// Procedural stand-in assets. Real fitted body meshes are license-bound
// inputs; these blocky but fully part-labeled humans let the pipeline, the
// tests, and the CLI run without them. World frame is Z-up, meters.

TriangleMesh make_box(const Vec3& center, const Vec3& size);

// floor at z = 0 spanning [0,width] x [0,depth], plus four walls
TriangleMesh make_room(double width, double depth, double height = 2.5);

// A humanoid standing at the origin on z = 0, about 1.7 m * height_scale
// tall, facing +X. Every source part of the family appears on some faces.
FittedBody make_humanoid(BodyFamily family, int32_t instance_id,
                         double height_scale = 1.0);

}  // namespace hck
