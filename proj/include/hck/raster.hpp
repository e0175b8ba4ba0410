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

#include <vector>

#include "hck/geometry.hpp"

namespace hck {

struct RenderInstance {
  const TriangleMesh* mesh = nullptr;
  int32_t instance = 0;  // 0 = background geometry
};

struct RenderResult {
  DepthImage depth;
  IndexImage instance;
  IndexImage part;   // face_part of the winning face, 0 for part-less meshes
  IndexImage face;   // 1 + (mesh-local face index) of the winner, 0 = none
};

// Software z-buffer. A pixel is filled when its center lies inside the
// projected triangle (top-left tie rule, no antialiasing); depth is
// perspective-correct camera-frame z; the nearest fragment wins.
RenderResult rasterize_meshes(const std::vector<RenderInstance>& meshes,
                              const CameraModel& cam);

}  // namespace hck
