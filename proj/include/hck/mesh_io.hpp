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

#include "hck/labeling.hpp"

namespace hck {

// Wavefront OBJ subset: `v x y z` and triangular `f i j k` records
// (1-indexed, attribute suffixes after '/' ignored). Degenerate faces are
// dropped at load with a warning on stderr.
TriangleMesh load_obj(const std::string& path);
void save_obj(const std::string& path, const TriangleMesh& mesh);

// Sidecar JSON next to a body OBJ assigning source parts to face ranges:
//   { "family": "smplx", "instance_id": 1,
//     "part_ranges": [ {"part": "head", "begin": 0, "end": 120}, ... ] }
// Ranges are half-open over face indices and must jointly cover every face.
FittedBody load_fitted_body(const std::string& obj_path,
                            const std::string& sidecar_path);
void save_fitted_body(const std::string& obj_path,
                      const std::string& sidecar_path, const FittedBody& body);

}  // namespace hck
