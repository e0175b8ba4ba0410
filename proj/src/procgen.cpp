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
#include "hck/procgen.hpp"

namespace hck {

namespace {

void append_box(TriangleMesh& mesh, const Vec3& center, const Vec3& size,
                int part_id) {
  const int base = static_cast<int>(mesh.vertices.size());
  const Vec3 h = 0.5 * size;
  for (int i = 0; i < 8; ++i) {
    mesh.vertices.emplace_back(center.x() + ((i & 1) ? h.x() : -h.x()),
                               center.y() + ((i & 2) ? h.y() : -h.y()),
                               center.z() + ((i & 4) ? h.z() : -h.z()));
  }
  // 12 triangles, outward winding
  static const int quads[6][4] = {
      {0, 2, 3, 1},  // -z
      {4, 5, 7, 6},  // +z
      {0, 1, 5, 4},  // -y
      {2, 6, 7, 3},  // +y
      {0, 4, 6, 2},  // -x
      {1, 3, 7, 5},  // +x
  };
  for (const auto& q : quads) {
    mesh.faces.push_back({base + q[0], base + q[1], base + q[2]});
    mesh.faces.push_back({base + q[0], base + q[2], base + q[3]});
    if (part_id >= 0) {
      mesh.face_part.push_back(part_id);
      mesh.face_part.push_back(part_id);
    }
  }
}

void append_quad(TriangleMesh& mesh, const Vec3& a, const Vec3& b, const Vec3& c,
                 const Vec3& d) {
  const int base = static_cast<int>(mesh.vertices.size());
  mesh.vertices.push_back(a);
  mesh.vertices.push_back(b);
  mesh.vertices.push_back(c);
  mesh.vertices.push_back(d);
  mesh.faces.push_back({base, base + 1, base + 2});
  mesh.faces.push_back({base, base + 2, base + 3});
}

struct PartBox {
  const char* part;
  Vec3 center;
  Vec3 size;
};

// Rough blocky anatomy; left is +Y, forward is +X, heights in meters.
const PartBox kHumanoidBoxes[] = {
    {"hips", {0.00, 0.00, 0.95}, {0.20, 0.34, 0.16}},
    {"spine", {0.00, 0.00, 1.08}, {0.18, 0.30, 0.10}},
    {"spine1", {0.00, 0.00, 1.18}, {0.18, 0.30, 0.10}},
    {"spine2", {0.00, 0.00, 1.30}, {0.20, 0.32, 0.14}},
    {"neck", {0.00, 0.00, 1.42}, {0.10, 0.12, 0.10}},
    {"head", {0.00, 0.00, 1.56}, {0.18, 0.20, 0.22}},
    {"leftShoulder", {0.00, 0.21, 1.35}, {0.10, 0.12, 0.10}},
    {"rightShoulder", {0.00, -0.21, 1.35}, {0.10, 0.12, 0.10}},
    {"leftArm", {0.00, 0.33, 1.20}, {0.09, 0.10, 0.30}},
    {"rightArm", {0.00, -0.33, 1.20}, {0.09, 0.10, 0.30}},
    {"leftForeArm", {0.00, 0.33, 0.91}, {0.08, 0.08, 0.28}},
    {"rightForeArm", {0.00, -0.33, 0.91}, {0.08, 0.08, 0.28}},
    {"leftHand", {0.00, 0.33, 0.71}, {0.06, 0.08, 0.12}},
    {"rightHand", {0.00, -0.33, 0.71}, {0.06, 0.08, 0.12}},
    {"leftHandIndex1", {0.00, 0.33, 0.62}, {0.05, 0.06, 0.06}},
    {"rightHandIndex1", {0.00, -0.33, 0.62}, {0.05, 0.06, 0.06}},
    {"leftUpLeg", {0.00, 0.10, 0.70}, {0.14, 0.14, 0.36}},
    {"rightUpLeg", {0.00, -0.10, 0.70}, {0.14, 0.14, 0.36}},
    {"leftLeg", {0.00, 0.10, 0.34}, {0.11, 0.11, 0.36}},
    {"rightLeg", {0.00, -0.10, 0.34}, {0.11, 0.11, 0.36}},
    {"leftFoot", {0.04, 0.10, 0.08}, {0.20, 0.10, 0.16}},
    {"rightFoot", {0.04, -0.10, 0.08}, {0.20, 0.10, 0.16}},
    {"leftToeBase", {0.17, 0.10, 0.04}, {0.08, 0.09, 0.08}},
    {"rightToeBase", {0.17, -0.10, 0.04}, {0.08, 0.09, 0.08}},
    // SMPL-X only
    {"leftEye", {0.095, 0.04, 1.60}, {0.02, 0.03, 0.03}},
    {"rightEye", {0.095, -0.04, 1.60}, {0.02, 0.03, 0.03}},
};

}  // namespace

TriangleMesh make_box(const Vec3& center, const Vec3& size) {
  TriangleMesh mesh;
  append_box(mesh, center, size, -1);
  return mesh;
}

TriangleMesh make_room(double width, double depth, double height) {
  TriangleMesh mesh;
  const double w = width, d = depth, h = height;
  // floor (two horizontal triangles, the largest cluster at minimal height)
  append_quad(mesh, {0, 0, 0}, {w, 0, 0}, {w, d, 0}, {0, d, 0});
  // walls
  append_quad(mesh, {0, 0, 0}, {0, 0, h}, {w, 0, h}, {w, 0, 0});
  append_quad(mesh, {w, 0, 0}, {w, 0, h}, {w, d, h}, {w, d, 0});
  append_quad(mesh, {w, d, 0}, {w, d, h}, {0, d, h}, {0, d, 0});
  append_quad(mesh, {0, d, 0}, {0, d, h}, {0, 0, h}, {0, 0, 0});
  return mesh;
}

FittedBody make_humanoid(BodyFamily family, int32_t instance_id,
                         double height_scale) {
  const BodyPartTaxonomy tax = build_taxonomy(family);
  FittedBody body;
  body.family = family;
  body.instance_id = instance_id;
  for (const PartBox& box : kHumanoidBoxes) {
    if (family == BodyFamily::kSmpl &&
        (std::string(box.part) == "leftEye" || std::string(box.part) == "rightEye"))
      continue;
    append_box(body.mesh, box.center * height_scale, box.size * height_scale,
               tax.source_id(box.part));
  }
  return body;
}

}  // namespace hck
