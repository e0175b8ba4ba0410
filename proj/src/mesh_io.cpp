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
#include "hck/mesh_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hck {

namespace {
using nlohmann::json;

int parse_obj_index(const std::string& token, std::size_t vertex_count,
                    const std::string& path) {
  // "i", "i/t", "i/t/n", "i//n" all reduce to the vertex index
  const std::size_t slash = token.find('/');
  const std::string head = slash == std::string::npos ? token : token.substr(0, slash);
  int idx = 0;
  try {
    idx = std::stoi(head);
  } catch (const std::exception&) {
    fail("obj_parse", "bad face index '" + token + "' in " + path);
  }
  if (idx < 0) idx = static_cast<int>(vertex_count) + idx + 1;  // negative = relative
  require(idx >= 1 && static_cast<std::size_t>(idx) <= vertex_count, "obj_parse",
          "face index out of range in " + path);
  return idx - 1;
}

}  // namespace

TriangleMesh load_obj(const std::string& path) {
  std::ifstream is(path);
  require(static_cast<bool>(is), "io_error", "cannot open: " + path);

  TriangleMesh mesh;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      double x, y, z;
      require(static_cast<bool>(ls >> x >> y >> z), "obj_parse",
              "bad vertex record in " + path);
      mesh.vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string token;
      while (ls >> token)
        idx.push_back(parse_obj_index(token, mesh.vertices.size(), path));
      require(idx.size() >= 3, "obj_parse", "face with <3 vertices in " + path);
      for (std::size_t k = 1; k + 1 < idx.size(); ++k)
        mesh.faces.push_back({idx[0], idx[k], idx[k + 1]});
    }
    // every other record type (vn, vt, o, g, usemtl, #...) is ignored
  }

  const std::size_t dropped = mesh.remove_degenerate_faces();
  if (dropped > 0)
    std::cerr << "warning: dropped " << dropped << " degenerate faces from "
              << path << "\n";
  return mesh;
}

void save_obj(const std::string& path, const TriangleMesh& mesh) {
  std::ofstream os(path, std::ios::trunc);
  require(static_cast<bool>(os), "io_error", "cannot open for writing: " + path);
  os.precision(17);
  for (const Vec3& v : mesh.vertices)
    os << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  for (const auto& f : mesh.faces)
    os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

FittedBody load_fitted_body(const std::string& obj_path,
                            const std::string& sidecar_path) {
  FittedBody body;
  body.mesh = load_obj(obj_path);

  std::ifstream is(sidecar_path);
  require(static_cast<bool>(is), "io_error", "cannot open: " + sidecar_path);
  json doc;
  try {
    is >> doc;
  } catch (const json::exception& e) {
    fail("json_parse", std::string("bad sidecar JSON: ") + e.what());
  }

  body.family = body_family_from_string(doc.at("family").get<std::string>());
  body.instance_id = doc.at("instance_id").get<int32_t>();
  const BodyPartTaxonomy tax = build_taxonomy(body.family);

  body.mesh.face_part.assign(body.mesh.face_count(), 0);
  for (const json& range : doc.at("part_ranges")) {
    const int part = tax.source_id(range.at("part").get<std::string>());
    const std::size_t begin = range.at("begin").get<std::size_t>();
    const std::size_t end = range.at("end").get<std::size_t>();
    require(begin <= end && end <= body.mesh.face_count(), "sidecar_range",
            "part range out of bounds in " + sidecar_path);
    for (std::size_t f = begin; f < end; ++f) body.mesh.face_part[f] = part;
  }
  for (std::size_t f = 0; f < body.mesh.face_count(); ++f)
    require(body.mesh.face_part[f] != 0, "unlabeled_face",
            "face " + std::to_string(f) + " not covered by part_ranges");
  return body;
}

void save_fitted_body(const std::string& obj_path,
                      const std::string& sidecar_path, const FittedBody& body) {
  save_obj(obj_path, body.mesh);
  const BodyPartTaxonomy tax = build_taxonomy(body.family);

  json ranges = json::array();
  std::size_t begin = 0;
  for (std::size_t f = 1; f <= body.mesh.face_count(); ++f) {
    if (f == body.mesh.face_count() ||
        body.mesh.face_part[f] != body.mesh.face_part[begin]) {
      ranges.push_back({{"part", tax.source_name(body.mesh.face_part[begin])},
                        {"begin", begin},
                        {"end", f}});
      begin = f;
    }
  }
  const json doc = {{"family", to_string(body.family)},
                    {"instance_id", body.instance_id},
                    {"part_ranges", ranges}};
  std::ofstream os(sidecar_path, std::ios::trunc);
  require(static_cast<bool>(os), "io_error",
          "cannot open for writing: " + sidecar_path);
  os << doc.dump(2) << '\n';
}

}  // namespace hck
