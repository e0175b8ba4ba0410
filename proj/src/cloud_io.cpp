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
#include "hck/cloud_io.hpp"

#include <cstring>
#include <fstream>

namespace hck {

namespace {

constexpr char kMagic[4] = {'H', 'C', 'K', '1'};
constexpr uint32_t kFlagProvenance = 1u << 0;
constexpr uint32_t kKnownFlags = kFlagProvenance;

// x86/arm-le hosts; fields are written one by one so there is no padding
template <typename T>
void put(std::ostream& os, T value) {
  os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& is, const std::string& path) {
  T value;
  is.read(reinterpret_cast<char*>(&value), sizeof(T));
  require(static_cast<bool>(is), "truncated", "truncated file: " + path);
  return value;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(os), "io_error", "cannot open for writing: " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  require(static_cast<bool>(is), "io_error", "cannot open for reading: " + path);
  return is;
}

}  // namespace

void write_labeled_cloud(const std::string& path, const LabeledPointCloud& cloud) {
  cloud.validate();
  std::ofstream os = open_out(path);
  os.write(kMagic, 4);
  const uint32_t flags = cloud.has_provenance() ? kFlagProvenance : 0;
  put<uint32_t>(os, flags);
  put<uint64_t>(os, cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    put<float>(os, static_cast<float>(cloud.positions[i].x()));
    put<float>(os, static_cast<float>(cloud.positions[i].y()));
    put<float>(os, static_cast<float>(cloud.positions[i].z()));
    put<uint8_t>(os, cloud.semantic[i]);
    put<int32_t>(os, cloud.instance[i]);
    put<uint8_t>(os, cloud.part[i]);
    if (flags & kFlagProvenance) {
      put<int32_t>(os, cloud.provenance[i].camera);
      put<int32_t>(os, cloud.provenance[i].row);
      put<int32_t>(os, cloud.provenance[i].col);
    }
  }
  require(static_cast<bool>(os), "io_error", "write failed: " + path);
}

LabeledPointCloud read_labeled_cloud(const std::string& path) {
  std::ifstream is = open_in(path);
  char magic[4];
  is.read(magic, 4);
  require(static_cast<bool>(is) && std::memcmp(magic, kMagic, 4) == 0,
          "bad_magic", "not a labeled-cloud file: " + path);
  const uint32_t flags = get<uint32_t>(is, path);
  require((flags & ~kKnownFlags) == 0, "flag_mismatch",
          "unknown flags in " + path);
  const uint64_t n = get<uint64_t>(is, path);

  LabeledPointCloud cloud;
  cloud.positions.reserve(n);
  cloud.semantic.reserve(n);
  cloud.instance.reserve(n);
  cloud.part.reserve(n);
  if (flags & kFlagProvenance) cloud.provenance.reserve(n);

  for (uint64_t i = 0; i < n; ++i) {
    const float x = get<float>(is, path);
    const float y = get<float>(is, path);
    const float z = get<float>(is, path);
    cloud.positions.emplace_back(x, y, z);
    cloud.semantic.push_back(get<uint8_t>(is, path));
    cloud.instance.push_back(get<int32_t>(is, path));
    cloud.part.push_back(get<uint8_t>(is, path));
    if (flags & kFlagProvenance) {
      Provenance p;
      p.camera = get<int32_t>(is, path);
      p.row = get<int32_t>(is, path);
      p.col = get<int32_t>(is, path);
      cloud.provenance.push_back(p);
    }
  }
  is.peek();
  require(is.eof(), "trailing_data", "trailing bytes in " + path);
  cloud.validate();
  return cloud;
}

void write_depth_image(const std::string& path, const DepthImage& img) {
  img.validate();
  std::ofstream os = open_out(path);
  put<uint32_t>(os, static_cast<uint32_t>(img.width));
  put<uint32_t>(os, static_cast<uint32_t>(img.height));
  for (std::size_t i = 0; i < img.depth.size(); ++i)
    put<double>(os, img.valid[i] ? img.depth[i] : 0.0);
  require(static_cast<bool>(os), "io_error", "write failed: " + path);
}

DepthImage read_depth_image(const std::string& path) {
  std::ifstream is = open_in(path);
  const uint32_t w = get<uint32_t>(is, path);
  const uint32_t h = get<uint32_t>(is, path);
  DepthImage img = DepthImage::with_size(static_cast<int>(w), static_cast<int>(h));
  for (std::size_t i = 0; i < img.depth.size(); ++i) {
    const double d = get<double>(is, path);
    img.depth[i] = d;
    img.valid[i] = d > 0.0 ? 1 : 0;
  }
  is.peek();
  require(is.eof(), "trailing_data", "trailing bytes in " + path);
  img.validate();
  return img;
}

void write_index_image(const std::string& path, const IndexImage& img) {
  std::ofstream os = open_out(path);
  put<uint32_t>(os, static_cast<uint32_t>(img.width));
  put<uint32_t>(os, static_cast<uint32_t>(img.height));
  for (const int32_t v : img.value) put<int32_t>(os, v);
  require(static_cast<bool>(os), "io_error", "write failed: " + path);
}

IndexImage read_index_image(const std::string& path) {
  std::ifstream is = open_in(path);
  const uint32_t w = get<uint32_t>(is, path);
  const uint32_t h = get<uint32_t>(is, path);
  IndexImage img = IndexImage::with_size(static_cast<int>(w), static_cast<int>(h));
  for (auto& v : img.value) v = get<int32_t>(is, path);
  is.peek();
  require(is.eof(), "trailing_data", "trailing bytes in " + path);
  return img;
}

void export_ply(const std::string& path, const LabeledPointCloud& cloud) {
  std::ofstream os(path, std::ios::trunc);
  require(static_cast<bool>(os), "io_error", "cannot open for writing: " + path);
  os << "ply\nformat ascii 1.0\n"
     << "element vertex " << cloud.size() << "\n"
     << "property float x\nproperty float y\nproperty float z\n"
     << "property uchar semantic\nproperty int instance\nproperty uchar part\n"
     << "end_header\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    os << static_cast<float>(cloud.positions[i].x()) << ' '
       << static_cast<float>(cloud.positions[i].y()) << ' '
       << static_cast<float>(cloud.positions[i].z()) << ' '
       << static_cast<int>(cloud.semantic[i]) << ' ' << cloud.instance[i] << ' '
       << static_cast<int>(cloud.part[i]) << '\n';
  }
}

}  // namespace hck
