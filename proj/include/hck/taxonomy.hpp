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
#include <vector>

#include "hck/common.hpp"

namespace hck {

enum class BodyFamily { kSmplX, kSmpl };

std::string to_string(BodyFamily family);
BodyFamily body_family_from_string(const std::string& name);

// Source part vocabulary (26 for SMPL-X, 24 for SMPL — no eyes) with the
// merge map onto the 15 final parts. Final ids are stable: head = 1 ...
// leftFoot = 15, in figure-legend order.
class BodyPartTaxonomy {
 public:
  BodyFamily family() const { return family_; }

  const std::vector<std::string>& source_parts() const { return source_; }
  const std::vector<std::string>& final_parts() const { return final_; }

  std::size_t source_count() const { return source_.size(); }
  static constexpr int kFinalPartCount = 15;

  // ids are 1-based; 0 is reserved for "no part"
  int source_id(const std::string& name) const;
  int final_id(const std::string& name) const;
  const std::string& source_name(int id) const;
  const std::string& final_name(int id) const;

  // merge map over source ids; total by construction
  int merge(int source_id) const;
  const std::string& merge_name(const std::string& source_name) const;

  bool valid_source_id(int id) const {
    return id >= 1 && id <= static_cast<int>(source_.size());
  }

 private:
  friend BodyPartTaxonomy build_taxonomy(BodyFamily family);
  BodyFamily family_ = BodyFamily::kSmplX;
  std::vector<std::string> source_;
  std::vector<std::string> final_;
  std::vector<int> merge_;  // source id -> final id, index 0 unused
};

BodyPartTaxonomy build_taxonomy(BodyFamily family);

}  // namespace hck
