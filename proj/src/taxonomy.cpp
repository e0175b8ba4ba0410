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
#include "hck/taxonomy.hpp"

#include <algorithm>
#include <map>

namespace hck {

namespace {

// Final parts in figure-legend order; index + 1 is the stable id.
const std::vector<std::string> kFinalParts = {
    "head",       "rightArm",   "leftArm",  "rightForeArm", "leftForeArm",
    "rightHand",  "leftHand",   "torso",    "hips",         "rightUpLeg",
    "leftUpLeg",  "rightLeg",   "leftLeg",  "rightFoot",    "leftFoot"};

// SMPL source vocabulary (24 parts, skeleton order). SMPL-X appends the eyes.
const std::vector<std::string> kSmplSource = {
    "hips",          "leftUpLeg",      "rightUpLeg", "spine",
    "leftLeg",       "rightLeg",       "spine1",     "leftFoot",
    "rightFoot",     "spine2",         "leftToeBase", "rightToeBase",
    "neck",          "leftShoulder",   "rightShoulder", "head",
    "leftArm",       "rightArm",       "leftForeArm", "rightForeArm",
    "leftHand",      "rightHand",      "leftHandIndex1", "rightHandIndex1"};

// Smaller parts fold into larger ones; everything else maps to itself
// (spine segments and shoulders become the torso).
const std::map<std::string, std::string> kMergeRules = {
    {"leftEye", "head"},        {"rightEye", "head"},
    {"neck", "head"},           {"leftToeBase", "leftFoot"},
    {"rightToeBase", "rightFoot"}, {"leftHandIndex1", "leftHand"},
    {"rightHandIndex1", "rightHand"}, {"spine", "torso"},
    {"spine1", "torso"},        {"spine2", "torso"},
    {"leftShoulder", "torso"},  {"rightShoulder", "torso"}};

}  // namespace

std::string to_string(BodyFamily family) {
  return family == BodyFamily::kSmplX ? "smplx" : "smpl";
}

BodyFamily body_family_from_string(const std::string& name) {
  if (name == "smplx" || name == "SMPL-X" || name == "smpl-x")
    return BodyFamily::kSmplX;
  if (name == "smpl" || name == "SMPL") return BodyFamily::kSmpl;
  fail("bad_family", "unknown body family: " + name);
}

BodyPartTaxonomy build_taxonomy(BodyFamily family) {
  BodyPartTaxonomy tax;
  tax.family_ = family;
  tax.source_ = kSmplSource;
  if (family == BodyFamily::kSmplX) {
    tax.source_.push_back("leftEye");
    tax.source_.push_back("rightEye");
  }
  tax.final_ = kFinalParts;

  tax.merge_.assign(tax.source_.size() + 1, 0);
  for (std::size_t i = 0; i < tax.source_.size(); ++i) {
    const std::string& src = tax.source_[i];
    const auto rule = kMergeRules.find(src);
    const std::string& dst = rule == kMergeRules.end() ? src : rule->second;
    tax.merge_[i + 1] = tax.final_id(dst);
  }
  return tax;
}

int BodyPartTaxonomy::source_id(const std::string& name) const {
  const auto it = std::find(source_.begin(), source_.end(), name);
  require(it != source_.end(), "unknown_part", "unknown source part: " + name);
  return static_cast<int>(it - source_.begin()) + 1;
}

int BodyPartTaxonomy::final_id(const std::string& name) const {
  const auto it = std::find(final_.begin(), final_.end(), name);
  require(it != final_.end(), "unknown_part", "unknown final part: " + name);
  return static_cast<int>(it - final_.begin()) + 1;
}

const std::string& BodyPartTaxonomy::source_name(int id) const {
  require(valid_source_id(id), "unknown_part",
          "source part id out of range: " + std::to_string(id));
  return source_[id - 1];
}

const std::string& BodyPartTaxonomy::final_name(int id) const {
  require(id >= 1 && id <= kFinalPartCount, "unknown_part",
          "final part id out of range: " + std::to_string(id));
  return final_[id - 1];
}

int BodyPartTaxonomy::merge(int source_id) const {
  require(valid_source_id(source_id), "unknown_part",
          "source part id out of range: " + std::to_string(source_id));
  return merge_[source_id];
}

const std::string& BodyPartTaxonomy::merge_name(const std::string& source) const {
  return final_name(merge(source_id(source)));
}

}  // namespace hck
