// Copyright 2026 The eigs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "eigs/distance.hpp"
#include "eigs/degree.hpp"
#include "eigs/model.hpp"

namespace eigs {

inline constexpr const char* kReportSchema = "eigs.analysis/1";
inline constexpr const char* kToolVersion = "1.0.0";

struct ReportOptions {
  DistanceOptions distance;
  DegreeOptions degree;
};

struct AnalysisReport {
  nlohmann::ordered_json json;
  bool hard_failure = false;  // some section could not be produced

  std::string text() const { return json.dump(2) + "\n"; }
};

AnalysisReport analyze(const IgsSpec& spec, const ReportOptions& opt = {});

nlohmann::ordered_json to_json(const FrobeniusForm& form);
nlohmann::ordered_json to_json(const IntMatrix& X);

}  // namespace eigs
