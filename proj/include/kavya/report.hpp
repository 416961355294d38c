// kavya/report.hpp

// Copyright 2026  The Kavya Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "kavya/pipeline.hpp"

namespace kavya {

enum class ReportFormat { Json, Html, Text };

ReportFormat report_format_from_string(const std::string& name);

// Stable field ordering, schema-versioned; identical reports serialize to
// identical bytes.
nlohmann::ordered_json report_to_json(const AnalysisReport& report);

// json: report_to_json dumped with 2-space indent and trailing newline.
// html: one self-contained page, a section per stanza plus a global section,
//       inline styles, no external fetches.
// text: terminal summary.
std::string emit(const AnalysisReport& report, ReportFormat format);

}  // namespace kavya
