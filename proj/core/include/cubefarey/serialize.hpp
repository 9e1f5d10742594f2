// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubefarey/analysis.hpp"
#include "cubefarey/farey.hpp"
#include "cubefarey/stepped.hpp"
#include "cubefarey/survey.hpp"

namespace cubefarey {

using Json = nlohmann::json;

Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const Json& j);

/// {"minpoly": [c0, c1, c2], "root": [lo, hi]}, all "num/den" strings.
Json field_to_json(const CubicField& field);
FieldPtr field_from_json(const Json& j);

Json matrix_to_json(const IntMatrix3& m);
IntMatrix3 matrix_from_json(const Json& j);

struct OrbitDocument {
  FieldPtr field;
  ValueExponent r;
  FieldElement alpha;
  FieldElement beta;
  std::vector<IndexPair> digits;
  std::optional<std::vector<IntMatrix3>> convergents;

  [[nodiscard]] PointPair point() const { return PointPair(field, alpha, beta); }
};

Json orbit_to_json(const OrbitDocument& doc);
OrbitDocument orbit_from_json(const Json& j);

Json period_to_json(const PeriodResult& res, const std::optional<PeriodMatrix>& pm,
                    const std::optional<PisotCertificate>& pisot);

Json pisot_to_json(const PisotCertificate& cert);

/// {"direction": [ν0, ν1, ν2], "faces": [{"x": [..], "kind": k}, ...]}; direction is null when absent.
Json patch_to_json(const Patch& patch, const Direction* dir);
Patch patch_from_json(const Json& j);

Json survey_row_to_json(const SurveyRow& row);
SurveyRow survey_row_from_json(const Json& j);

}  // namespace cubefarey
