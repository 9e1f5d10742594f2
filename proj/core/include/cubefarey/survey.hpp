// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubefarey/analysis.hpp"

namespace cubefarey {

struct SurveyRow {
  std::string key;
  /// "found", "cap" or "error:<Code>".
  std::string status;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  /// Integer coefficients c0;c1;c2 of the monic characteristic polynomial.
  std::string charpoly;
  bool pisot = false;
  bool primitive = false;
  int dh_max = 0;
  Rational rdh_max = 0;

  [[nodiscard]] bool found() const { return status == "found"; }
  [[nodiscard]] std::string to_csv() const;
  static SurveyRow from_csv(const std::string& line);

  friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

extern const char* const kSurveyCsvHeader;

struct SurveyItem {
  std::string key;
  std::function<PointPair()> make_point;
};

/// Period, period matrix, Pisot, primitivity and heights for one point.
SurveyRow survey_point(const std::string& key, const PointPair& point, const ValueExponent& r, std::size_t cap);

struct SurveyOptions {
  ValueExponent r;
  std::size_t cap = kDefaultCap;
  unsigned workers = 1;
  /// Append-only results file; rows already present are reused, not recomputed.
  std::optional<std::filesystem::path> csv;
  /// Called once per row in item order as it is committed.
  std::function<void(const SurveyRow&)> on_row;
};

/// Rows in item order. Worker threads compute rows independently; commits to
/// the CSV happen strictly in item order so a resumed run is byte-identical.
std::vector<SurveyRow> run_survey(const std::vector<SurveyItem>& items, const SurveyOptions& opts);

std::vector<SurveyItem> pure_cubic_items(long m_lo, long m_hi);
/// Irreducible x³ + a2 x² + a1 x + a0, |ai| <= t, with positive largest real root.
std::vector<SurveyItem> polynomial_family_items(long t);

struct PureCubicSummary {
  std::size_t count = 0;
  std::size_t periodic = 0;
  std::size_t L_A = 0;
  int H_A = 0;
  Rational R_A = 0;

  [[nodiscard]] bool all_periodic() const { return count == periodic; }
  [[nodiscard]] std::string to_string() const;
};

PureCubicSummary summarize_pure_cubics(const std::vector<SurveyRow>& rows);

struct FamilySummary {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t c = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  Rational rh = 0;

  [[nodiscard]] std::string to_string() const;
};

/// Keys must be "c0;c1;c2" as produced by polynomial_family_items.
FamilySummary summarize_family(const std::vector<SurveyRow>& rows);

/// Discriminant of a monic cubic; negative iff there is a complex embedding.
Rational discriminant(const CubicPolynomial& poly);

}  // namespace cubefarey
