#pragma once

// Serialization of traces and reports. Intervals are written as
// ["lo", "hi"] decimal strings with 25 significant digits, lo rounded down
// and hi rounded up, so the printed interval encloses the computed one.

#include <string>

#include <json.hpp>

#include "ivlab/enclosure.hpp"
#include "ivlab/lab/coc_study.hpp"
#include "ivlab/lab/examples.hpp"
#include "ivlab/lab/study.hpp"

namespace ivlab::lab {

inline constexpr int kReportDigits = 25;

template <class T>
nlohmann::json interval_json(const Interval<T>& x) {
  return nlohmann::json::array(
      {format_decimal(x.lo(), kReportDigits, Round::Down), format_decimal(x.hi(), kReportDigits, Round::Up)});
}

struct TraceContext {
  std::string function;
  NumericMode mode = NumericMode::Exact;
  unsigned precision_digits = 0;  // float mode only
  std::optional<Rational> reference_zero;
};

template <class T>
nlohmann::json trace_json(const EnclosureTrace<T>& trace, const TraceContext& context);

/// One line per step plus the outcome.
template <class T>
std::string trace_text(const EnclosureTrace<T>& trace, const TraceContext& context);

/// Header plus one row per step.
template <class T>
std::string trace_csv(const EnclosureTrace<T>& trace);

nlohmann::json study_json(const StudyReport& report);
std::string study_csv(const StudyReport& report);  // one row per trial
std::string study_text(const StudyReport& report);

nlohmann::json coc_json(const CocStudyReport& report);
std::string coc_csv(const CocStudyReport& report);
std::string coc_text(const CocStudyReport& report);

nlohmann::json example_json(const ExampleReport& report);
std::string example_text(const ExampleReport& report);

}  // namespace ivlab::lab
