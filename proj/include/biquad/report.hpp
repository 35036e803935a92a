#pragma once

#include "biquad/pbw.hpp"
#include "biquad/presentation.hpp"
#include "biquad/smoothness.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace biquad {

using OrderedJson = nlohmann::ordered_json;

/// Everything one toolchain pass over a presentation produced.  Sections
/// that a command does not compute stay empty and are omitted from output.
struct Report {
    std::string name;
    int n = 0;
    std::string orientation;
    std::optional<PBWReport> pbw;
    std::optional<ClosedConditionReport> pbw3;
    std::optional<SmoothnessVerdict> verdict;
    std::optional<int> depth;
    long long total_ms = 0;
};

Report make_report_header(const AlgebraPresentation& pres);

/// Single JSON object with a stable field order:
/// name, n, orientation, pbw, verdict, conditions, checks, timings.
OrderedJson report_to_json(const Report& r);

/// Human-readable rendering of the same payload.
std::string report_to_text(const Report& r);

std::string twist_table_text(const TwistFamily& tw);

}  // namespace biquad
