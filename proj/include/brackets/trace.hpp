#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace brackets {

/// One rule application inside a pipeline: the rule name
/// (P1/P2/E1/E2/E3/E4/E5/Lemma/partial-eliminate) plus serialized inputs
/// and outputs.
struct TraceEvent {
    std::string rule;
    nlohmann::json detail;
};

using Trace = std::vector<TraceEvent>;

inline void trace_event(Trace* trace, std::string rule, nlohmann::json detail) {
    if (trace) trace->push_back({std::move(rule), std::move(detail)});
}

}  // namespace brackets
