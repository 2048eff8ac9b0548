#pragma once

#include "mgtd/corpus.hpp"

#include <json.hpp>

#include <string>
#include <unordered_map>
#include <vector>

namespace mgtd {

struct ClassMetrics {
    int class_id = 0;
    std::string name;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t support = 0;
};

struct EvalReport {
    double accuracy = 0.0;
    double macro_f1 = 0.0;
    std::vector<ClassMetrics> per_class;
    std::vector<std::vector<std::size_t>> confusion; // [gold][predicted]
    std::size_t total = 0;
};

// Scores predictions against a fully labeled gold split. Predictions must
// cover every gold id and contain no extra ids. Per-class F1 is 0 when
// precision + recall is 0.
EvalReport score(const std::unordered_map<std::string, int>& predictions,
                 const DatasetSplit& gold, const LabelSpace& space);

// Ordered method -> report rows for side-by-side comparison.
struct Comparison {
    std::vector<std::pair<std::string, EvalReport>> rows; // insertion order
};

// Aligned text table, metrics at 3 decimals.
std::string comparison_text(const Comparison& comparison);
nlohmann::json comparison_json(const Comparison& comparison);

std::string report_text(const EvalReport& report, const LabelSpace& space);
nlohmann::json report_json(const EvalReport& report, const LabelSpace& space);

} // namespace mgtd
