#pragma once

#include <optional>
#include <string>
#include <vector>

namespace emot {

struct CaseSpec {
    std::string id;
    std::string title;
    std::string prompt;
    std::optional<std::string> gold;  // accuracy problems only
    std::string category;
};

// The three quality-benchmark cases (bengt, climate, vaccine) plus the
// diagnostic-trap case (erik).
const std::vector<CaseSpec>& quality_cases();

// 15 short-answer problems: 3 each of math, logic, multiqa, planning,
// bbh. Every problem carries a gold answer.
const std::vector<CaseSpec>& accuracy_problems();

const CaseSpec* find_case(const std::string& id);

}  // namespace emot
