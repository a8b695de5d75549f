#pragma once

// The reproduction table: published values and sweep-trend properties
// checked against this implementation.

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace enscoh {

struct AcceptanceItem {
    int criterion = 0;
    std::string name;
    std::string expected;
    std::string actual;
    std::string tolerance;
    bool pass = false;
};

inline constexpr int kCriterionCount = 11;

/// Runs the selected criteria (all when empty) in order, reporting each
/// item as soon as it is known.
std::vector<AcceptanceItem> run_acceptance(const std::set<int>& criteria = {},
                                           const std::function<void(const AcceptanceItem&)>& on_item = {});

/// Whether every item of criterion c passed (false when none ran).
bool criterion_passed(const std::vector<AcceptanceItem>& items, int c);

}  // namespace enscoh
