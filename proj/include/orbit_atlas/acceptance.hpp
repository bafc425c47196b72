#pragma once

#include <set>
#include <string>
#include <vector>

namespace orbit_atlas {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

int acceptance_criterion_count();

// Runs the selected criteria (all when `ids` is empty), in id order.
std::vector<CriterionResult> run_acceptance(const std::set<int>& ids = {});

}  // namespace orbit_atlas
