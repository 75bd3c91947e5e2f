#pragma once

#include <string>
#include <vector>

namespace lpaflow {

struct SelftestCase {
    std::string name;
    bool passed = false;
    std::string detail;  // what was observed when the case failed
};

/// Replays the library's reference examples: the worked small graphs whose
/// matrices, invariants and verdicts are known exactly.
std::vector<SelftestCase> run_selftest();

}  // namespace lpaflow
