#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semipart {

/// Outcome of one verification sweep. `counterexamples` holds the first few
/// offending indices; `detail` a human-readable note on the first failure.
struct CheckReport {
    std::string check;
    std::uint64_t n_max = 0;
    bool pass = true;
    std::vector<std::uint64_t> counterexamples;
    std::string detail;

    void fail(std::uint64_t n, std::string why) {
        pass = false;
        if (counterexamples.size() < 10) counterexamples.push_back(n);
        if (detail.empty()) detail = std::move(why);
    }
};

}  // namespace semipart
