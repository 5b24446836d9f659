#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsc/hilbert.hpp"

namespace wsc {

struct OrbitCheckResult {
    std::string algebra;
    std::string partition;
    bool skipped_odd_dim = false;  // odd dim g(-1)_odd, outside the checked family
    bool sl2_ok = false;
    bool goodness_ok = false;
    bool multiset_ok = false;
    bool omega_ok = false;
    IdentityReport clifford;
    IdentityReport triangular;
    std::string error;  // nonempty when construction failed unexpectedly

    bool pass() const {
        return skipped_odd_dim ||
               (error.empty() && sl2_ok && goodness_ok && multiset_ok && omega_ok &&
                clifford.pass && triangular.pass);
    }
};

/// Runs the orbit checks for one constructed datum.
OrbitCheckResult check_orbit(const NilpotentDatum& nd, std::size_t truncation);

struct BatteryJob {
    std::size_t m, n;
    PartitionPair partition;
};

std::vector<BatteryJob> enumerate_battery_jobs(std::size_t max_rank);

/// Structure battery over every gl(m|n) partition pair with m+n <= max_rank.
/// The parallel flavour distributes orbits over OpenMP threads; results are
/// ordered by job index either way, so the two flavours agree exactly.
std::vector<OrbitCheckResult> run_structure_battery_serial(std::size_t max_rank,
                                                           std::size_t truncation);
std::vector<OrbitCheckResult> run_structure_battery(std::size_t max_rank,
                                                    std::size_t truncation);

} // namespace wsc
