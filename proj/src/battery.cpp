#include "wsc/battery.hpp"

#include <algorithm>

#include "wsc/linalg.hpp"

namespace wsc {

OrbitCheckResult check_orbit(const NilpotentDatum& nd, std::size_t truncation) {
    OrbitCheckResult result;
    result.algebra = algebra_name(nd.root());
    result.partition = format_partition_pair(nd.partition());

    const SuperMatrix& e = nd.e();
    const SuperMatrix& h = nd.h();
    const SuperMatrix& f = nd.f();
    result.sl2_ok = bracket(h, e) == rat(2) * e && bracket(h, f) == rat(-2) * f &&
                    bracket(e, f) == h;

    result.goodness_ok = true;
    for (const auto& v : nd.centralizer())
        if (v.h_degree < 0) result.goodness_ok = false;

    // ad(h)-eigenvalue multisets: g = g^e disjoint-union [f,g], per parity
    auto degrees = [](const std::vector<HomogeneousVector>& vs, bool odd) {
        std::vector<int> out;
        for (const auto& v : vs)
            if (v.odd == odd) out.push_back(v.h_degree);
        std::sort(out.begin(), out.end());
        return out;
    };
    result.multiset_ok = true;
    for (bool odd : {false, true}) {
        std::vector<int> whole = degrees(nd.graded_basis(), odd);
        std::vector<int> split = degrees(nd.centralizer(), odd);
        std::vector<int> img = degrees(nd.symplectic_space(), odd);
        split.insert(split.end(), img.begin(), img.end());
        std::sort(split.begin(), split.end());
        if (whole != split) result.multiset_ok = false;
    }

    {
        const auto& vs = nd.symplectic_space();
        RatMatrix gram(vs.size(), vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < vs.size(); ++j)
                gram.at(i, j) = nd.omega(vs[i].mat, vs[j].mat);
        result.omega_ok = gram.rank() == vs.size();
    }

    result.clifford = check_clifford_factorization(nd, truncation);
    result.triangular = check_triangular_factorization(nd, truncation);
    return result;
}

std::vector<BatteryJob> enumerate_battery_jobs(std::size_t max_rank) {
    std::vector<BatteryJob> jobs;
    for (std::size_t m = 0; m <= max_rank; ++m)
        for (std::size_t n = 0; m + n <= max_rank; ++n) {
            if (m + n == 0) continue;
            for (const auto& pm : partitions_of(m))
                for (const auto& pn : partitions_of(n))
                    jobs.push_back({m, n, PartitionPair{pm, pn}});
        }
    return jobs;
}

namespace {

OrbitCheckResult run_job(const BatteryJob& job, std::size_t truncation) {
    try {
        RootDatum rd = build_root_datum(Family::GL, job.m, job.n);
        LeviDatum levi = full_levi(rd);
        CoordVector theta(levi.center_basis.size());
        NilpotentDatum nd(std::move(rd), job.partition, std::move(levi), theta);
        return check_orbit(nd, truncation);
    } catch (const Error& err) {
        OrbitCheckResult result;
        result.algebra = "gl(" + std::to_string(job.m) + "|" + std::to_string(job.n) + ")";
        result.partition = format_partition_pair(job.partition);
        if (err.code() == ErrorCode::OddDimensionalOddPart) result.skipped_odd_dim = true;
        else result.error = err.what();
        return result;
    }
}

} // namespace

std::vector<OrbitCheckResult> run_structure_battery_serial(std::size_t max_rank,
                                                           std::size_t truncation) {
    std::vector<BatteryJob> jobs = enumerate_battery_jobs(max_rank);
    std::vector<OrbitCheckResult> results(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = run_job(jobs[i], truncation);
    return results;
}

std::vector<OrbitCheckResult> run_structure_battery(std::size_t max_rank,
                                                    std::size_t truncation) {
    std::vector<BatteryJob> jobs = enumerate_battery_jobs(max_rank);
    std::vector<OrbitCheckResult> results(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(jobs.size()); ++i)
        results[i] = run_job(jobs[i], truncation);
    return results;
}

} // namespace wsc
