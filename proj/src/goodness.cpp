#include "insdel/goodness.hpp"

#include <cmath>
#include <ostream>

#include "insdel/errors.hpp"

namespace insdel {
namespace {
constexpr double kEps = 1e-9;
}

std::vector<std::size_t> block_costs(const BitString& original, const ChannelTrial& trial,
                                     const CodeParams& params) {
    if (trial.decomposition.lengths.size() != params.d)
        throw AnalysisError("decomposition holds " +
                            std::to_string(trial.decomposition.lengths.size()) +
                            " blocks, expected " + std::to_string(params.d));
    if (trial.decomposition.total() != trial.corrupted.size())
        throw AnalysisError("decomposition does not cover the corrupted word");
    if (original.size() != params.n)
        throw AnalysisError("original length does not match params.n");

    std::vector<std::size_t> costs(params.d, 0);
    for (std::size_t j = 1; j <= params.d; ++j) {
        const Interval clean{(j - 1) * params.block_len + 1, j * params.block_len + 1};
        const BitString region = trial.corrupted.slice(trial.decomposition.region(j));
        costs[j - 1] = edit_distance(original.slice(clean), region);
    }
    return costs;
}

std::vector<bool> classify_gamma_good(const std::vector<std::size_t>& costs,
                                      const CodeParams& params) {
    const double threshold = params.gamma * params.alpha * static_cast<double>(params.tau);
    std::vector<bool> good(costs.size());
    for (std::size_t j = 0; j < costs.size(); ++j)
        good[j] = static_cast<double>(costs[j]) <= threshold + kEps;
    return good;
}

bool interval_is_good(std::size_t a, std::size_t b, const std::vector<std::size_t>& costs,
                      const std::vector<bool>& good, const CodeParams& params) {
    const std::size_t span = b - a + 1;
    std::size_t cost = 0, good_count = 0;
    for (std::size_t j = a; j <= b; ++j) {
        cost += costs[j - 1];
        if (good[j - 1]) ++good_count;
    }
    const double cost_cap =
        params.gamma * static_cast<double>(span) * params.alpha * static_cast<double>(params.tau);
    if (static_cast<double>(cost) > cost_cap + kEps) return false;
    return static_cast<double>(good_count) + kEps >=
           (1.0 - params.theta) * static_cast<double>(span);
}

std::vector<bool> classify_locally_good(const std::vector<std::size_t>& costs,
                                        const CodeParams& params) {
    const std::size_t d = costs.size();
    const std::vector<bool> good = classify_gamma_good(costs, params);
    std::vector<std::size_t> cost_prefix(d + 1, 0), bad_prefix(d + 1, 0);
    for (std::size_t j = 1; j <= d; ++j) {
        cost_prefix[j] = cost_prefix[j - 1] + costs[j - 1];
        bad_prefix[j] = bad_prefix[j - 1] + (good[j - 1] ? 0 : 1);
    }
    const double unit = params.gamma * params.alpha * static_cast<double>(params.tau);

    std::vector<bool> locally(d, true);
    for (std::size_t a = 1; a <= d; ++a) {
        for (std::size_t b = a; b <= d; ++b) {
            const std::size_t span = b - a + 1;
            const std::size_t cost = cost_prefix[b] - cost_prefix[a - 1];
            const std::size_t bad = bad_prefix[b] - bad_prefix[a - 1];
            const bool ok =
                static_cast<double>(cost) <= unit * static_cast<double>(span) + kEps &&
                static_cast<double>(bad) <= params.theta * static_cast<double>(span) + kEps;
            if (!ok) {
                for (std::size_t j = a; j <= b; ++j) locally[j - 1] = false;
            }
        }
    }
    return locally;
}

GoodnessReport analyze_trial(const BitString& original, const ChannelTrial& trial,
                             const CodeParams& params) {
    GoodnessReport report;
    report.block_costs = block_costs(original, trial, params);
    report.gamma_good = classify_gamma_good(report.block_costs, params);
    report.locally_good = classify_locally_good(report.block_costs, params);
    std::size_t gamma_bad = 0, locally_bad = 0;
    for (std::size_t j = 0; j < params.d; ++j) {
        if (!report.gamma_good[j]) ++gamma_bad;
        if (!report.locally_good[j]) ++locally_bad;
    }
    const double dd = static_cast<double>(params.d);
    report.fraction_gamma_bad = static_cast<double>(gamma_bad) / dd;
    report.fraction_locally_bad = static_cast<double>(locally_bad) / dd;
    report.delta = trial.delta_budget > 0.0 ? trial.delta_budget : params.delta;
    const double ga = params.gamma * params.alpha;
    report.bound_gamma_bad = 2.0 * params.beta * report.delta / ga;
    report.bound_locally_bad =
        (4.0 / ga) * (1.0 + 1.0 / params.theta) * report.delta * params.beta;
    return report;
}

BoundCheck check_bounds(const GoodnessReport& report, const ChannelTrial& trial,
                        const CodeParams& params) {
    BoundCheck check;
    check.gamma_bound_ok = report.fraction_gamma_bad <= report.bound_gamma_bad + kEps;
    check.local_bound_ok = report.fraction_locally_bad <= report.bound_locally_bad + kEps;
    const double lo = (params.beta - params.alpha * params.gamma) * static_cast<double>(params.tau);
    const double hi = (params.beta + params.alpha * params.gamma) * static_cast<double>(params.tau);
    for (std::size_t j = 1; j <= params.d; ++j) {
        if (!report.gamma_good[j - 1]) continue;
        const double len = static_cast<double>(trial.decomposition.lengths[j - 1]);
        if (len < lo - kEps || len > hi + kEps) {
            check.good_block_lengths_ok = false;
            check.length_violations.push_back(j);
        }
    }
    return check;
}

void write_goodness_report(std::ostream& os, const GoodnessReport& report,
                           const BoundCheck& check) {
    for (std::size_t j = 0; j < report.block_costs.size(); ++j)
        os << (j + 1) << ' ' << report.block_costs[j] << ' ' << (report.gamma_good[j] ? 1 : 0)
           << ' ' << (report.locally_good[j] ? 1 : 0) << '\n';
    os << "delta = " << report.delta << '\n';
    os << "fraction_gamma_bad = " << report.fraction_gamma_bad << '\n';
    os << "bound_gamma_bad = " << report.bound_gamma_bad << '\n';
    os << "fraction_locally_bad = " << report.fraction_locally_bad << '\n';
    os << "bound_locally_bad = " << report.bound_locally_bad << '\n';
    os << "gamma_bound_ok = " << (check.gamma_bound_ok ? 1 : 0) << '\n';
    os << "local_bound_ok = " << (check.local_bound_ok ? 1 : 0) << '\n';
    os << "good_block_lengths_ok = " << (check.good_block_lengths_ok ? 1 : 0) << '\n';
}

}  // namespace insdel
