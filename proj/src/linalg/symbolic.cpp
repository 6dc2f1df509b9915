#include "spslice/linalg/symbolic.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace spslice {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

MinorReport minor_vanishing_report(const PolyMatrix& m, std::size_t k)
{
    if (!m.is_square()) throw UsageError("minor_vanishing: non-square matrix");
    if (k < 1 || k > m.rows()) throw UsageError("minor_vanishing: k out of range");
    const auto subsets = combinations(m.rows(), k);
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t r = 0; r < subsets.size(); ++r)
        for (std::size_t c = 0; c < subsets.size(); ++c) jobs.emplace_back(r, c);

    std::vector<MultiPoly> values(jobs.size());
    const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t j = w; j < jobs.size(); j += workers)
                values[j] = minor_det(m, subsets[jobs[j].first], subsets[jobs[j].second]);
        }));
    }
    for (auto& t : tasks) t.get();

    MinorReport report;
    report.minors_checked = jobs.size();
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        if (values[j].is_zero()) continue;
        report.all_vanish = false;
        report.witness_rows = subsets[jobs[j].first];
        report.witness_cols = subsets[jobs[j].second];
        report.witness = values[j];
        break;
    }
    return report;
}

} // namespace spslice
