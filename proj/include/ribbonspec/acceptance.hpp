#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ribbonspec/batch.hpp"

namespace ribbonspec::acceptance {

struct Result {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> details;  ///< recorded sequences and statistics
};

/// Criteria whose pass condition is known not to be reachable; the suite
/// still evaluates and reports them.
bool known_unattainable(int id);

class Suite {
public:
    explicit Suite(int workers = 1) : workers_(workers) {}

    static constexpr int kCount = 11;

    Result run(int id);
    std::vector<Result> run_all();

    Result fig2_histogram();
    Result girth_law();
    Result factorial_moments();
    Result sampler_law();
    Result exact_volumes();
    Result saddle_convergence();
    Result volume_asymptotics();
    Result lemma_k();
    Result lemma_kk();
    Result stable_graph_counts();
    Result determinism();

private:
    const std::vector<TrialRecord>& batch(int genus, std::uint64_t seed, std::uint64_t trials);

    int workers_;
    std::map<std::tuple<int, std::uint64_t, std::uint64_t>, std::vector<TrialRecord>> cache_;
    std::map<std::tuple<int, std::uint64_t, std::uint64_t>, double> seconds_;
};

}  // namespace ribbonspec::acceptance
