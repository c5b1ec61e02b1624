// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero only when a criterion fails that is not listed as
// known unattainable.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ribbonspec/acceptance.hpp"
#include "ribbonspec/batch.hpp"

using namespace ribbonspec;

int main(int argc, char** argv)
{
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty()) {
        for (int id = 1; id <= acceptance::Suite::kCount; ++id) ids.push_back(id);
    }

    acceptance::Suite suite(resolve_workers(4));
    int unexpected = 0, passed = 0;
    for (int id : ids) {
        const auto start = std::chrono::steady_clock::now();
        const auto res = suite.run(id);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        for (const auto& line : res.details) std::cout << "    " << line << '\n';
        const bool known = !res.pass && acceptance::known_unattainable(id);
        std::cout << (res.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << res.name
                  << (known ? " (known unattainable)" : "") << " [" << secs << " s]" << std::endl;
        passed += res.pass ? 1 : 0;
        if (!res.pass && !known) ++unexpected;
    }
    std::cout << passed << "/" << ids.size() << " criteria passed, " << unexpected << " unexpected failures\n";
    return unexpected == 0 ? 0 : 1;
}
