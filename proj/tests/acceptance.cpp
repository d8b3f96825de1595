// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "hcf/harness.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    std::uint64_t seed = 42;
    app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 10));
    app.add_option("--seed", seed, "random seed");
    CLI11_PARSE(app, argc, argv);

    hcf::harness::Harness h(seed);
    bool all = true;
    for (int id = 1; id <= 10; ++id) {
        if (only && id != only) continue;
        const hcf::harness::CriterionResult r = h.run(id);
        all = all && r.pass;
        std::cout << hcf::harness::format_row(r) << std::endl;
    }
    return all ? 0 : 1;
}
