// Reproduction acceptance suite. With no arguments every criterion runs;
// otherwise only the listed criterion numbers. Prints the items of each
// criterion and then one PASS/FAIL line for it; exits 1 on any failure.

#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

#include "enscoh/acceptance.hpp"

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        const int c = std::atoi(argv[i]);
        if (c < 1 || c > enscoh::kCriterionCount) {
            std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
            return 2;
        }
        only.insert(c);
    }

    int current = 0;
    std::vector<enscoh::AcceptanceItem> items;
    auto finish = [&](int c) {
        if (c == 0) return;
        std::printf("criterion %-2d %s\n", c, enscoh::criterion_passed(items, c) ? "PASS" : "FAIL");
        std::fflush(stdout);
    };
    items = enscoh::run_acceptance(only, [&](const enscoh::AcceptanceItem& it) {
        if (it.criterion != current) {
            finish(current);
            current = it.criterion;
        }
        items.push_back(it);
        std::printf("    %s: expected %s, actual %s, tol %s [%s]\n", it.name.c_str(), it.expected.c_str(),
                    it.actual.c_str(), it.tolerance.c_str(), it.pass ? "pass" : "fail");
        std::fflush(stdout);
    });
    finish(current);

    int failed = 0;
    std::set<int> ran;
    for (const auto& it : items) ran.insert(it.criterion);
    for (int c : ran) failed += !enscoh::criterion_passed(items, c);
    std::printf("%zu of %zu criteria pass\n", ran.size() - failed, ran.size());
    return failed == 0 ? 0 : 1;
}
