#ifndef GDFT_VERIFY_HPP
#define GDFT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gdft {

// Randomized property suite: a fixed number of valid trials from a fixed
// seed, reporting the failure count and the worst observed violation.
struct SuiteReport {
    std::string name;
    int trials = 0;
    int skipped = 0;
    int failures = 0;
    double worst = 0.0;

    bool pass() const { return failures == 0 && trials >= 200; }
};

// E(v) = min spec(iota(v) + W) is concave in v.
SuiteReport suite_energy_concavity(std::uint64_t seed = 101);
// F_e is convex and bounded above by F_p.
SuiteReport suite_fe_convexity(std::uint64_t seed = 102);
// On one-dimensional domains F_e is the Legendre transform of E.
SuiteReport suite_legendre(std::uint64_t seed = 103);
// F_p(rho(v)) = E(v) - <v, rho(v)> at nondegenerate ground states.
SuiteReport suite_weak_hk(std::uint64_t seed = 104);
// Interior minimizers are not coupled by W to weight vectors they avoid.
SuiteReport suite_no_mixing(std::uint64_t seed = 105);
// States on a nice facet are eigenstates of the represented facet normal.
SuiteReport suite_selection_rule(std::uint64_t seed = 106);
// The abelian repulsion strength is independent of the reference point gamma.
SuiteReport suite_gauge_invariance(std::uint64_t seed = 107);

std::vector<SuiteReport> run_all_suites();

// One acceptance criterion: a themed bundle of frozen-value and formula
// checks with a wall-clock budget.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;  // first failing check, empty when everything passed
};

// Runs criterion `index` (1..9).
CriterionResult run_criterion(int index);

// Runs all nine criteria in order.
std::vector<CriterionResult> run_acceptance();

}  // namespace gdft

#endif  // GDFT_VERIFY_HPP
