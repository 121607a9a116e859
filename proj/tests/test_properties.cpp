#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gdft/verify.hpp"

using namespace gdft;

namespace {

void check_suite(const SuiteReport& rep) {
    INFO(rep.name << ": trials=" << rep.trials << " failures=" << rep.failures
                  << " worst=" << rep.worst << " skipped=" << rep.skipped);
    CHECK(rep.trials >= 200);
    CHECK(rep.failures == 0);
}

}  // namespace

TEST_CASE("energy concavity") { check_suite(suite_energy_concavity()); }

TEST_CASE("ensemble functional convexity and ordering") {
    check_suite(suite_fe_convexity());
}

TEST_CASE("Legendre duality on one-dimensional domains") {
    check_suite(suite_legendre());
}

TEST_CASE("weak Hohenberg-Kohn cross-consistency") {
    check_suite(suite_weak_hk());
}

TEST_CASE("no-mixing residuals at interior minimizers") {
    check_suite(suite_no_mixing());
}

TEST_CASE("selection rule on nice-facet states") {
    check_suite(suite_selection_rule());
}

TEST_CASE("gauge invariance of the boundary force") {
    check_suite(suite_gauge_invariance());
}
