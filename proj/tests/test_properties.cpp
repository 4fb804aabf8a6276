#include <catch2/catch.hpp>

#include "properties.hpp"

using akp::testing::SuiteResult;

namespace {

void check_suite(const SuiteResult& r, std::size_t required_cases) {
    INFO(r.name << ": cases=" << r.cases << " failures=" << r.failures
                << " nonvacuous=" << r.nonvacuous);
    CHECK(r.cases >= required_cases);
    CHECK(r.failures == 0);
    CHECK(r.nonvacuous > 0);
}

}  // namespace

TEST_CASE("property suites at full volume", "[props]") {
    constexpr std::size_t n = 1000;
    check_suite(akp::testing::prop_parikh_additivity(n), n);
    check_suite(akp::testing::prop_abelianization(n), n);
    check_suite(akp::testing::prop_parent_lemma(n), n);
    check_suite(akp::testing::prop_tk_oracle_equivalence(n), n);
    check_suite(akp::testing::prop_solve_exactness(n), n);
    check_suite(akp::testing::prop_closure_fixpoint_and_radius(), n);
}
