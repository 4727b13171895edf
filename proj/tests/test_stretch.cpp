// Stretch-range checks: table rows 19..23, which sit behind the stretch flag
// and take seconds rather than milliseconds.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symco/extremal.hpp"
#include "symco/parallel.hpp"
#include "symco/partition.hpp"

using namespace symco;

namespace {

TableOptions stretch_opts() {
    TableOptions o;
    o.threads = default_threads();
    o.stretch = true;
    return o;
}

// Reference rows 19..23 for k = 0..20; entries past k = 20 follow from the
// table's symmetry.
const std::vector<std::pair<int, std::vector<long>>> kStretchRows = {
    {19, {1, 1, 1, 2, 3, 6, 8, 11, 12, 11, 11, 12, 11, 8, 6, 3, 2, 1, 1, 1}},
    {20, {1, 1, 1, 2, 3, 6, 8, 11, 12, 13, 18, 13, 12, 11, 8, 6, 3, 2, 1, 1, 1}},
    {21, {1, 1, 1, 2, 3, 6, 16, 12, 14, 14, 24, 24, 14, 14, 12, 16, 6, 3, 2, 1, 1}},
    {22, {1, 1, 1, 2, 3, 6, 16, 20, 15, 16, 27, 32, 27, 16, 15, 20, 16, 6, 3, 2, 1}},
    {23, {1, 1, 1, 2, 3, 6, 16, 20, 24, 19, 30, 35, 35, 30, 19, 24, 20, 16, 6, 3, 2}},
};

const long kStretchCn[] = {12, 18, 24, 32, 35};  // C(19..23)

}  // namespace

TEST_CASE("rows 19..23 match the reference table") {
    auto opts = stretch_opts();
    for (const auto& [n, printed] : kStretchRows) {
        const auto& row = cnk_row(n, opts);
        for (int k = 0; k < static_cast<int>(printed.size()); ++k)
            CHECK(row[k].value == printed[k]);
        for (int k = 0; k <= n; ++k) CHECK(row[k].value == row[n - k].value);
        CHECK(max_lr(n, opts).value == kStretchCn[n - 19]);
    }
    auto [zeta20, rho20] = zeta_rho(20, opts);
    CHECK(zeta20 == 10);
    CHECK(rho20 == 0);
}

TEST_CASE("containment of the C(18) maximizers") {
    auto opts = stretch_opts();
    ContainmentReport rep = containment_scan(18, opts);
    CHECK(rep.c_n == 11);
    CHECK(rep.flag_exists);
    CHECK(rep.all_nested);
    CHECK(rep.maximizer_count == 4);  // the quadruple and its conjugates
}
