#include <doctest.h>

#include <chrono>

#include "cf/charclass/charclass.hpp"

using namespace cf;
using charclass::Int;

namespace {

std::vector<long> to_long(const charclass::SignedSeries& s) {
    std::vector<long> out;
    for (const auto& x : s) out.push_back(static_cast<long>(x));
    return out;
}

/* naive count of subsets of {1, 3, 5, ...} summing to n */
long naive_distinct_odd(int n, int smallest = 1) {
    if (n == 0) return 1;
    long c = 0;
    for (int a = smallest; a <= n; a += 2) c += naive_distinct_odd(n - a, a + 2);
    return c;
}

}  // namespace

TEST_CASE("Poincare series through t^17") {
    CHECK(to_long(charclass::poincare_series(17)) ==
          std::vector<long>{1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 2, 1});
    CHECK(to_long(charclass::poincare_series(0)) == std::vector<long>{1});
    CHECK(to_long(charclass::poincare_series(2)) == std::vector<long>{1, 1, 0});
    CHECK_THROWS_AS(charclass::poincare_series(-1), std::invalid_argument);
}

TEST_CASE("exterior basis counts distinct odd partitions") {
    const auto q = charclass::distinct_odd_partitions(30);
    for (int n = 0; n <= 30; ++n) {
        CHECK(q[n] == Int(naive_distinct_odd(n)));
        CHECK(static_cast<long>(charclass::exterior_basis(n).size()) == naive_distinct_odd(n));
    }
    for (const auto& m : charclass::exterior_basis(16))
        for (std::size_t i = 1; i < m.size(); ++i) CHECK(m[i - 1] < m[i]);
}

TEST_CASE("brute force at N = 24") {
    auto t0 = std::chrono::steady_clock::now();
    const auto rows = charclass::exterior_brute_force(24);
    const auto k = charclass::kernel_series(24);
    REQUIRE(rows.size() == 25);
    for (const auto& r : rows) {
        CHECK_MESSAGE(Int(r.kernel) == k[r.n], "n=" << r.n);
        if (r.n > 0 && r.n <= 22) CHECK_MESSAGE(r.coker == 0, "n=" << r.n);
        if (r.n > 22) CHECK(r.coker == -1);
        if (r.n >= 3 && r.n <= 22) {
            CHECK(r.kernel == r.dim - rows[r.n - 2].dim);
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    CHECK(ms <= 10000);
    auto j = charclass::series_report(24, true);
    CHECK(j["agree"] == true);
    CHECK(j.contains("degree8"));
}

TEST_CASE("differential on generators") {
    /* d x3 = x1 */
    auto d1 = charclass::exterior_differential(1);
    REQUIRE(d1.rows() == 1);
    REQUIRE(d1.cols() == 1);
    CHECK(d1(0, 0) == 1);
    /* d (x1 x3) = x1 x1 = 0 */
    auto b4 = charclass::exterior_basis(4);
    REQUIRE(b4.size() == 1);
    auto d2 = charclass::exterior_differential(2);
    CHECK(d2.rows() == 0);
    /* d d x5 = x1: d o d is not zero */
    auto dd = charclass::exterior_differential(1) * charclass::exterior_differential(3);
    CHECK_FALSE(dd.is_zero());
    auto rows = charclass::exterior_brute_force(8);
    CHECK_FALSE(rows[3].dd_zero);
}

TEST_CASE("classification table") {
    const auto t = charclass::classification_table();
    REQUIRE(t.size() == 4);
    for (const auto& r : t) CHECK(r.consistent);
    CHECK(t[2].group.trivial());
    CHECK(t[3].group == cech::FGAbelianGroup(1));
    auto text = charclass::series_text(17, true);
    CHECK(text.find("MISMATCH") == std::string::npos);
    CHECK(text.find("[1,1,0,1,1,0,0,0,1,1,0,0,1,1,0,1,2,1]") != std::string::npos);
}
