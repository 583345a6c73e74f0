#include <doctest.h>

#include <random>

#include "cf/ahss/ahss.hpp"
#include "cf/cech/quotient.hpp"
#include "support/properties.hpp"

using namespace cf;
using cech::FGAbelianGroup;
using cech::Int;
using cech::IntMatrix;
namespace props = cf::props;

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

FGAbelianGroup random_group(std::mt19937_64& rng, int max_rank) {
    std::vector<Int> t;
    const int nt = uniform(rng, 0, 2);
    for (int i = 0; i < nt; ++i) t.push_back(uniform(rng, 2, 6));
    return FGAbelianGroup(uniform(rng, 0, max_rank), t);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    IntMatrix a(r, c);
    /* sparse entries, with occasional dependent columns */
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = uniform(rng, 0, 2) ? 0 : uniform(rng, -3, 3);
    if (c >= 2 && uniform(rng, 0, 1))
        for (std::size_t i = 0; i < r; ++i) a(i, c - 1) = a(i, 0) * 2 - a(i, c - 2);
    return a;
}

}  // namespace

TEST_CASE("Z/h on H3 = Z") {
    for (int h = 0; h <= 60; ++h) {
        auto q = cech::quotient_by_class(FGAbelianGroup(1), cech::GroupElement{{Int(h)}},
                                         cech::QuotientMode::ModTorsionAndH);
        CHECK(q == FGAbelianGroup::cyclic(h == 1 ? Int(1) : Int(h)));
        if (h == 1) CHECK(q.trivial());
        if (h == 0) CHECK(q == FGAbelianGroup(1));
    }
}

TEST_CASE("H5/(h u H2) against a dense rational oracle") {
    std::mt19937_64 rng(77);
    int nontrivial = 0;
    for (int t = 0; t < 1000; ++t) {
        FGAbelianGroup h5 = random_group(rng, 5);
        const std::size_t n5 = h5.torsion.size() + static_cast<std::size_t>(h5.rank);
        const std::size_t b2 = static_cast<std::size_t>(uniform(rng, 0, 4));
        IntMatrix images = random_matrix(rng, n5, b2);
        auto q = cech::quotient_by_class(h5, {}, cech::QuotientMode::ModHImage, images);
        const std::size_t want = props::rational_quotient_dim(h5, images);
        CHECK(static_cast<std::size_t>(q.rank) == want);
        CHECK(q.torsion.empty());
        if (want < static_cast<std::size_t>(h5.rank)) ++nontrivial;
    }
    CHECK(nontrivial > 200);
}

TEST_CASE("the mu5 target of random models agrees with the oracle") {
    std::mt19937_64 rng(78);
    for (int t = 0; t < 200; ++t) {
        ahss::CohomologyModel m;
        m.name = "random";
        m.top = 5;
        const int b2 = uniform(rng, 0, 3);
        m.groups = {FGAbelianGroup(1), FGAbelianGroup(), FGAbelianGroup(b2), FGAbelianGroup(1), FGAbelianGroup(),
                    random_group(rng, 4)};
        const int h = uniform(rng, 1, 9);
        m.h = {Int(h)};
        IntMatrix c0(1, 1);
        c0(0, 0) = h;
        m.cup_h[0] = c0;
        m.cup_h[2] = random_matrix(rng, m.coords(5), static_cast<std::size_t>(b2));
        m.validate();
        auto rep = ahss::run(m);
        auto targets = ahss::factorization_targets(m, rep);
        REQUIRE(targets.size() == 3);
        const auto& t5 = targets[2];
        CHECK(t5.p == 5);
        CHECK(t5.factor == 2);
        CHECK(static_cast<std::size_t>(t5.codomain_group.rank) == props::rational_quotient_dim(m.groups[5], m.cup_h[2]));
        CHECK(targets[1].codomain_group == FGAbelianGroup::cyclic(h == 1 ? Int(1) : Int(h)));
    }
}
