#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cf/cech/cohomology.hpp"
#include "cf/cech/complex.hpp"
#include "cf/cech/double.hpp"
#include "cf/cech/lattice.hpp"
#include "cf/cech/quotient.hpp"
#include "support/properties.hpp"

using namespace cf::cech;
namespace props = cf::props;

namespace {

IntMatrix mat(std::vector<std::vector<int>> rows) {
    IntMatrix a(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = rows[i][j];
    return a;
}

std::vector<std::string> groups(const ComplexPtr& k, const Ring& r = {}) {
    std::vector<std::string> out;
    for (const auto& g : cohomology_all(k, r)) out.push_back(g.str());
    return out;
}

using V = std::vector<std::string>;

/* GF(2) row reduction: rank of the columns of a 0/1 matrix. */
std::size_t rank2(std::vector<std::vector<int>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && !a[p][c]) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != r && a[i][c])
                for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
        ++r;
    }
    return r;
}

void expect(const props::Result& r, int n) {
    CHECK_MESSAGE(r.ok(), r.name, ": ", r.first_failure);
    CHECK(r.instances == n);
}

}  // namespace

TEST_CASE("Smith normal form examples") {
    SNFResult s = smith(mat({{2, 4}, {6, 8}}));
    CHECK(s.diag == std::vector<Int>{2, 4});
    CHECK(s.U * mat({{2, 4}, {6, 8}}) * s.V == s.D);
    CHECK(smith(mat({{0, 0}, {0, 0}})).rank() == 0);
    CHECK(smith(mat({{2, 0}, {0, 3}})).diag == std::vector<Int>{1, 6});
    CHECK(rank(mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
    CHECK(determinant(mat({{1, 2}, {3, 4}})) == -2);
}

TEST_CASE("finitely generated abelian groups") {
    FGAbelianGroup g(1, {Int(6), Int(2)});
    CHECK(g.torsion == std::vector<Int>{2, 6});
    CHECK(FGAbelianGroup(0, {Int(2), Int(3)}).torsion == std::vector<Int>{6});
    CHECK(FGAbelianGroup::cokernel(mat({{2, 0}, {0, 3}})) == FGAbelianGroup::cyclic(6));
    CHECK(FGAbelianGroup::cyclic(0) == FGAbelianGroup::free(1));
    CHECK((FGAbelianGroup(3) + FGAbelianGroup::cyclic(3)).str() == "Z^3 + Z/3");
    CHECK(FGAbelianGroup(0, {}, 2).str() == "(R/Z)^2");
    CHECK(FGAbelianGroup().str() == "0");
}

TEST_CASE("fixture cohomology over Z, Q and Z/n") {
    CHECK(groups(sphere3()) == V{"Z", "0", "0", "Z"});
    CHECK(groups(circle()) == V{"Z", "Z"});
    CHECK(groups(rp2()) == V{"Z", "0", "Z/2"});
    CHECK(groups(torus3()) == V{"Z", "Z^3", "Z^3", "Z"});
    CHECK(groups(rp2(), Ring::Qr()) == V{"Q", "0", "0"});
    CHECK(groups(rp2(), Ring::mod(2)) == V{"Z/2", "Z/2", "Z/2"});
    CHECK(groups(rp2(), Ring::mod(3)) == V{"Z/3", "0", "0"});
    CHECK(groups(simplex(3)) == V{"Z", "0", "0", "0"});
}

TEST_CASE("Euler characteristic equals the alternating Betti sum") {
    for (const auto& name : fixture_names()) {
        auto k = fixture(name);
        long b = 0;
        for (const auto& g : cohomology_all(k, Ring::Qr())) b += (g.degree % 2 ? -1 : 1) * g.group.rank;
        CHECK_MESSAGE(k->euler_characteristic() == b, name);
    }
}

TEST_CASE("cohomology is invariant under vertex relabelling") {
    std::mt19937_64 rng(5);
    for (const char* name : {"S1", "S3", "RP2", "I"}) {
        auto k = fixture(name);
        const V ref = groups(k);
        for (int t = 0; t < 25; ++t) {
            std::vector<int> perm(k->vertices());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(groups(relabel(*k, perm)) == ref);
        }
    }
    std::vector<int> perm(27);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(groups(relabel(*torus3(), perm)) == groups(torus3()));
}

TEST_CASE("class_of: generators are unit vectors and coboundaries vanish") {
    std::mt19937_64 rng(9);
    for (const char* name : {"RP2", "S3", "T3"}) {
        auto k = fixture(name);
        for (int p = 0; p <= k->dim(); ++p) {
            IntegralCohomology h = integral_cohomology(k, p);
            const auto& gens = h.generators();
            for (std::size_t i = 0; i < gens.size(); ++i) {
                GroupElement e = h.class_of(gens[i]);
                for (std::size_t j = 0; j < e.coords.size(); ++j) CHECK(e.coords[j] == (i == j ? 1 : 0));
            }
            if (p == 0) continue;
            for (int t = 0; t < 40; ++t) {
                Cochain c(k, p - 1);
                for (std::size_t i = 0; i < c.size(); ++i) c.set(i, std::uniform_int_distribution<int>(-4, 4)(rng));
                CHECK(class_of(coboundary(c)).is_zero());
            }
        }
    }
    Cochain not_closed(circle(), 0);
    not_closed.set(0, 1);
    CHECK_THROWS(class_of(not_closed));
}

TEST_CASE("cup products on fixtures") {
    auto k = sphere3();
    Cochain one(k, 0), z(k, 3);
    for (std::size_t i = 0; i < one.size(); ++i) one.set(i, 1);
    z.set(0, 7);
    CHECK(cup(one, z) == z);
    CHECK(cup(z, one) == z);

    Cochain a(k, 0), b(k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a.set(i, static_cast<int>(i) + 1);
        b.set(i, 2);
    }
    CHECK(cup(a, b) == a * Rat(2));
    CHECK(cup(a.with_ring(Ring::mod(2)), b).ring() == Ring::mod(2));
    CHECK_THROWS(cup(a.with_ring(Ring::mod(2)), b.with_ring(Ring::mod(3))));
}

TEST_CASE("mod 2 cup square on the projective plane") {
    /* x generates H^1(RP2; Z/2); x u x evaluates to 1 on the mod 2 fundamental class */
    auto k = rp2();
    const IntMatrix d0 = k->coboundary_matrix(0), d1 = k->coboundary_matrix(1);
    const std::size_t ne = k->count(1);
    std::vector<std::vector<int>> im(ne, std::vector<int>(k->count(0)));
    for (std::size_t i = 0; i < ne; ++i)
        for (std::size_t j = 0; j < k->count(0); ++j) im[i][j] = static_cast<int>(d0(i, j) & 1);
    const std::size_t rim = rank2(im);
    std::vector<int> x;
    for (std::uint32_t bits = 1; bits < (1u << ne) && x.empty(); ++bits) {
        std::vector<int> v(ne);
        for (std::size_t i = 0; i < ne; ++i) v[i] = (bits >> i) & 1;
        bool closed = true;
        for (std::size_t r = 0; r < d1.rows() && closed; ++r) {
            int s = 0;
            for (std::size_t c = 0; c < ne; ++c) s += static_cast<int>(d1(r, c) & 1) * v[c];
            closed = s % 2 == 0;
        }
        if (!closed) continue;
        auto aug = im;
        for (std::size_t i = 0; i < ne; ++i) aug[i].push_back(v[i]);
        if (rank2(aug) > rim) x = v;
    }
    REQUIRE_FALSE(x.empty());
    Cochain c(k, 1, Ring::mod(2));
    for (std::size_t i = 0; i < ne; ++i) c.set(i, x[i]);
    Cochain sq = cup(c, c);
    Rat total = 0;
    for (std::size_t i = 0; i < sq.size(); ++i) total += sq[i];
    CHECK(Ring::mod(2).reduce(total) == 1);
    CHECK(steenrod_square(c, 1) == sq);
    CHECK(steenrod_square(c, 0) == c);
    CHECK_THROWS(cup_i(c.with_ring(Ring::Zr()), c.with_ring(Ring::Zr()), 1));
}

TEST_CASE("cup-1 satisfies the coboundary formula mod 2") {
    /* d(a u_1 b) = a u b + b u a + da u_1 b + a u_1 db over Z/2 */
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        auto k = t % 2 ? sphere3() : rp2();
        const int p = std::uniform_int_distribution<int>(1, 2)(rng);
        const int q = std::uniform_int_distribution<int>(1, 2)(rng);
        if (p + q > k->dim()) continue;
        Cochain a(k, p, Ring::mod(2)), b(k, q, Ring::mod(2));
        for (std::size_t i = 0; i < a.size(); ++i) a.set(i, rng() & 1);
        for (std::size_t i = 0; i < b.size(); ++i) b.set(i, rng() & 1);
        Cochain lhs = coboundary(cup_i(a, b, 1));
        Cochain rhs = cup(a, b) + cup(b, a);
        if (p + q + 1 <= k->dim()) rhs = rhs + cup_i(coboundary(a), b, 1) + cup_i(a, coboundary(b), 1);
        if (p + q + 1 <= k->dim()) CHECK(lhs == rhs);
    }
}

TEST_CASE("integral Sq3 lands in cocycles") {
    auto k = torus3();
    IntegralCohomology h0 = integral_cohomology(k, 0);
    Cochain one = from_int_vector(k, 0, h0.generators()[0]);
    Cochain s = integral_sq3(one);
    CHECK(s.degree() == 3);
    CHECK(s.is_zero());
}

TEST_CASE("cochain and complex JSON round trips") {
    auto k = rp2();
    auto k2 = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_json(k->to_json()));
    CHECK(groups(k2) == groups(k));
    Cochain c(k, 1, Ring::mod(5));
    for (std::size_t i = 0; i < c.size(); ++i) c.set(i, static_cast<int>(i * 3));
    CHECK(Cochain::from_json(k, c.to_json()) == c);
    CHECK_THROWS(SimplicialComplex::from_json(nlohmann::json::parse(R"({"vertices": 3})")));
    CHECK_THROWS(SimplicialComplex::from_json(nlohmann::json::parse(R"({"vertices": 2, "facets": [[0, 5]]})")));
    CHECK(Ring::parse("Zmod:7") == Ring::mod(7));
    CHECK_THROWS(Ring::parse("R"));
    CHECK_THROWS(Ring::parse("Zmod:x"));
}

TEST_CASE("quotient_by_class examples") {
    GroupElement h5{{Int(5)}};
    CHECK(quotient_by_class(FGAbelianGroup(1), h5, QuotientMode::Plain) == FGAbelianGroup::cyclic(5));
    CHECK(quotient_by_class(FGAbelianGroup(1), h5, QuotientMode::ModTorsionAndH) == FGAbelianGroup::cyclic(5));
    FGAbelianGroup zt(1, {Int(2)});
    CHECK(quotient_by_class(zt, GroupElement{{Int(0), Int(0)}}, QuotientMode::ModTorsionAndH) == FGAbelianGroup(1));
    CHECK(quotient_by_class(zt, GroupElement{{Int(0), Int(0)}}, QuotientMode::Plain) == zt);
    CHECK(quotient_by_class(FGAbelianGroup(2), GroupElement{{Int(2), Int(0)}}, QuotientMode::Plain) ==
          FGAbelianGroup(1, {Int(2)}));
    CHECK(quotient_by_class(FGAbelianGroup(3), {}, QuotientMode::ModHImage, mat({{1}, {1}, {0}})).rank == 2);
    CHECK(parse_quotient_mode(to_string(QuotientMode::ModHImage)) == QuotientMode::ModHImage);
    CHECK_THROWS(quotient_by_class(FGAbelianGroup(1), GroupElement{{Int(1), Int(2)}}, QuotientMode::Plain));
}

TEST_CASE("Deligne cohomology groups") {
    std::vector<FGAbelianGroup> t3;
    for (const auto& g : cohomology_all(torus3())) t3.push_back(g.group);
    CHECK(deligne_groups(t3, 3, 2).group.str() == "(R/Z)^3");
    CHECK(deligne_groups(t3, 4, 5).group.trivial());
    CHECK(deligne_groups(t3, 1, 2).group.str() == "Z^3");
    std::vector<FGAbelianGroup> s1 = {FGAbelianGroup(1), FGAbelianGroup(1)};
    auto d = deligne_groups(s1, 1, 1);
    CHECK(d.extension);
    CHECK(d.integral == FGAbelianGroup(1));
    CHECK(d.rz_part.str() == "R/Z");
    CHECK(d.sequences.size() == 2);
    std::vector<FGAbelianGroup> rp = {FGAbelianGroup(1), FGAbelianGroup(), FGAbelianGroup::cyclic(2)};
    CHECK(rz_cohomology(rp, 1).str() == "Z/2");
    CHECK_THROWS(deligne_groups(s1, 0, 1));
}

TEST_CASE("lattices and subquotients") {
    Subquotient q = Subquotient::of_group(FGAbelianGroup(1, {Int(6)}));
    CHECK(q.group() == FGAbelianGroup(1, {Int(6)}));
    /* 2Z^2 + <(1,1)> modulo <(2,2)> */
    Subquotient s(mat({{2, 0, 1}, {0, 2, 1}}), mat({{2}, {2}}));
    CHECK(s.group() == FGAbelianGroup(1, {Int(2)}));
    CHECK(s.contains({Int(1), Int(1)}));
    CHECK_FALSE(s.contains({Int(1), Int(0)}));
    CHECK(s.coords({Int(2), Int(2)}).is_zero());
    CHECK(solve_in_lattice(mat({{2}, {4}}), {Int(6), Int(12)}) == std::optional<std::vector<Int>>({Int(3)}));
    CHECK_FALSE(solve_in_lattice(mat({{2}, {4}}), {Int(1), Int(2)}).has_value());
    IntMatrix k = integer_kernel(mat({{1, 1, 1}}));
    CHECK(k.cols() == 2);
    CHECK((mat({{1, 1, 1}}) * k).is_zero());
    CHECK(preimage(mat({{2}}), mat({{6}})).cols() == 1);
    CHECK(preimage(mat({{2}}), mat({{6}}))(0, 0) == 3);
}

TEST_CASE("purely Cech cochains wedge like cup") {
    auto k = sphere3();
    auto pt = simplex(0);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        const int p = static_cast<int>(rng() % 2), q = static_cast<int>(rng() % 2);
        DoubleCochain a(k, pt, p), b(k, pt, q);
        Cochain ca(k, p), cb(k, q);
        for (std::size_t i = 0; i < ca.size(); ++i) {
            int v = static_cast<int>(rng() % 7) - 3;
            ca.set(i, v);
            a.at(p)[i] = v;
        }
        for (std::size_t i = 0; i < cb.size(); ++i) {
            int v = static_cast<int>(rng() % 7) - 3;
            cb.set(i, v);
            b.at(q)[i] = v;
        }
        DoubleCochain w = dc_wedge(a, b);
        Cochain c = cup(ca, cb);
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(w.at(p + q)[i] == c[i]);
    }
}

TEST_CASE("Deligne cup with vanishing forms is the integral cup") {
    std::mt19937_64 rng(21);
    auto k = sphere3(), l = interval();
    for (int t = 0; t < 20; ++t) {
        auto a = DeligneCochain::random(k, l, 1, 1, rng), b = DeligneCochain::random(k, l, 1, 2, rng);
        for (auto& f : a.forms) std::fill(f.begin(), f.end(), Rat(0));
        for (auto& f : b.forms) std::fill(f.begin(), f.end(), Rat(0));
        auto c = deligne_cup(a, b);
        Cochain ca(k, 1), cb(k, 2);
        for (std::size_t i = 0; i < ca.size(); ++i) ca.set(i, a.integral[i]);
        for (std::size_t i = 0; i < cb.size(); ++i) cb.set(i, b.integral[i]);
        Cochain cc = cup(ca, cb);
        for (std::size_t i = 0; i < cc.size(); ++i) CHECK(c.integral[i] == cc[i]);
        for (const auto& f : c.forms)
            for (const auto& x : f) CHECK(x == 0);
    }
}

TEST_CASE("a wrong wedge sign is detected") {
    /* guards the property suites against vacuous passes */
    std::mt19937_64 rng(1);
    int caught = 0;
    for (int t = 0; t < 50; ++t) {
        auto a = DoubleCochain::random(circle(), circle(), 0, rng), b = DoubleCochain::random(circle(), circle(), 1, rng);
        auto lhs = total_differential(dc_wedge(a, b));
        auto wrong = dc_wedge(total_differential(a), b) - dc_wedge(a, total_differential(b));
        if (!(lhs - wrong).is_zero()) ++caught;
    }
    CHECK(caught > 40);
}

TEST_CASE("property suites: 1000 seeded instances each") {
    const std::uint64_t seed = 20240917;
    const int n = 1000;
    expect(props::delta_squared(seed, n), n);
    expect(props::cup_leibniz(seed, n), n);
    expect(props::cup_associativity(seed, n), n);
    expect(props::total_d_squared(seed, n), n);
    expect(props::wedge_leibniz(seed, n), n);
    expect(props::wedge_associativity(seed, n), n);
    expect(props::deligne_d_squared(seed, n), n);
    expect(props::deligne_leibniz(seed, n), n);
    expect(props::snf_identity(seed, n, 12), n);
}
