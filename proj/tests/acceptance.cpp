#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cf/ahss/ahss.hpp"
#include "cf/catalog/catalog.hpp"
#include "cf/cech/quotient.hpp"
#include "cf/charclass/charclass.hpp"
#include "support/properties.hpp"

using namespace cf;
using cech::FGAbelianGroup;
using cech::Int;
using cech::IntMatrix;

namespace {

constexpr std::uint64_t kSeed = 20240611;

int failures = 0;

/* Runs body, enforces the wall-clock limit and prints one line. */
void criterion(int n, const std::string& what, double limit_s, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (problem.empty() && s > limit_s) problem = "took " + std::to_string(s) + " s";
    if (!problem.empty()) ++failures;
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", problem.empty() ? "PASS" : "FAIL", n, what.c_str(), s,
                limit_s, problem.empty() ? "" : " -- ", problem.c_str());
}

std::string verify_where(const std::function<bool(const std::string&)>& select, std::size_t& count) {
    std::vector<const cat::Entry*> entries;
    for (const auto& e : cat::manifest())
        if (select(e.id)) entries.push_back(&e);
    count = entries.size();
    if (entries.empty()) return "no entries selected";
    std::string bad;
    for (const auto& r : cat::verify_many(entries, 0, 1))
        if (r.status != cat::Status::Verified) bad += " " + r.id + "=" + cat::status_name(r.status);
    return bad;
}

bool starts(const std::string& s, const char* p) { return s.rfind(p, 0) == 0; }

FGAbelianGroup cyc(long h) { return FGAbelianGroup::cyclic(Int(h)); }

std::string check_k(const std::string& label, const ahss::CohomologyModel& m, long h) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = ahss::run(m);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::vector<Int> tor = m.groups[1].torsion;
    if (h > 1) tor.push_back(Int(h));
    const FGAbelianGroup k1(m.groups[1].rank, tor);
    if (!rep.k0.determined || !rep.k1.determined) return label + ": undetermined";
    if (!(rep.k0.assembled == m.groups[2])) return label + ": K0 = " + rep.k0.assembled.str();
    if (!(rep.k1.assembled == k1)) return label + ": K1 = " + rep.k1.assembled.str();
    if (s > 1.0) return label + ": over 1 s";
    return "";
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

int main() {
    std::printf("seed %llu\n", static_cast<unsigned long long>(kSeed));

    criterion(1, "core lemmas L-basic.*, L-conj.*, L-key.* verify", 60, [] {
        std::size_t n = 0;
        auto bad = verify_where(
            [](const std::string& id) { return starts(id, "L-basic.") || starts(id, "L-conj.") || starts(id, "L-key."); },
            n);
        return bad.empty() && n < 18 ? "only " + std::to_string(n) + " core lemmas" : bad;
    });

    criterion(2, "all Cech-level identities verify, none budget-exceeded", 600, [] {
        std::size_t n = 0;
        auto bad = verify_where([](const std::string& id) { return !starts(id, "L-"); }, n);
        return bad;
    });

    criterion(3, "P(17), brute force at N = 24, Coker = 0 for 0 < n <= 22", 10, [] {
        const std::vector<int> want{1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 2, 1};
        const auto p = charclass::poincare_series(17);
        for (std::size_t i = 0; i < want.size(); ++i)
            if (p[i] != want[i]) return "P(17) differs at t^" + std::to_string(i);
        const auto k = charclass::kernel_series(24);
        for (const auto& r : charclass::exterior_brute_force(24)) {
            if (Int(r.kernel) != k[r.n]) return "kernel mismatch at n = " + std::to_string(r.n);
            if (r.n > 0 && r.n <= 22 && r.coker != 0) return "coker nonzero at n = " + std::to_string(r.n);
        }
        return std::string();
    });

    criterion(4, "K0 = H2, K1 = H1 + Z/h on S3 (h = 1, 2, 5), T3 (h = 3), lens spaces", 20, [] {
        std::string bad;
        for (long h : {1, 2, 5}) bad += check_k("S3 h=" + std::to_string(h), ahss::fixture("S3", Int(h)), h);
        bad += check_k("T3 h=3", ahss::fixture("T3", Int(3)), 3);
        for (long p : {2, 3, 5, 7})
            for (long k : {1, 2, 3, 4, 6})
                bad += check_k("L(" + std::to_string(p) + ") h=" + std::to_string(k),
                               ahss::fixture("lens:" + std::to_string(p), Int(k)), k);
        return bad;
    });

    criterion(5, "SU(3): odd h gives Z/h with justification, even h gives (2Z)/h and Z/h", 10, [] {
        for (long h : {3, 5, 7, 9}) {
            auto rep = ahss::run(ahss::fixture("SU3", Int(h)));
            if (!(rep.k0.assembled == cyc(h)) || !(rep.k1.assembled == cyc(h)))
                return "odd h = " + std::to_string(h) + ": K0 = " + rep.k0.assembled.str() + ", K1 = " +
                       rep.k1.assembled.str();
            const auto& just = rep.constraints.at(0).justification;
            if (just.empty() || rep.text().find(just) == std::string::npos)
                return "odd h = " + std::to_string(h) + ": justification not echoed";
        }
        for (long h : {2, 4, 6}) {
            auto rep = ahss::run(ahss::fixture("SU3-even", Int(h)));
            const std::string hs = std::to_string(h);
            bool plain = false, doubled = false;
            for (const auto& c : rep.candidates) {
                plain = plain || (c.label == "Z/" + hs && c.k1.assembled == cyc(h));
                doubled = doubled || (c.label == "(2Z)/" + hs && c.k1.assembled == cyc(h / 2));
            }
            if (rep.k1.determined || !plain || !doubled) return "even h = " + hs + ": candidates missing";
        }
        return std::string();
    });

    criterion(6, "quotient_by_class: Z/h on H3 = Z, H5/(h u H2) against a dense Q oracle", 60, [] {
        for (long h = 0; h <= 40; ++h) {
            auto q = cech::quotient_by_class(FGAbelianGroup(1), cech::GroupElement{{Int(h)}},
                                             cech::QuotientMode::ModTorsionAndH);
            if (!(q == (h == 0 ? FGAbelianGroup(1) : cyc(h)))) return "H3/h wrong for h = " + std::to_string(h);
        }
        std::mt19937_64 rng(kSeed);
        for (int t = 0; t < 500; ++t) {
            ahss::CohomologyModel m;
            m.name = "random";
            m.top = 5;
            const int b2 = uniform(rng, 0, 4), b5 = uniform(rng, 0, 4);
            std::vector<Int> tor;
            for (int i = uniform(rng, 0, 2); i > 0; --i) tor.push_back(Int(uniform(rng, 2, 6)));
            m.groups = {FGAbelianGroup(1), FGAbelianGroup(),   FGAbelianGroup(b2),
                        FGAbelianGroup(1), FGAbelianGroup(), FGAbelianGroup(b5, tor)};
            const int h = uniform(rng, 1, 9);
            m.h = {Int(h)};
            IntMatrix c0(1, 1), c2(m.coords(5), static_cast<std::size_t>(b2));
            c0(0, 0) = h;
            for (std::size_t i = 0; i < c2.rows(); ++i)
                for (std::size_t j = 0; j < c2.cols(); ++j) c2(i, j) = uniform(rng, 0, 2) ? 0 : uniform(rng, -3, 3);
            m.cup_h[0] = c0;
            m.cup_h[2] = c2;
            m.validate();
            const std::size_t want = props::rational_quotient_dim(m.groups[5], c2);
            auto q = cech::quotient_by_class(m.groups[5], {}, cech::QuotientMode::ModHImage, c2);
            if (static_cast<std::size_t>(q.rank) != want) return "ModHImage rank differs on model " + std::to_string(t);
            auto targets = ahss::factorization_targets(m, ahss::run(m));
            if (targets.size() != 3 || static_cast<std::size_t>(targets[2].codomain_group.rank) != want)
                return "target codomain differs on model " + std::to_string(t);
        }
        return std::string();
    });

    criterion(7, "property suites, 1000 seeded instances each", 600, [] {
        std::string bad;
        for (const auto& r : props::all(kSeed, 1000)) {
            std::printf("  %-32s %d instances, %d failures\n", r.name.c_str(), r.instances, r.failures);
            if (!r.ok() || r.instances < 1000) bad += " " + r.name + (r.first_failure.empty() ? "" : ": " + r.first_failure);
        }
        return bad;
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
