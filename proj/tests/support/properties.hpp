#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cf/cech/group.hpp"

namespace cf::props {

struct Result {
    std::string name;
    int instances = 0;
    int failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0 && instances > 0; }
};

/* Each suite runs n seeded instances and counts nonzero residuals. */
Result delta_squared(std::uint64_t seed, int n);
Result cup_leibniz(std::uint64_t seed, int n);
Result cup_associativity(std::uint64_t seed, int n);
Result total_d_squared(std::uint64_t seed, int n);
Result wedge_leibniz(std::uint64_t seed, int n);
Result wedge_associativity(std::uint64_t seed, int n);
Result deligne_d_squared(std::uint64_t seed, int n);
Result deligne_leibniz(std::uint64_t seed, int n);
Result snf_identity(std::uint64_t seed, int n, int max_dim = 12);
Result symcalc_d_squared(std::uint64_t seed, int n);
Result symcalc_normalize_idempotent(std::uint64_t seed, int n);

std::vector<Result> all(std::uint64_t seed, int n);

/* Dense Gaussian elimination over Q, independent of the Smith normal form code. */
std::size_t rational_rank(std::vector<std::vector<cech::Rat>> a);
/* dim over Q of (H (x) Q) / span(columns of images), torsion coordinates dropped. */
std::size_t rational_quotient_dim(const cech::FGAbelianGroup& h, const cech::IntMatrix& images);

}  // namespace cf::props
