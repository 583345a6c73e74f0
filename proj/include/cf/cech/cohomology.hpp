#pragma once

#include <string>
#include <vector>

#include "cf/cech/complex.hpp"
#include "cf/cech/group.hpp"

namespace cf::cech {

/* ker(next) / im(prev) over Z for prev : C^{p-1} -> C^p and next : C^p -> C^{p+1}. */
class IntegralCohomology {
public:
    IntegralCohomology(const IntMatrix& prev, const IntMatrix& next);

    const FGAbelianGroup& group() const { return group_; }
    /* Generator cocycles as integer vectors: torsion generators first, then free ones. */
    const std::vector<std::vector<Int>>& generators() const { return gens_; }
    /* Throws std::invalid_argument if z is not a cocycle. */
    GroupElement class_of(const std::vector<Int>& z) const;
    /* A cocycle representing the given coordinates. */
    std::vector<Int> representative(const GroupElement& e) const;

private:
    IntMatrix next_, U_, V2inv_;
    std::vector<Int> diag_;
    std::size_t r_ = 0, r2_ = 0;
    std::vector<std::size_t> torsion_pos_;
    FGAbelianGroup group_;
    std::vector<std::vector<Int>> gens_;
};

struct CohomologyGroup {
    int degree = 0;
    Ring ring;
    FGAbelianGroup group; /* for Q the rank is the dimension */
    std::string str() const;
};

std::string render(const FGAbelianGroup& g, const Ring& ring);

/* H^p(K; ring). Z/n coefficients go through the universal coefficient theorem. */
CohomologyGroup cohomology(const ComplexPtr& k, int p, const Ring& ring = {});
std::vector<CohomologyGroup> cohomology_all(const ComplexPtr& k, const Ring& ring = {});
IntegralCohomology integral_cohomology(const ComplexPtr& k, int p);

std::vector<Int> to_int_vector(const Cochain& c);
Cochain from_int_vector(const ComplexPtr& k, int p, const std::vector<Int>& v);

GroupElement class_of(const Cochain& z);

}  // namespace cf::cech
