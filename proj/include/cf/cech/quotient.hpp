#pragma once

#include <string>
#include <vector>

#include "cf/cech/group.hpp"

namespace cf::cech {

enum class QuotientMode {
    Plain,           /* H / <h> */
    ModTorsionAndH,  /* H / (Tor + <h>) */
    ModHImage,       /* (H (x) R) / image, a real vector space */
};

QuotientMode parse_quotient_mode(const std::string& s);
std::string to_string(QuotientMode m);

/* h is given in the coordinates of H (torsion first, then free). For ModHImage the columns of
   `images` are elements of H in the same coordinates and h is ignored; the result rank is a
   real dimension. */
FGAbelianGroup quotient_by_class(const FGAbelianGroup& H, const GroupElement& h, QuotientMode mode,
                                 const IntMatrix& images = {});

/* H^p(M, Z(n)_D) from the integral cohomology of M. */
struct DeligneDescription {
    bool extension = false;
    FGAbelianGroup group;      /* p != n */
    FGAbelianGroup rz_part;    /* p == n: H^{n-1}(M, R/Z) */
    FGAbelianGroup integral;   /* p == n: H^n(M, Z) */
    std::vector<std::string> sequences;
    std::string str() const;
};

/* H^k(M, R/Z) = (R/Z)^{b_k} + Tor H^{k+1}(M, Z). */
FGAbelianGroup rz_cohomology(const std::vector<FGAbelianGroup>& H, int k);
DeligneDescription deligne_groups(const std::vector<FGAbelianGroup>& H, int n, int p);

}  // namespace cf::cech
