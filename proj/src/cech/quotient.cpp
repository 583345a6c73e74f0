#include "cf/cech/quotient.hpp"

#include <stdexcept>

namespace cf::cech {

QuotientMode parse_quotient_mode(const std::string& s) {
    if (s == "plain") return QuotientMode::Plain;
    if (s == "mod_torsion_and_h") return QuotientMode::ModTorsionAndH;
    if (s == "mod_h_image") return QuotientMode::ModHImage;
    throw std::invalid_argument("unknown quotient mode '" + s + "'");
}

std::string to_string(QuotientMode m) {
    switch (m) {
        case QuotientMode::Plain: return "plain";
        case QuotientMode::ModTorsionAndH: return "mod_torsion_and_h";
        case QuotientMode::ModHImage: return "mod_h_image";
    }
    return "?";
}

FGAbelianGroup quotient_by_class(const FGAbelianGroup& H, const GroupElement& h, QuotientMode mode,
                                 const IntMatrix& images) {
    const std::size_t t = H.torsion.size(), n = t + static_cast<std::size_t>(H.rank);
    if (H.torus) throw std::invalid_argument("quotient of a group with circle factors");
    if (mode == QuotientMode::ModHImage) {
        if (images.rows() != n) throw std::invalid_argument("basis/coordinate mismatch");
        IntMatrix free(H.rank, images.cols());
        for (std::size_t i = 0; i < free.rows(); ++i)
            for (std::size_t j = 0; j < images.cols(); ++j) free(i, j) = images(t + i, j);
        return FGAbelianGroup(H.rank - static_cast<int>(rank(free)));
    }
    if (h.coords.size() != n) throw std::invalid_argument("basis/coordinate mismatch");
    if (mode == QuotientMode::ModTorsionAndH) {
        IntMatrix rel(H.rank, 1);
        for (std::size_t i = 0; i < rel.rows(); ++i) rel(i, 0) = h.coords[t + i];
        return FGAbelianGroup::cokernel(rel);
    }
    IntMatrix rel(n, t + 1);
    for (std::size_t i = 0; i < t; ++i) rel(i, i) = H.torsion[i];
    for (std::size_t i = 0; i < n; ++i) rel(i, t) = h.coords[i];
    return FGAbelianGroup::cokernel(rel);
}

std::string DeligneDescription::str() const {
    if (!extension) return group.str();
    std::string s = "extension:";
    for (const auto& q : sequences) s += "\n  " + q;
    return s;
}

FGAbelianGroup rz_cohomology(const std::vector<FGAbelianGroup>& H, int k) {
    auto at = [&](int d) { return d >= 0 && d < static_cast<int>(H.size()) ? H[d] : FGAbelianGroup(); };
    if (k < 0) return {};
    return FGAbelianGroup(0, at(k + 1).torsion, at(k).rank);
}

DeligneDescription deligne_groups(const std::vector<FGAbelianGroup>& H, int n, int p) {
    if (n <= 0) throw std::invalid_argument("Deligne weight must be positive");
    if (p < 0) throw std::invalid_argument("negative degree");
    DeligneDescription d;
    if (p < n) {
        d.group = rz_cohomology(H, p - 1);
        return d;
    }
    if (p > n) {
        d.group = p < static_cast<int>(H.size()) ? H[p] : FGAbelianGroup();
        return d;
    }
    d.extension = true;
    d.rz_part = rz_cohomology(H, n - 1);
    d.integral = n < static_cast<int>(H.size()) ? H[n] : FGAbelianGroup();
    const std::string N = std::to_string(n), N1 = std::to_string(n - 1);
    d.sequences = {
        "0 -> H^" + N1 + "(M, R/Z) = " + d.rz_part.str() + " -> H^" + N + "(M, Z(" + N + ")_D) -> Omega^" + N +
            "(M)_Z -> 0",
        "0 -> Omega^" + N1 + "(M)/Omega^" + N1 + "(M)_Z -> H^" + N + "(M, Z(" + N + ")_D) -> H^" + N +
            "(M, Z) = " + d.integral.str() + " -> 0",
    };
    return d;
}

}  // namespace cf::cech
