#include "cf/cech/group.hpp"

#include <stdexcept>

namespace cf::cech {

FGAbelianGroup::FGAbelianGroup(int r, std::vector<Int> t, int tor) : rank(r), torus(tor) {
    if (r < 0 || tor < 0) throw std::invalid_argument("negative rank");
    for (const auto& x : t)
        if (x <= 0) throw std::invalid_argument("torsion orders must be positive");
    /* canonical divisibility chain from the diagonal relation matrix */
    IntMatrix d(t.size(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i) d(i, i) = t[i];
    for (const auto& x : smith(d).diag)
        if (x > 1) torsion.push_back(x);
}

FGAbelianGroup FGAbelianGroup::cyclic(const Int& n) {
    if (n == 0) return FGAbelianGroup(1);
    return FGAbelianGroup(0, {abs(n)});
}

FGAbelianGroup FGAbelianGroup::cokernel(const IntMatrix& rel) {
    SNFResult s = smith(rel);
    FGAbelianGroup g;
    g.rank = static_cast<int>(rel.rows() - s.rank());
    for (const auto& x : s.diag)
        if (x > 1) g.torsion.push_back(x);
    return g;
}

Int FGAbelianGroup::order() const {
    if (!finite()) throw std::logic_error("order of an infinite group");
    Int o = 1;
    for (const auto& t : torsion) o *= t;
    return o;
}

std::string FGAbelianGroup::str() const {
    if (trivial()) return "0";
    std::string s;
    auto add = [&](const std::string& x) { s += (s.empty() ? "" : " + ") + x; };
    if (rank == 1) add("Z");
    else if (rank > 1) add("Z^" + std::to_string(rank));
    for (const auto& t : torsion) add("Z/" + t.str());
    if (torus == 1) add("R/Z");
    else if (torus > 1) add("(R/Z)^" + std::to_string(torus));
    return s;
}

FGAbelianGroup FGAbelianGroup::operator+(const FGAbelianGroup& o) const {
    std::vector<Int> t = torsion;
    t.insert(t.end(), o.torsion.begin(), o.torsion.end());
    return FGAbelianGroup(rank + o.rank, t, torus + o.torus);
}

bool GroupElement::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

}  // namespace cf::cech
