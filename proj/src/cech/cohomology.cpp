#include "cf/cech/cohomology.hpp"

#include <boost/integer/common_factor.hpp>
#include <stdexcept>

namespace cf::cech {

namespace {

Int mod_pos(const Int& a, const Int& d) {
    Int r = a % d;
    return r < 0 ? r + d : r;
}

IntMatrix columns_from(const IntMatrix& a, std::size_t first) {
    IntMatrix r(a.rows(), a.cols() - first);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = first; j < a.cols(); ++j) r(i, j - first) = a(i, j);
    return r;
}

}  // namespace

IntegralCohomology::IntegralCohomology(const IntMatrix& prev, const IntMatrix& next) : next_(next) {
    const std::size_t m = prev.rows();
    if (next.cols() != m) throw std::invalid_argument("coboundary shapes do not compose");
    if (!(next * prev).is_zero()) throw std::invalid_argument("delta^2 != 0");
    SNFResult s = smith(prev);
    U_ = s.U;
    diag_ = s.diag;
    r_ = s.rank();
    /* next vanishes on the first r columns of U^{-1}: those span a lattice containing the image */
    SNFResult s2 = smith(columns_from(next * s.Uinv, r_));
    r2_ = s2.rank();
    V2inv_ = s2.Vinv;

    for (std::size_t k = 0; k < r_; ++k)
        if (diag_[k] > 1) {
            torsion_pos_.push_back(k);
            std::vector<Int> g(m);
            for (std::size_t i = 0; i < m; ++i) g[i] = s.Uinv(i, k);
            gens_.push_back(std::move(g));
        }
    for (std::size_t j = r2_; j < m - r_; ++j) {
        std::vector<Int> y(m);
        for (std::size_t i = 0; i < m - r_; ++i) y[r_ + i] = s2.V(i, j);
        gens_.push_back(s.Uinv * y);
    }
    for (std::size_t k : torsion_pos_) group_.torsion.push_back(diag_[k]);
    group_.rank = static_cast<int>(m - r_ - r2_);
}

GroupElement IntegralCohomology::class_of(const std::vector<Int>& z) const {
    if (z.size() != next_.cols()) throw std::invalid_argument("cochain of the wrong size");
    for (const auto& x : next_ * z)
        if (x != 0) throw std::invalid_argument("not a cocycle");
    std::vector<Int> y = U_ * z;
    GroupElement e;
    for (std::size_t k : torsion_pos_) e.coords.push_back(mod_pos(y[k], diag_[k]));
    std::vector<Int> w(y.begin() + static_cast<long>(r_), y.end());
    std::vector<Int> c = V2inv_ * w;
    for (std::size_t j = r2_; j < c.size(); ++j) e.coords.push_back(c[j]);
    return e;
}

std::vector<Int> IntegralCohomology::representative(const GroupElement& e) const {
    if (e.coords.size() != gens_.size()) throw std::invalid_argument("basis/coordinate mismatch");
    std::vector<Int> x(next_.cols());
    for (std::size_t g = 0; g < gens_.size(); ++g)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += e.coords[g] * gens_[g][i];
    return x;
}

std::string render(const FGAbelianGroup& g, const Ring& ring) {
    if (ring.kind != Ring::Kind::Q) return g.str();
    if (g.rank == 0) return "0";
    return g.rank == 1 ? "Q" : "Q^" + std::to_string(g.rank);
}

std::string CohomologyGroup::str() const { return render(group, ring); }

namespace {

FGAbelianGroup integral_group(const SimplicialComplex& k, int p) {
    IntMatrix prev = k.coboundary_matrix(p - 1), next = k.coboundary_matrix(p);
    SNFResult s = smith(prev);
    FGAbelianGroup g;
    g.rank = static_cast<int>(k.count(p) - s.rank() - rank(next));
    for (const auto& d : s.diag)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

}  // namespace

CohomologyGroup cohomology(const ComplexPtr& k, int p, const Ring& ring) {
    CohomologyGroup c{p, ring, {}};
    if (p < 0 || p > k->dim()) return c;
    switch (ring.kind) {
        case Ring::Kind::Z: c.group = integral_group(*k, p); break;
        case Ring::Kind::Q:
            c.group.rank = static_cast<int>(k->count(p) - rank(k->coboundary_matrix(p - 1)) -
                                            rank(k->coboundary_matrix(p)));
            break;
        case Ring::Kind::Zmod: {
            /* H^p(Z) (x) Z/n  +  Tor(H^{p+1}(Z), Z/n) */
            FGAbelianGroup hp = integral_group(*k, p), hq = integral_group(*k, p + 1);
            std::vector<Int> t(hp.rank, ring.n);
            for (const auto& d : hp.torsion) t.push_back(boost::integer::gcd(d, ring.n));
            for (const auto& d : hq.torsion) t.push_back(boost::integer::gcd(d, ring.n));
            c.group = FGAbelianGroup(0, t);
            break;
        }
    }
    return c;
}

std::vector<CohomologyGroup> cohomology_all(const ComplexPtr& k, const Ring& ring) {
    std::vector<CohomologyGroup> r;
    for (int p = 0; p <= k->dim(); ++p) r.push_back(cohomology(k, p, ring));
    return r;
}

IntegralCohomology integral_cohomology(const ComplexPtr& k, int p) {
    return IntegralCohomology(k->coboundary_matrix(p - 1), k->coboundary_matrix(p));
}

std::vector<Int> to_int_vector(const Cochain& c) {
    std::vector<Int> v;
    for (const auto& x : c.values()) {
        if (denominator(x) != 1) throw std::invalid_argument("non-integral cochain");
        v.push_back(numerator(x));
    }
    return v;
}

Cochain from_int_vector(const ComplexPtr& k, int p, const std::vector<Int>& v) {
    Cochain c(k, p);
    if (v.size() != c.size()) throw std::invalid_argument("vector of the wrong size");
    for (std::size_t i = 0; i < v.size(); ++i) c.set(i, Rat(v[i]));
    return c;
}

GroupElement class_of(const Cochain& z) {
    if (z.ring().kind != Ring::Kind::Z) throw std::invalid_argument("class_of works over Z");
    return integral_cohomology(z.complex(), z.degree()).class_of(to_int_vector(z));
}

}  // namespace cf::cech
