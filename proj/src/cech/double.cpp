#include "cf/cech/double.hpp"

#include <stdexcept>

namespace cf::cech {

namespace {

int sgn(int e) { return (e % 2 + 2) % 2 ? -1 : 1; }

void check_shapes(const ComplexPtr& k1, const ComplexPtr& l1, const ComplexPtr& k2, const ComplexPtr& l2) {
    if ((k1 != k2 && k1->facets() != k2->facets()) || (l1 != l2 && l1->facets() != l2->facets()))
        throw std::invalid_argument("shape mismatch: cochains on different complexes");
}

/* index of the front p-face and back q-face of every (p+q)-simplex */
void faces(const SimplicialComplex& k, int p, int q, std::vector<std::size_t>& front, std::vector<std::size_t>& back) {
    const std::size_t n = k.count(p + q);
    front.resize(n);
    back.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Simplex& s = k.simplex(p + q, i);
        front[i] = static_cast<std::size_t>(k.index(Simplex(s.begin(), s.begin() + p + 1)));
        back[i] = static_cast<std::size_t>(k.index(Simplex(s.begin() + p, s.end())));
    }
}

void add_into(Block& acc, const Block& b, int sign = 1) {
    if (b.empty()) return;
    if (acc.size() != b.size()) throw std::logic_error("block size mismatch");
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0) acc[i] += sign > 0 ? b[i] : -b[i];
}

Block random_block(std::size_t n, std::mt19937_64& rng, int range) {
    std::uniform_int_distribution<int> u(-range, range);
    Block b(n);
    for (auto& x : b) x = u(rng);
    return b;
}

}  // namespace

std::size_t block_size(const SimplicialComplex& k, int p, const SimplicialComplex& l, int q) {
    return k.count(p) * l.count(q);
}

Block delta_k(const SimplicialComplex& k, int p, const SimplicialComplex& l, int q, const Block& b) {
    const std::size_t nl = l.count(q);
    Block r(block_size(k, p + 1, l, q));
    if (b.empty() || r.empty()) return r;
    std::vector<Rat> col(k.count(p));
    for (std::size_t sl = 0; sl < nl; ++sl) {
        for (std::size_t sk = 0; sk < col.size(); ++sk) col[sk] = b[sk * nl + sl];
        auto d = coboundary_values(k, p, col);
        for (std::size_t sk = 0; sk < d.size(); ++sk) r[sk * nl + sl] = d[sk];
    }
    return r;
}

Block delta_l(const SimplicialComplex& k, int p, const SimplicialComplex& l, int q, const Block& b) {
    const std::size_t nl = l.count(q), nl1 = l.count(q + 1);
    Block r(block_size(k, p, l, q + 1));
    if (b.empty() || r.empty()) return r;
    for (std::size_t sk = 0; sk < k.count(p); ++sk) {
        std::vector<Rat> row(b.begin() + static_cast<long>(sk * nl), b.begin() + static_cast<long>((sk + 1) * nl));
        auto d = coboundary_values(l, q, row);
        for (std::size_t sl = 0; sl < nl1; ++sl) r[sk * nl1 + sl] = d[sl];
    }
    return r;
}

Block block_cup(const SimplicialComplex& k, const SimplicialComplex& l, int p1, int q1, const Block& a, int p2, int q2,
                const Block& b) {
    Block r(block_size(k, p1 + p2, l, q1 + q2));
    if (a.empty() || b.empty() || r.empty()) return r;
    std::vector<std::size_t> kf, kb, lf, lb;
    faces(k, p1, p2, kf, kb);
    faces(l, q1, q2, lf, lb);
    const std::size_t nl = l.count(q1 + q2), na = l.count(q1), nb = l.count(q2);
    for (std::size_t sk = 0; sk < kf.size(); ++sk)
        for (std::size_t sl = 0; sl < nl; ++sl) {
            const Rat& x = a[kf[sk] * na + lf[sl]];
            if (x == 0) continue;
            const Rat& y = b[kb[sk] * nb + lb[sl]];
            if (y != 0) r[sk * nl + sl] = x * y;
        }
    return r;
}

DoubleCochain::DoubleCochain(ComplexPtr k, ComplexPtr l, int total) : k_(std::move(k)), l_(std::move(l)), total_(total) {
    for (int p = 0; p <= total; ++p) {
        std::size_t n = block_size(*k_, p, *l_, total - p);
        if (n) comp_.emplace(p, Block(n));
    }
}

std::vector<int> DoubleCochain::degrees() const {
    std::vector<int> r;
    for (const auto& [p, b] : comp_) r.push_back(p);
    return r;
}

Block& DoubleCochain::at(int p) { return comp_.at(p); }

const Block& DoubleCochain::at(int p) const {
    static const Block empty;
    auto it = comp_.find(p);
    return it == comp_.end() ? empty : it->second;
}

bool DoubleCochain::is_zero() const {
    for (const auto& [p, b] : comp_)
        for (const auto& x : b)
            if (x != 0) return false;
    return true;
}

DoubleCochain DoubleCochain::operator+(const DoubleCochain& o) const {
    check_shapes(k_, l_, o.k_, o.l_);
    if (total_ != o.total_) throw std::invalid_argument("shape mismatch: degrees differ");
    DoubleCochain r = *this;
    for (auto& [p, b] : r.comp_) add_into(b, o.at(p));
    return r;
}

DoubleCochain DoubleCochain::operator-(const DoubleCochain& o) const { return *this + o * Rat(-1); }

DoubleCochain DoubleCochain::operator*(const Rat& c) const {
    DoubleCochain r = *this;
    for (auto& [p, b] : r.comp_)
        for (auto& x : b) x *= c;
    return r;
}

DoubleCochain DoubleCochain::random(ComplexPtr k, ComplexPtr l, int total, std::mt19937_64& rng, int range) {
    DoubleCochain c(std::move(k), std::move(l), total);
    for (auto& [p, b] : c.comp_) b = random_block(b.size(), rng, range);
    return c;
}

DoubleCochain total_differential(const DoubleCochain& c) {
    const SimplicialComplex &k = *c.k(), &l = *c.l();
    DoubleCochain r(c.k(), c.l(), c.total() + 1);
    const int n = c.total();
    for (int p : r.degrees()) {
        Block& out = r.at(p);
        if (p >= 1 && !c.at(p - 1).empty()) add_into(out, delta_k(k, p - 1, l, n - p + 1, c.at(p - 1)));
        if (!c.at(p).empty()) add_into(out, delta_l(k, p, l, n - p, c.at(p)), sgn(p));
    }
    return r;
}

DoubleCochain dc_wedge(const DoubleCochain& a, const DoubleCochain& b) {
    check_shapes(a.k(), a.l(), b.k(), b.l());
    const SimplicialComplex &k = *a.k(), &l = *a.l();
    DoubleCochain r(a.k(), a.l(), a.total() + b.total());
    for (int p1 : a.degrees())
        for (int p2 : b.degrees()) {
            const int q1 = a.total() - p1, q2 = b.total() - p2;
            if (block_size(k, p1 + p2, l, q1 + q2) == 0) continue;
            add_into(r.at(p1 + p2), block_cup(k, l, p1, q1, a.at(p1), p2, q2, b.at(p2)), sgn(q1 * p2));
        }
    return r;
}

DeligneCochain::DeligneCochain(ComplexPtr k_, ComplexPtr l_, int weight_, int degree_)
    : k(std::move(k_)), l(std::move(l_)), weight(weight_), degree(degree_) {
    if (weight < 0) throw std::invalid_argument("negative weight");
    integral.resize(k->count(degree));
    for (int s = 1; s <= weight; ++s) forms.emplace_back(block_size(*k, degree - s, *l, s - 1));
}

bool DeligneCochain::is_zero() const {
    for (const auto& x : integral)
        if (x != 0) return false;
    for (const auto& b : forms)
        for (const auto& x : b)
            if (x != 0) return false;
    return true;
}

DeligneCochain DeligneCochain::operator+(const DeligneCochain& o) const {
    check_shapes(k, l, o.k, o.l);
    if (weight != o.weight || degree != o.degree) throw std::invalid_argument("shape mismatch: Deligne cochains");
    DeligneCochain r = *this;
    add_into(r.integral, o.integral);
    for (std::size_t s = 0; s < forms.size(); ++s) add_into(r.forms[s], o.forms[s]);
    return r;
}

DeligneCochain DeligneCochain::operator*(const Rat& c) const {
    DeligneCochain r = *this;
    for (auto& x : r.integral) x *= c;
    for (auto& b : r.forms)
        for (auto& x : b) x *= c;
    return r;
}

DeligneCochain DeligneCochain::random(ComplexPtr k, ComplexPtr l, int weight, int degree, std::mt19937_64& rng,
                                      int range) {
    DeligneCochain c(std::move(k), std::move(l), weight, degree);
    c.integral = random_block(c.integral.size(), rng, range);
    for (auto& b : c.forms) b = random_block(b.size(), rng, range);
    return c;
}

namespace {

/* a (x) 1 on C^p(K) (x) C^0(L) */
Block iota(const SimplicialComplex& k, int p, const SimplicialComplex& l, const Block& a) {
    const std::size_t nl = l.count(0);
    Block r(block_size(k, p, l, 0));
    for (std::size_t sk = 0; sk < a.size(); ++sk)
        for (std::size_t sl = 0; sl < nl; ++sl) r[sk * nl + sl] = a[sk];
    return r;
}

}  // namespace

DeligneCochain deligne_differential(const DeligneCochain& c) {
    const SimplicialComplex &k = *c.k, &l = *c.l;
    const int m = c.degree;
    DeligneCochain r(c.k, c.l, c.weight, m + 1);
    r.integral = coboundary_values(k, m, c.integral);
    for (int s = 1; s <= c.weight; ++s) {
        const int p = m + 1 - s; /* Cech degree of the result slot */
        Block& out = r.forms[s - 1];
        if (out.empty()) continue;
        if (p >= 1) add_into(out, delta_k(k, p - 1, l, s - 1, c.forms[s - 1]));
        if (s == 1) add_into(out, iota(k, p, l, c.integral), sgn(p));
        else add_into(out, delta_l(k, p, l, s - 2, c.forms[s - 2]), sgn(p));
    }
    return r;
}

DeligneCochain deligne_cup(const DeligneCochain& a, const DeligneCochain& b) {
    check_shapes(a.k, a.l, b.k, b.l);
    const SimplicialComplex &k = *a.k, &l = *a.l;
    const int m = a.degree, n = b.degree, wb = b.weight;
    DeligneCochain r(a.k, a.l, a.weight + wb, m + n);
    r.integral = block_cup(k, *simplex(0), m, 0, a.integral, n, 0, b.integral);
    const Block ia = iota(k, m, l, a.integral);
    for (int s = 1; s <= wb; ++s)
        if (!r.forms[s - 1].empty()) r.forms[s - 1] = block_cup(k, l, m, 0, ia, n - s, s - 1, b.forms[s - 1]);
    if (a.weight == 0) return r;
    /* weight 0: the integral slot enters through its inclusion as a 0-form */
    const Block db = wb ? delta_l(k, n - wb, l, wb - 1, b.forms[wb - 1]) : iota(k, n, l, b.integral);
    for (int j = 1; j <= a.weight; ++j) {
        Block& out = r.forms[wb + j - 1];
        if (out.empty()) continue;
        out = block_cup(k, l, m - j, j - 1, a.forms[j - 1], n - wb, wb, db);
        if (sgn(j * (n - wb)) < 0)
            for (auto& x : out) x = -x;
    }
    return r;
}

}  // namespace cf::cech
