#include "cf/cech/complex.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cf::cech {

SimplicialComplex::SimplicialComplex(std::string name, int vertices, const std::vector<Simplex>& facets)
    : name_(std::move(name)), vertices_(vertices) {
    if (vertices <= 0 || facets.empty()) throw std::invalid_argument("empty complex");
    std::set<Simplex> fs;
    for (Simplex f : facets) {
        if (f.empty()) throw std::invalid_argument("empty facet");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("facet with repeated vertex");
        if (f.front() < 0 || f.back() >= vertices) throw std::invalid_argument("vertex out of range");
        if (!fs.insert(f).second) throw std::invalid_argument("duplicate facet");
    }
    facets_.assign(fs.begin(), fs.end());

    std::size_t top = 0;
    for (const auto& f : facets_) top = std::max(top, f.size());
    std::vector<std::set<Simplex>> all(top);
    for (const auto& f : facets_) {
        const std::size_t n = f.size();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex s;
            for (std::size_t b = 0; b < n; ++b)
                if (mask >> b & 1u) s.push_back(f[b]);
            all[s.size() - 1].insert(std::move(s));
        }
    }
    for (int v = 0; v < vertices; ++v)
        if (!all[0].count({v})) throw std::invalid_argument("vertex " + std::to_string(v) + " lies in no facet");
    simplices_.resize(top);
    index_.resize(top);
    for (std::size_t d = 0; d < top; ++d) {
        simplices_[d].assign(all[d].begin(), all[d].end());
        for (std::size_t i = 0; i < simplices_[d].size(); ++i) index_[d].emplace(simplices_[d][i], i);
    }
}

std::size_t SimplicialComplex::count(int p) const {
    if (p < 0 || p > dim()) return 0;
    return simplices_[p].size();
}

long SimplicialComplex::index(const Simplex& s) const {
    if (s.empty() || static_cast<int>(s.size()) - 1 > dim()) return -1;
    const auto& m = index_[s.size() - 1];
    auto it = m.find(s);
    return it == m.end() ? -1 : static_cast<long>(it->second);
}

IntMatrix SimplicialComplex::coboundary_matrix(int p) const {
    IntMatrix m(count(p + 1), count(p));
    if (p < 0) return m;
    for (std::size_t r = 0; r < count(p + 1); ++r) {
        const Simplex& s = simplices_[p + 1][r];
        for (std::size_t k = 0; k < s.size(); ++k) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<long>(k));
            m(r, index_[p].at(f)) += (k % 2 ? -1 : 1);
        }
    }
    return m;
}

long SimplicialComplex::euler_characteristic() const {
    long e = 0;
    for (int p = 0; p <= dim(); ++p) e += (p % 2 ? -1 : 1) * static_cast<long>(count(p));
    return e;
}

nlohmann::json SimplicialComplex::to_json() const {
    return {{"name", name_}, {"vertices", vertices_}, {"facets", facets_}};
}

SimplicialComplex SimplicialComplex::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw std::invalid_argument("complex file needs \"vertices\" and \"facets\"");
    return SimplicialComplex(j.value("name", std::string("complex")), j.at("vertices").get<int>(),
                             j.at("facets").get<std::vector<Simplex>>());
}

ComplexPtr make_complex(std::string name, int vertices, const std::vector<Simplex>& facets) {
    return std::make_shared<const SimplicialComplex>(std::move(name), vertices, facets);
}

ComplexPtr relabel(const SimplicialComplex& k, const std::vector<int>& perm) {
    std::vector<Simplex> fs;
    for (const auto& f : k.facets()) {
        Simplex g;
        for (int v : f) g.push_back(perm.at(v));
        fs.push_back(g);
    }
    return make_complex(k.name(), k.vertices(), fs);
}

ComplexPtr simplex(int d) {
    Simplex f(d + 1);
    std::iota(f.begin(), f.end(), 0);
    return make_complex("simplex" + std::to_string(d), d + 1, {f});
}

ComplexPtr sphere3() {
    std::vector<Simplex> fs;
    for (int skip = 0; skip < 5; ++skip) {
        Simplex f;
        for (int v = 0; v < 5; ++v)
            if (v != skip) f.push_back(v);
        fs.push_back(f);
    }
    return make_complex("S3", 5, fs);
}

ComplexPtr circle() { return make_complex("S1", 3, {{0, 1}, {1, 2}, {0, 2}}); }

ComplexPtr interval() { return make_complex("I", 2, {{0, 1}}); }

ComplexPtr rp2() {
    return make_complex("RP2", 6,
                        {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 4, 5},
                         {2, 3, 5}, {3, 4, 5}});
}

ComplexPtr torus3() {
    auto id = [](int a, int b, int c) { return ((a % 3) * 3 + b % 3) * 3 + c % 3; };
    std::vector<Simplex> fs;
    std::array<int, 3> perm{0, 1, 2};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                perm = {0, 1, 2};
                do {
                    std::array<int, 3> x{a, b, c};
                    Simplex f{id(x[0], x[1], x[2])};
                    for (int k : perm) {
                        ++x[k];
                        f.push_back(id(x[0], x[1], x[2]));
                    }
                    fs.push_back(f);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
    return make_complex("T3", 27, fs);
}

std::vector<std::string> fixture_names() { return {"I", "RP2", "S1", "S3", "T3"}; }

ComplexPtr fixture(const std::string& name) {
    if (name == "S3") return sphere3();
    if (name == "S1") return circle();
    if (name == "RP2") return rp2();
    if (name == "T3") return torus3();
    if (name == "I") return interval();
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

Ring Ring::mod(const Int& n) {
    if (n < 2) throw std::invalid_argument("Zmod needs n >= 2");
    return {Kind::Zmod, n};
}

Ring Ring::parse(const std::string& s) {
    if (s == "Z") return Zr();
    if (s == "Q") return Qr();
    if (s.rfind("Zmod:", 0) == 0) {
        std::string d = s.substr(5);
        if (d.empty() || !std::all_of(d.begin(), d.end(), ::isdigit))
            throw std::invalid_argument("bad ring '" + s + "'");
        return mod(Int(d));
    }
    throw std::invalid_argument("bad ring '" + s + "' (expected Z, Q or Zmod:n)");
}

std::string Ring::str() const {
    switch (kind) {
        case Kind::Z: return "Z";
        case Kind::Q: return "Q";
        case Kind::Zmod: return "Zmod:" + n.str();
    }
    return "?";
}

Rat Ring::reduce(const Rat& x) const {
    if (kind == Kind::Q) return x;
    if (denominator(x) != 1) throw std::invalid_argument("non-integral value in ring " + str());
    if (kind == Kind::Z) return x;
    Int v = numerator(x) % n;
    if (v < 0) v += n;
    return Rat(v);
}

Cochain::Cochain(ComplexPtr k, int degree, Ring ring)
    : k_(std::move(k)), degree_(degree), ring_(std::move(ring)), values_(k_->count(degree)) {}

namespace {

/* Sorts s in place; returns the permutation sign, or 0 on a repeated vertex. */
int sort_sign(Simplex& s) {
    int sign = 1;
    for (std::size_t i = 1; i < s.size(); ++i)
        for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
            std::swap(s[j - 1], s[j]);
            sign = -sign;
        }
    return std::adjacent_find(s.begin(), s.end()) != s.end() ? 0 : sign;
}

Rat parse_value(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (!v.is_string()) throw std::invalid_argument("cochain values must be decimal strings");
    std::string s = v.get<std::string>();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad value '" + s + "'");
    }
}

}  // namespace

Rat Cochain::at(const Simplex& s) const {
    if (static_cast<int>(s.size()) != degree_ + 1) throw std::invalid_argument("simplex of wrong dimension");
    Simplex t = s;
    int sign = sort_sign(t);
    if (sign == 0) return 0;
    long i = k_->index(t);
    if (i < 0) throw std::invalid_argument("not a simplex: " + simplex_key(s));
    return ring_.reduce(values_[i] * sign);
}

bool Cochain::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rat& x) { return x == 0; });
}

namespace {
void check_same(const Cochain& a, const Cochain& b) {
    if (a.complex() != b.complex() && a.complex()->facets() != b.complex()->facets())
        throw std::invalid_argument("cochains on different complexes");
    if (!(a.ring() == b.ring())) throw std::invalid_argument("ring mismatch");
}

/* Z acts on every ring; otherwise the rings must agree. */
Ring product_ring(const Ring& a, const Ring& b) {
    if (a == b) return a;
    if (a.kind == Ring::Kind::Z) return b;
    if (b.kind == Ring::Kind::Z) return a;
    throw std::invalid_argument("ring mismatch: " + a.str() + " vs " + b.str());
}
}  // namespace

Cochain Cochain::operator+(const Cochain& o) const {
    check_same(*this, o);
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
    Cochain r = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] = ring_.reduce(values_[i] + o.values_[i]);
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + o * Rat(-1); }

Cochain Cochain::operator*(const Rat& c) const {
    Cochain r = *this;
    for (auto& v : r.values_) v = ring_.reduce(v * c);
    return r;
}

bool Cochain::operator==(const Cochain& o) const {
    return degree_ == o.degree_ && ring_ == o.ring_ && values_ == o.values_;
}

Cochain Cochain::with_ring(const Ring& r) const {
    Cochain c(k_, degree_, r);
    for (std::size_t i = 0; i < values_.size(); ++i) c.values_[i] = r.reduce(values_[i]);
    return c;
}

std::string simplex_key(const Simplex& s) {
    std::string k;
    for (std::size_t i = 0; i < s.size(); ++i) k += (i ? "," : "") + std::to_string(s[i]);
    return k;
}

nlohmann::json Cochain::to_json() const {
    nlohmann::json vals = nlohmann::json::object();
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != 0) vals[simplex_key(k_->simplex(degree_, i))] = values_[i].str();
    return {{"degree", degree_}, {"ring", ring_.str()}, {"values", vals}};
}

Cochain Cochain::from_json(ComplexPtr k, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("degree")) throw std::invalid_argument("cochain file needs \"degree\"");
    Cochain c(k, j.at("degree").get<int>(), Ring::parse(j.value("ring", std::string("Z"))));
    if (j.contains("values"))
        for (const auto& [key, v] : j.at("values").items()) {
            Simplex s;
            std::size_t pos = 0;
            while (pos <= key.size()) {
                auto comma = key.find(',', pos);
                if (comma == std::string::npos) comma = key.size();
                s.push_back(std::stoi(key.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            if (static_cast<int>(s.size()) != c.degree() + 1)
                throw std::invalid_argument("simplex '" + key + "' has the wrong dimension");
            int sign = sort_sign(s);
            long i = k->index(s);
            if (sign == 0 || i < 0) throw std::invalid_argument("not a simplex: " + key);
            c.set(i, parse_value(v) * sign);
        }
    return c;
}

CochainComplex cochain_complex(ComplexPtr k, Ring ring) {
    CochainComplex cc{k, ring, {}};
    for (int p = 0; p < k->dim(); ++p) cc.delta.push_back(k->coboundary_matrix(p));
    for (std::size_t p = 1; p < cc.delta.size(); ++p)
        if (!(cc.delta[p] * cc.delta[p - 1]).is_zero()) throw std::logic_error("delta^2 != 0");
    return cc;
}

std::vector<Rat> coboundary_values(const SimplicialComplex& k, int p, const std::vector<Rat>& v) {
    std::vector<Rat> r(k.count(p + 1));
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Simplex& s = k.simplex(p + 1, i);
        Simplex f(s.begin() + 1, s.end());
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j > 0) f[j - 1] = s[j - 1];
            const Rat& x = v[k.index(f)];
            if (x != 0) r[i] += (j % 2 ? -x : x);
        }
    }
    return r;
}

Cochain coboundary(const Cochain& c) {
    Cochain r(c.complex(), c.degree() + 1, c.ring());
    auto v = coboundary_values(*c.complex(), c.degree(), c.values());
    for (std::size_t i = 0; i < v.size(); ++i) r.set(i, v[i]);
    return r;
}

Cochain cup(const Cochain& a, const Cochain& b) { return cup_i(a, b, 0); }

Cochain cup_i(const Cochain& a, const Cochain& b, int i) {
    if (a.complex() != b.complex() && a.complex()->facets() != b.complex()->facets())
        throw std::invalid_argument("cochains on different complexes");
    Ring ring = product_ring(a.ring(), b.ring());
    if (i < 0) throw std::invalid_argument("cup_i needs i >= 0");
    if (i > 0 && !(ring == Ring::mod(2))) throw std::invalid_argument("cup_i with i > 0 is only defined over Zmod:2");
    const int p = a.degree(), q = b.degree(), n = p + q - i;
    const SimplicialComplex& k = *a.complex();
    Cochain r(a.complex(), n, ring);
    if (n < 0 || i > std::min(p, q)) return r;
    for (std::size_t idx = 0; idx < k.count(n); ++idx) {
        const Simplex& s = k.simplex(n, idx);
        Rat acc = 0;
        /* cut points j_0 < ... < j_i; pieces alternate between the two factors */
        std::vector<int> j(i + 1);
        std::iota(j.begin(), j.end(), 0);
        for (;;) {
            Simplex left, right;
            int from = 0;
            for (int t = 0; t <= i + 1; ++t) {
                int to = t <= i ? j[t] : n;
                Simplex& side = t % 2 ? right : left;
                for (int v = from; v <= to; ++v) side.push_back(s[v]);
                from = to;
            }
            if (static_cast<int>(left.size()) == p + 1 && static_cast<int>(right.size()) == q + 1) {
                const Rat& x = a[k.index(left)];
                if (x != 0) acc += x * b[k.index(right)];
            }
            int t = i;
            while (t >= 0 && j[t] == n - (i - t)) --t;
            if (t < 0) break;
            ++j[t];
            for (int u = t + 1; u <= i; ++u) j[u] = j[u - 1] + 1;
        }
        r.set(idx, acc);
    }
    return r;
}

Cochain steenrod_square(const Cochain& x, int k) {
    if (!(x.ring() == Ring::mod(2))) throw std::invalid_argument("Steenrod squares need Zmod:2 coefficients");
    if (k < 0 || k > x.degree()) return Cochain(x.complex(), x.degree() + std::max(k, 0), x.ring());
    return cup_i(x, x, x.degree() - k);
}

Cochain integral_sq3(const Cochain& x) {
    if (x.ring().kind != Ring::Kind::Z) throw std::invalid_argument("integral Sq3 needs Z coefficients");
    Cochain sq2 = steenrod_square(x.with_ring(Ring::mod(2)), 2);
    Cochain lift = sq2.with_ring(Ring::Zr());
    Cochain d = coboundary(lift);
    Cochain r(x.complex(), d.degree(), Ring::Zr());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (denominator(Rat(d[i] / 2)) != 1) throw std::invalid_argument("integral Sq3 of a non-cocycle");
        r.set(i, Rat(d[i] / 2));
    }
    return r;
}

}  // namespace cf::cech
