#include "cf/catalog/cochains.hpp"

#include <set>
#include <stdexcept>

namespace cf::cat {

namespace {

Idx slice(const Idx& idx, std::size_t from, std::size_t to) {
    return Idx(idx.begin() + static_cast<std::ptrdiff_t>(from), idx.begin() + static_cast<std::ptrdiff_t>(to) + 1);
}

Builder cech_cup(Builder a, int pa, Builder b, Rational sign) {
    return [=](const Idx& idx) {
        std::size_t pa_ = static_cast<std::size_t>(pa);
        return (a(slice(idx, 0, pa_)) * b(slice(idx, pa_, idx.size() - 1))).scaled(sign);
    };
}

Builder sum_builders(std::vector<Builder> parts) {
    return [parts](const Idx& idx) {
        Expr out;
        for (const auto& p : parts) out += p(idx);
        return out;
    };
}

}  // namespace

Expr SymCochain::at(int slot, const Idx& idx) const {
    auto it = slots.find(slot);
    if (it == slots.end()) return {};
    if (static_cast<int>(idx.size()) != cech(slot) + 1) throw std::invalid_argument("component evaluated at a tuple of wrong length");
    return it->second(idx);
}

SymCochain D(const SymCochain& x) {
    SymCochain r;
    r.total = x.total + 1;
    r.order = x.order;
    const int top = x.deligne() ? x.order : x.max_slot() + 1;
    for (int k = 0; k <= top; ++k) {
        const int p = r.total - k;
        if (p < 0) continue;
        Builder bx, by;
        if (auto it = x.slots.find(k); it != x.slots.end() && x.cech(k) >= 0) bx = it->second;
        if (auto it = x.slots.find(k - 1); k >= 1 && it != x.slots.end()) by = it->second;
        if (!bx && !by) continue;
        const bool iota = x.deligne() && k == 1;
        r.slots[k] = [bx, by, iota, p](const Idx& idx) {
            Expr out;
            if (bx) out += delta(bx, idx);
            if (by) {
                Expr v = by(idx);
                if (!iota) v = d(v);
                if (p & 1) out -= v;
                else out += v;
            }
            return out;
        };
    }
    return r;
}

static SymCochain combine(const SymCochain& a, const SymCochain& b, int sign) {
    if (a.total != b.total || a.order != b.order) throw std::invalid_argument("adding cochains of different type");
    SymCochain r = a;
    for (const auto& [k, bb] : b.slots) {
        auto it = r.slots.find(k);
        if (it == r.slots.end()) {
            if (sign > 0) r.slots[k] = bb;
            else r.slots[k] = [bb](const Idx& idx) { return -bb(idx); };
        } else {
            Builder aa = it->second;
            it->second = [aa, bb, sign](const Idx& idx) { return sign > 0 ? aa(idx) + bb(idx) : aa(idx) - bb(idx); };
        }
    }
    return r;
}

SymCochain operator+(const SymCochain& a, const SymCochain& b) { return combine(a, b, 1); }
SymCochain operator-(const SymCochain& a, const SymCochain& b) { return combine(a, b, -1); }

SymCochain scale(const SymCochain& a, const Rational& c, int tau) {
    SymCochain r = a;
    for (auto& [k, b] : r.slots) {
        Builder bb = b;
        b = [bb, c, tau](const Idx& idx) { return bb(idx).scaled(c, tau); };
    }
    return r;
}

SymCochain with_order(const SymCochain& a, int n) {
    if (!a.deligne() || n < a.order) throw std::invalid_argument("cannot raise the order of this cochain");
    SymCochain r = a;
    r.order = n;
    return r;
}

SymCochain wedge(const SymCochain& x, const SymCochain& y) {
    if (x.deligne() || y.deligne()) throw std::invalid_argument("wedge expects Cech-de Rham cochains");
    SymCochain r;
    r.total = x.total + y.total;
    std::map<int, std::vector<Builder>> parts;
    for (const auto& [q1, bx] : x.slots)
        for (const auto& [q2, by] : y.slots) {
            int p1 = x.cech(q1), p2 = y.cech(q2);
            if (p1 < 0 || p2 < 0) continue;
            Rational s = ((q1 * p2) & 1) ? Rational(-1) : Rational(1);
            parts[q1 + q2].push_back(cech_cup(bx, p1, by, s));
        }
    for (auto& [q, v] : parts) r.slots[q] = sum_builders(v);
    return r;
}

SymCochain deligne_cup(const SymCochain& x, const SymCochain& y) {
    if (!x.deligne() || !y.deligne()) throw std::invalid_argument("deligne_cup expects Deligne cochains");
    const int m = x.order, n = y.order;
    SymCochain r;
    r.total = x.total + y.total;
    r.order = m + n;
    auto x0 = x.slots.find(0);
    if (x0 != x.slots.end()) {
        for (const auto& [k, by] : y.slots)
            if (k <= n) r.slots[k] = cech_cup(x0->second, x.cech(0), by, Rational(1));
    }
    auto yn = y.slots.find(n);
    if (n >= 1 && yn != y.slots.end()) {
        Builder dy = [b = yn->second](const Idx& idx) { return d(b(idx)); };
        const int p2 = y.cech(n);
        for (const auto& [j, bx] : x.slots) {
            if (j < 1 || j > m) continue;
            Rational s = ((j * p2) & 1) ? Rational(-1) : Rational(1);
            r.slots[n + j] = cech_cup(bx, x.cech(j), dy, s);
        }
    }
    return r;
}

SymCochain integer_cochain(int p, Builder b) {
    SymCochain r;
    r.total = p;
    r.order = 0;
    r.slots[0] = std::move(b);
    return r;
}

std::map<int, Expr> difference_components(const SymCochain& a, const SymCochain& b) {
    if (a.total != b.total) throw std::invalid_argument("comparing cochains of different degree");
    std::set<int> keys;
    for (const auto& [k, v] : a.slots) keys.insert(k);
    for (const auto& [k, v] : b.slots) keys.insert(k);
    std::map<int, Expr> out;
    for (int k : keys) {
        int p = a.total - k;
        if (p < 0) continue;
        Idx s = simplex(p);
        out[k] = a.at(k, s) - b.at(k, s);
    }
    return out;
}

}  // namespace cf::cat
