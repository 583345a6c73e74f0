#include "cf/catalog/context.hpp"

#include <algorithm>
#include <stdexcept>

namespace cf::cat {

std::string mangle(const std::string& fam, const Idx& idx) {
    if (idx.empty()) return fam;
    std::string s = fam + "_";
    for (int i : idx) {
        if (i < 0 || i > 9) throw std::invalid_argument("simplex index out of range in " + fam);
        s += static_cast<char>('0' + i);
    }
    return s;
}

Idx simplex(int p) {
    Idx s;
    for (int i = 0; i <= p; ++i) s.push_back(i);
    return s;
}

Idx drop(const Idx& idx, std::size_t k) {
    Idx out;
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (i != k) out.push_back(idx[i]);
    return out;
}

Idx pick(const Idx& idx, std::initializer_list<int> positions) {
    Idx out;
    for (int p : positions) out.push_back(idx.at(static_cast<std::size_t>(p)));
    return out;
}

Expr delta(const Builder& c, const Idx& idx) {
    Expr out;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        Expr t = c(drop(idx, k));
        if (k & 1) out -= t;
        else out += t;
    }
    return out;
}

void Context::claim(const std::string& fam) {
    if (fam.empty() || fam.find('_') != std::string::npos) throw std::invalid_argument("bad family name '" + fam + "'");
    if (ops_.count(fam) || scalars_.count(fam)) throw std::invalid_argument("family '" + fam + "' declared twice");
}

void Context::op_free(const std::string& fam, GenClass cls, const std::string& det) {
    claim(fam);
    ops_[fam] = OpFamily{cls, Kind::Free, "", det, nullptr};
}

void Context::op_transition(const std::string& fam, const std::string& log) {
    claim(fam);
    ops_[fam] = OpFamily{GenClass::U, Kind::Transition, log, "", nullptr};
}

void Context::op_conjugate(const std::string& fam, const std::string& trans, const std::string& det) {
    claim(fam);
    ops_[fam] = OpFamily{GenClass::U1, Kind::Conjugate, trans, det, nullptr};
}

void Context::op_defined(const std::string& fam, GenClass cls, Builder rule, const std::string& det) {
    claim(fam);
    ops_[fam] = OpFamily{cls, Kind::Defined, "", det, std::move(rule)};
}

void Context::scalar_free(const std::string& fam, ScalarSpec s) {
    claim(fam);
    scalars_[fam] = ScalarFamily{s, Kind::Free, nullptr, nullptr};
}

void Context::scalar_cone(const std::string& fam, ScalarSpec s, Builder hyp) {
    claim(fam);
    if (s.p < 0) throw std::invalid_argument("cone family needs Cech degree >= 0");
    scalars_[fam] = ScalarFamily{s, Kind::Cone, std::move(hyp), nullptr};
}

void Context::scalar_defined(const std::string& fam, ScalarSpec s, Builder rule) {
    claim(fam);
    scalars_[fam] = ScalarFamily{s, Kind::Defined, std::move(rule), nullptr};
}

void Context::set_d_rule(const std::string& fam, Builder rule) { scalars_.at(fam).drule = std::move(rule); }

bool Context::has(const std::string& fam) const { return ops_.count(fam) || scalars_.count(fam); }

Expr Context::op(const std::string& fam, const Idx& idx) const {
    auto it = ops_.find(fam);
    if (it == ops_.end()) throw std::invalid_argument("missing generator family '" + fam + "'");
    if (it->second.cls == GenClass::S1) return gen_expr(*this, Name(mangle(fam, idx)), Form::Plain);
    return Expr::factor(Name(mangle(fam, idx)));
}

Expr Context::sc(const std::string& fam, const Idx& idx) const {
    auto it = scalars_.find(fam);
    if (it == scalars_.end()) throw std::invalid_argument("missing scalar family '" + fam + "'");
    const ScalarSpec& s = it->second.spec;
    if (s.p < 0) return Expr::symbol(Name(fam), s.q, s.closed, s.integral);
    if (static_cast<int>(idx.size()) != s.p + 1)
        throw std::invalid_argument("family '" + fam + "' takes " + std::to_string(s.p + 1) + " indices");
    return Expr::symbol(Name(mangle(fam, idx)), s.q, s.closed, s.integral);
}

bool Context::split(Name n, std::string& fam, Idx& idx) const {
    const std::string& s = n.str();
    idx.clear();
    if (ops_.count(s) || scalars_.count(s)) {
        fam = s;
        return true;
    }
    auto pos = s.rfind('_');
    if (pos == std::string::npos || pos + 1 >= s.size()) return false;
    for (std::size_t i = pos + 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        idx.push_back(s[i] - '0');
    }
    fam = s.substr(0, pos);
    return ops_.count(fam) || scalars_.count(fam);
}

const GeneratorDecl* Context::generator(Name n) const {
    if (auto it = gen_cache_.find(n); it != gen_cache_.end()) return &it->second;
    std::string fam;
    Idx idx;
    if (!split(n, fam, idx)) return nullptr;
    auto it = ops_.find(fam);
    if (it == ops_.end()) return nullptr;
    GeneratorDecl g{n, it->second.cls, Name(), idx};
    if (!it->second.det.empty()) {
        auto d = scalars_.find(it->second.det);
        bool global = d != scalars_.end() && d->second.spec.p < 0;
        g.log_symbol = Name(mangle(it->second.det, global ? Idx{} : idx));
    }
    return &gen_cache_.emplace(n, g).first->second;
}

const ScalarDecl* Context::scalar(Name n) const {
    if (auto it = sc_cache_.find(n); it != sc_cache_.end()) return &it->second;
    std::string fam;
    Idx idx;
    if (!split(n, fam, idx)) return nullptr;
    auto it = scalars_.find(fam);
    if (it == scalars_.end()) return nullptr;
    const ScalarSpec& s = it->second.spec;
    return &sc_cache_.emplace(n, ScalarDecl{n, s.q, s.closed, s.integral}).first->second;
}

std::optional<Expr> Context::generator_rule(Name n) const {
    std::string fam;
    Idx idx;
    if (!split(n, fam, idx)) return std::nullopt;
    auto it = ops_.find(fam);
    if (it == ops_.end()) return std::nullopt;
    const OpFamily& f = it->second;
    switch (f.kind) {
    case Kind::Transition: {
        int i = idx.at(0), j = idx.at(1);
        if (i == j) return Expr::constant(1);
        if (i > j) return group_inverse(op(fam, {j, i}));
        if (i == 0) return std::nullopt;
        return Expr::unit(Name(mangle(f.aux, {0, i, j}))) * group_inverse(op(fam, {0, i})) * op(fam, {0, j});
    }
    case Kind::Conjugate: {
        int j = idx.at(0);
        if (j == 0) return std::nullopt;
        Expr p = op(f.aux, {0, j});
        return group_inverse(p) * op(fam, {0}) * p;
    }
    case Kind::Defined: return f.rule(idx);
    default: return std::nullopt;
    }
}

std::optional<Expr> Context::symbol_rule(Name n) const {
    std::string fam;
    Idx idx;
    if (!split(n, fam, idx)) return std::nullopt;
    auto it = scalars_.find(fam);
    if (it == scalars_.end()) return std::nullopt;
    const ScalarFamily& f = it->second;
    if (!idx.empty()) {
        Idx sorted = idx;
        int sign = 1;
        for (std::size_t a = 0; a < sorted.size(); ++a)
            for (std::size_t b = 0; b + 1 < sorted.size() - a; ++b)
                if (sorted[b] > sorted[b + 1]) {
                    std::swap(sorted[b], sorted[b + 1]);
                    sign = -sign;
                }
        for (std::size_t a = 0; a + 1 < sorted.size(); ++a)
            if (sorted[a] == sorted[a + 1]) return Expr();
        if (sorted != idx) return sc(fam, sorted).scaled(sign);
    }
    switch (f.kind) {
    case Kind::Cone: {
        if (idx.at(0) == 0) return std::nullopt;
        Idx j{0};
        j.insert(j.end(), idx.begin(), idx.end());
        Expr out = f.rule(j);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            Idx face{0};
            Idx rest = drop(idx, k);
            face.insert(face.end(), rest.begin(), rest.end());
            Expr t = sc(fam, face);
            if (k & 1) out -= t;
            else out += t;
        }
        return out;
    }
    case Kind::Defined: return f.rule(idx);
    default: return std::nullopt;
    }
}

std::optional<Expr> Context::dsymbol_rule(Name n) const {
    std::string fam;
    Idx idx;
    if (!split(n, fam, idx)) return std::nullopt;
    auto it = scalars_.find(fam);
    if (it == scalars_.end() || !it->second.drule) return std::nullopt;
    return it->second.drule(idx);
}

std::optional<Expr> Context::trace_rule(const Word& w) const { return det_log_rule(*this, w); }

std::string Context::family_of(Name n) const {
    std::string fam;
    Idx idx;
    if (!split(n, fam, idx)) return n.str();
    return fam;
}

std::vector<std::string> Context::check_cone_hypotheses(std::uint64_t budget) const {
    std::vector<std::string> bad;
    for (const auto& [fam, f] : scalars_) {
        if (f.kind != Kind::Cone) continue;
        Expr e = delta(f.rule, simplex(f.spec.p + 2));
        if (!normalize(e, *this, budget).is_zero()) bad.push_back(fam);
    }
    return bad;
}

}  // namespace cf::cat
