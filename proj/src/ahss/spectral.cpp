#include <boost/integer/common_factor.hpp>
#include <sstream>
#include <stdexcept>

#include "cf/ahss/ahss.hpp"

namespace cf::ahss {

using cech::column;
using cech::hcat;

namespace {

IntMatrix relations(const FGAbelianGroup& g) {
    IntMatrix r(g.torsion.size() + static_cast<std::size_t>(g.rank), g.torsion.size());
    for (std::size_t i = 0; i < g.torsion.size(); ++i) r(i, i) = g.torsion[i];
    return r;
}

bool is_free(const FGAbelianGroup& g) { return g.torsion.empty() && g.torus == 0; }

bool cyclic_finite(const FGAbelianGroup& g) { return g.rank == 0 && g.torus == 0 && g.torsion.size() == 1; }

KGroup assemble(int parity, int top, const std::map<int, FGAbelianGroup>& e_inf) {
    KGroup k;
    std::vector<int> nonzero;
    for (int p = parity; p <= top; p += 2) {
        const FGAbelianGroup& g = e_inf.at(p);
        k.graded.emplace_back(p, g);
        k.assembled = k.assembled + g;
        if (!g.trivial()) nonzero.push_back(p);
    }
    if (nonzero.size() <= 1) {
        k.extension_resolved = true;
        k.note = "at most one nonzero graded piece";
        return k;
    }
    bool free_quotients = true;
    for (std::size_t i = 0; i + 1 < nonzero.size(); ++i) free_quotients = free_quotients && is_free(e_inf.at(nonzero[i]));
    if (top <= 3 && free_quotients) {
        k.extension_resolved = true;
        k.note = "extensions split: every quotient of the filtration is free (H^1 is torsion free)";
    } else {
        k.note = "extension unresolved: the assembled group is the associated graded";
    }
    return k;
}

std::string k_text(const KGroup& k) {
    if (!k.determined) return "indeterminate";
    return k.assembled.str() + (k.extension_resolved ? "" : " (associated graded)");
}

nlohmann::json k_json(const KGroup& k) {
    nlohmann::json j;
    j["determined"] = k.determined;
    if (!k.determined) return j;
    j["group"] = group_json(k.assembled);
    j["extension_resolved"] = k.extension_resolved;
    j["note"] = k.note;
    j["graded"] = nlohmann::json::array();
    for (const auto& [p, g] : k.graded) j["graded"].push_back({{"p", p}, {"group", group_json(g)}});
    return j;
}

}  // namespace

Page init_pages(const CohomologyModel& m) {
    m.validate();
    Page e;
    e.r = 3;
    for (int p = 0; p <= m.top; ++p) {
        e.E.push_back(Subquotient::of_group(m.groups[p]));
        if (p + 3 <= m.top) e.d.emplace(p, m.d3(p));
    }
    return e;
}

Page apply_d3(const CohomologyModel& m, const Page& e3) {
    if (e3.r != 3) throw std::invalid_argument("apply_d3 needs the E_3 page");
    Page e;
    e.r = 5;
    for (int p = 0; p <= m.top; ++p) {
        const std::size_t n = m.coords(p);
        IntMatrix cycles = p + 3 <= m.top ? cech::preimage(m.d3(p), relations(m.groups[p + 3])) : IntMatrix::identity(n);
        IntMatrix bounds = relations(m.groups[p]);
        if (p >= 3) bounds = hcat(bounds, m.d3(p - 3));
        e.E.emplace_back(cycles, bounds);
    }
    return e;
}

ConvergenceReport converge(const CohomologyModel& m, const Page& e5) {
    if (e5.r != 5) throw std::invalid_argument("converge needs the E_5 page");
    ConvergenceReport rep;
    rep.model = m.name;
    rep.h = m.h;
    rep.e5_sub = e5.E;
    for (int p = 0; p <= m.top; ++p) {
        rep.e3.push_back(m.groups[p]);
        rep.e5.push_back(e5.E[p].group());
    }
    for (const auto& c : m.constraints)
        if (m.constraint_applies(c)) rep.constraints.push_back(c);

    std::vector<bool> open(m.top + 1, false);
    std::vector<std::pair<DifferentialStatus, Constraint>> constrained;
    bool indeterminate = false;
    for (int r = 5; r <= m.top; r += 2)
        for (int p = 0; p + r <= m.top; ++p) {
            const FGAbelianGroup &src = rep.e5[p], &tgt = rep.e5[p + r];
            DifferentialStatus st{r, p, p + r, "zero", ""};
            const Constraint* hit = nullptr;
            for (const auto& c : rep.constraints)
                if (c.r == r && (!c.from || *c.from == p)) hit = &c;
            if (src.trivial() || tgt.trivial()) {
                st.reason = "source or target vanishes";
            } else if (open[p] || open[p + r]) {
                st.status = "indeterminate";
                st.reason = "an earlier differential on this column is not determined";
            } else if (src.finite() && is_free(tgt)) {
                st.reason = "finite source, torsion-free target";
            } else if (r == 5 && p == 0) {
                st.reason =
                    "the rank of finite-rank twisted vector bundles realizes E_inf^{0,0}, so d5 from E_5^{0,0} vanishes";
            } else if (hit && hit->value == Constraint::Value::Zero) {
                st.reason = "constraint: " + hit->justification;
            } else if (hit) {
                st.status = "constrained";
                st.reason = "constraint: " + hit->justification;
                constrained.emplace_back(st, *hit);
            } else {
                st.status = "indeterminate";
                st.reason = "no constraint determines this differential";
            }
            if (st.status != "zero") open[p] = open[p + r] = true;
            if (st.status == "indeterminate") indeterminate = true;
            rep.differentials.push_back(st);
        }

    std::map<int, FGAbelianGroup> fixed;
    for (int p = 0; p <= m.top; ++p) {
        if (open[p]) {
            rep.e_inf.push_back(std::nullopt);
        } else {
            rep.e_inf.push_back(rep.e5[p]);
            fixed[p] = rep.e5[p];
        }
    }
    auto parity_open = [&](int parity) {
        for (int p = parity; p <= m.top; p += 2)
            if (open[p]) return true;
        return false;
    };
    for (int parity : {0, 1}) {
        KGroup k;
        if (parity_open(parity)) {
            k.determined = false;
            k.note = "a differential into or out of this parity is not determined";
        } else {
            k = assemble(parity, m.top, fixed);
        }
        (parity ? rep.k1 : rep.k0) = k;
    }

    if (!indeterminate && constrained.size() == 1) {
        const auto& [st, c] = constrained.front();
        const FGAbelianGroup &src = rep.e5[st.from], &tgt = rep.e5[st.to];
        if (cyclic_finite(src) && cyclic_finite(tgt)) {
            const Int mod = src.torsion[0], mod2 = tgt.torsion[0];
            Int g = e5.E[st.from].coords(c.element).coords.at(0);
            Int bound = boost::integer::gcd(g, mod);
            if (bound == 0) bound = mod;
            for (Int d = 1; d <= bound; ++d) {
                if (bound % d != 0 || mod2 % d != 0) continue;
                Candidate cand;
                cand.label = d == 1 ? "Z/" + mod.str() : "(" + d.str() + "Z)/" + mod.str();
                cand.e_inf = fixed;
                cand.e_inf[st.from] = FGAbelianGroup::cyclic(mod / d);
                cand.e_inf[st.to] = FGAbelianGroup::cyclic(mod2 / d);
                cand.k0 = assemble(0, m.top, cand.e_inf);
                cand.k1 = assemble(1, m.top, cand.e_inf);
                rep.candidates.push_back(cand);
            }
        } else {
            rep.warnings.push_back("kernel constraint on a non-cyclic column: no candidates enumerated");
        }
    }
    if (indeterminate) rep.warnings.push_back("indeterminate differentials: E_inf is not determined everywhere");

    if (m.top == 3 && m.groups[0] == FGAbelianGroup(1) && m.h_integer() && is_free(m.groups[1]) &&
        m.sq3.empty()) {
        const Int h = *m.h_integer();
        FGAbelianGroup want0 = h == 0 ? FGAbelianGroup(1) + m.groups[2] : m.groups[2];
        FGAbelianGroup want1 = m.groups[1] + FGAbelianGroup::cyclic(h);
        rep.closed_form = rep.k0.determined && rep.k1.determined && rep.k0.extension_resolved &&
                          rep.k1.extension_resolved && rep.k0.assembled == want0 && rep.k1.assembled == want1;
    }
    return rep;
}

ConvergenceReport run(const CohomologyModel& m) { return converge(m, apply_d3(m, init_pages(m))); }

nlohmann::json ConvergenceReport::to_json() const {
    nlohmann::json j;
    j["model"] = model;
    j["h"] = nlohmann::json::array();
    for (const auto& x : h) j["h"].push_back(x.str());
    auto column_list = [](const std::vector<FGAbelianGroup>& gs) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& g : gs) a.push_back(group_json(g));
        return a;
    };
    j["E3"] = column_list(e3);
    j["E5"] = column_list(e5);
    j["Einf"] = nlohmann::json::array();
    for (const auto& g : e_inf) j["Einf"].push_back(g ? group_json(*g) : nlohmann::json("indeterminate"));
    j["differentials"] = nlohmann::json::array();
    for (const auto& d : differentials)
        j["differentials"].push_back(
            {{"r", d.r}, {"from", d.from}, {"to", d.to}, {"status", d.status}, {"reason", d.reason}});
    j["K0"] = k_json(k0);
    j["K1"] = k_json(k1);
    j["candidates"] = nlohmann::json::array();
    for (const auto& c : candidates)
        j["candidates"].push_back({{"K1_piece", c.label}, {"K0", k_json(c.k0)}, {"K1", k_json(c.k1)}});
    j["constraints"] = nlohmann::json::array();
    for (const auto& c : constraints) j["constraints"].push_back(c.to_json());
    if (closed_form) j["closed_form_3d"] = *closed_form;
    j["warnings"] = warnings;
    j["graded_only"] = !(k0.extension_resolved && k1.extension_resolved);
    return j;
}

std::string ConvergenceReport::text() const {
    std::ostringstream os;
    os << "model " << model;
    if (!h.empty()) {
        os << "  h = (";
        for (std::size_t i = 0; i < h.size(); ++i) os << (i ? ", " : "") << h[i];
        os << ")";
    }
    os << "\n  p   E3            E5            Einf\n";
    for (std::size_t p = 0; p < e3.size(); ++p) {
        std::string a = e3[p].str(), b = e5[p].str(), c = e_inf[p] ? e_inf[p]->str() : "indeterminate";
        os << "  " << p << std::string(4 - std::to_string(p).size(), ' ') << a
           << std::string(a.size() < 14 ? 14 - a.size() : 1, ' ') << b
           << std::string(b.size() < 14 ? 14 - b.size() : 1, ' ') << c << "\n";
    }
    for (const auto& d : differentials)
        if (d.reason != "source or target vanishes")
            os << "  d" << d.r << ": E^" << d.from << " -> E^" << d.to << "  " << d.status << "  (" << d.reason << ")\n";
    os << "  K0 = " << k_text(k0) << "\n  K1 = " << k_text(k1) << "\n";
    for (const auto& c : candidates)
        os << "  candidate K1 = " << c.label << " = " << k_text(c.k1) << ", K0 = " << k_text(c.k0) << "\n";
    for (const auto& c : constraints)
        os << "  constraint d" << c.r << (c.from ? " from E^" + std::to_string(*c.from) : std::string()) << " "
           << (c.value == Constraint::Value::Zero ? "zero" : "kernel_contains") << ": " << c.justification << "\n";
    if (closed_form) os << "  closed form K0 = H^2, K1 = H^1 + Z/h: " << (*closed_form ? "holds" : "FAILS") << "\n";
    for (const auto& w : warnings) os << "  warning: " << w << "\n";
    return os.str();
}

nlohmann::json Target::to_json() const {
    nlohmann::json j = {{"p", p},
                        {"determined", determined},
                        {"group", group_json(group)},
                        {"codomain", codomain},
                        {"codomain_group", group_json(codomain_group)},
                        {"inclusion", matrix_json(inclusion)},
                        {"injective", injective},
                        {"factor", factor}};
    if (!note.empty()) j["note"] = note;
    return j;
}

namespace {

/* Is L n N' inside N for the subquotient L/N and the quotient Z^n/N'? */
bool injective_into(const Subquotient& e, const IntMatrix& target_rel) {
    const IntMatrix& l = e.basis();
    IntMatrix k = cech::integer_kernel(hcat(l, target_rel));
    for (std::size_t j = 0; j < k.cols(); ++j) {
        std::vector<Int> c(l.cols());
        for (std::size_t i = 0; i < l.cols(); ++i) c[i] = k(i, j);
        if (!cech::solve_in_lattice(e.relations(), l * c)) return false;
    }
    return true;
}

}  // namespace

std::vector<Target> factorization_targets(const CohomologyModel& m, const ConvergenceReport& rep) {
    std::vector<Target> out;
    struct Spec {
        int p;
        int below;
        const char* codomain;
        int factor;
        const char* note;
    };
    const Spec specs[] = {
        {1, -2, "H^1(M,Z)", 1, "mu_1 is the edge homomorphism onto E_inf^{1,0}"},
        {3, 0, "H^3(M,Z)/(h u H^0)", 1, "mu_3 = pi_3 on Ker mu_1"},
        {5, 2, "H^5(M,Z)/(h u H^2)", 2, "mu5_bar restricted to F^3 agrees with 2 pi5_bar over R"},
    };
    for (const auto& s : specs) {
        if (s.p > m.top) continue;
        Target t;
        t.p = s.p;
        t.codomain = s.codomain;
        t.factor = s.factor;
        t.note = s.note;
        const Subquotient& e = rep.e5_sub[s.p];
        t.determined = rep.e_inf[s.p].has_value();
        t.group = e.group();
        if (!t.determined) t.note += "; E_inf indeterminate, E_5 shown";
        IntMatrix rel = relations(m.groups[s.p]);
        if (s.below >= 0) rel = hcat(rel, m.cup_matrix(s.below));
        Subquotient q = Subquotient::quotient(rel);
        t.codomain_group = q.group();
        std::size_t rows = q.group().torsion.size() + static_cast<std::size_t>(q.group().rank);
        t.inclusion = IntMatrix(rows, e.generators().size());
        for (std::size_t j = 0; j < e.generators().size(); ++j) {
            auto c = q.coords(e.generators()[j]);
            for (std::size_t i = 0; i < rows; ++i) t.inclusion(i, j) = c.coords[i];
        }
        bool well_defined = true;
        for (std::size_t j = 0; j < e.relations().cols(); ++j)
            if (!q.coords(column(e.relations(), j)).is_zero()) well_defined = false;
        t.injective = well_defined && injective_into(e, rel);
        if (!well_defined) t.note += "; the induced map is not well defined";
        out.push_back(t);
    }
    return out;
}

}  // namespace cf::ahss
