#include <stdexcept>

#include "cf/ahss/ahss.hpp"
#include "cf/cech/cohomology.hpp"

namespace cf::ahss {

using cech::column;
using cech::hcat;

namespace {

Int int_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("expected an integer, got " + v.dump());
}

nlohmann::json int_json(const Int& x) {
    if (x >= -(Int(1) << 53) && x <= (Int(1) << 53)) return static_cast<long long>(x);
    return x.str();
}

bool in_relations(const FGAbelianGroup& g, const std::vector<Int>& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i < g.torsion.size() ? x[i] % g.torsion[i] != 0 : x[i] != 0) return false;
    }
    return true;
}

std::map<int, IntMatrix> matrices_from_json(const nlohmann::json& j, const CohomologyModel& m, const char* what) {
    std::map<int, IntMatrix> r;
    if (j.is_null()) return r;
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + " must map degrees to matrices");
    for (const auto& [key, v] : j.items()) {
        int p = std::stoi(key);
        if (p < 0 || p + 3 > m.top) throw std::invalid_argument(std::string(what) + ": degree " + key + " out of range");
        r.emplace(p, matrix_from_json(v, m.coords(p + 3), m.coords(p)));
    }
    return r;
}

}  // namespace

nlohmann::json group_json(const FGAbelianGroup& g) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& x : g.torsion) t.push_back(int_json(x));
    nlohmann::json j = {{"rank", g.rank}, {"torsion", t}, {"text", g.str()}};
    if (g.torus) j["torus"] = g.torus;
    return j;
}

FGAbelianGroup group_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("group must be an object {\"rank\", \"torsion\"}");
    std::vector<Int> t;
    if (j.contains("torsion"))
        for (const auto& x : j.at("torsion")) t.push_back(int_from_json(x));
    FGAbelianGroup g(j.value("rank", 0), t, j.value("torus", 0));
    if (g.torsion != t) throw std::invalid_argument("torsion must be a divisibility chain of integers > 1");
    return g;
}

nlohmann::json matrix_json(const IntMatrix& a) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(int_json(a(i, c)));
        j.push_back(row);
    }
    return j;
}

IntMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
    IntMatrix a(rows, cols);
    if (!j.is_array() || j.size() != rows) throw std::invalid_argument("matrix has the wrong number of rows");
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix has the wrong number of columns");
        for (std::size_t c = 0; c < cols; ++c) a(i, c) = int_from_json(j[i][c]);
    }
    return a;
}

nlohmann::json Constraint::to_json() const {
    nlohmann::json j = {{"differential", "d" + std::to_string(r)},
                        {"value", value == Value::Zero ? "zero" : "kernel_contains"},
                        {"justification", justification}};
    if (from) j["from"] = *from;
    if (!element.empty()) {
        j["element"] = nlohmann::json::array();
        for (const auto& x : element) j["element"].push_back(int_json(x));
    }
    if (!when.empty()) j["when"] = when;
    return j;
}

Constraint Constraint::from_json(const nlohmann::json& j) {
    Constraint c;
    std::string d = j.at("differential").get<std::string>();
    if (d.size() < 2 || d[0] != 'd') throw std::invalid_argument("bad differential '" + d + "'");
    c.r = std::stoi(d.substr(1));
    if (c.r < 5 || c.r % 2 == 0) throw std::invalid_argument("constraints apply to d5, d7, d9");
    std::string v = j.value("value", std::string("zero"));
    if (v == "zero") c.value = Value::Zero;
    else if (v == "kernel_contains") c.value = Value::KernelContains;
    else throw std::invalid_argument("bad constraint value '" + v + "'");
    if (j.contains("from")) c.from = j.at("from").get<int>();
    if (j.contains("element"))
        for (const auto& x : j.at("element")) c.element.push_back(int_from_json(x));
    c.when = j.value("when", std::string());
    if (!c.when.empty() && c.when != "h_odd" && c.when != "h_even")
        throw std::invalid_argument("constraint 'when' must be h_odd or h_even");
    c.justification = j.value("justification", std::string());
    if (c.justification.empty()) throw std::invalid_argument("every constraint needs a justification");
    if (c.value == Value::KernelContains && !c.from) throw std::invalid_argument("kernel_contains needs 'from'");
    return c;
}

std::size_t CohomologyModel::coords(int p) const {
    if (p < 0 || p > top) return 0;
    return groups[p].torsion.size() + static_cast<std::size_t>(groups[p].rank);
}

const FGAbelianGroup& CohomologyModel::group(int p) const {
    static const FGAbelianGroup zero;
    return p < 0 || p > top ? zero : groups[p];
}

IntMatrix CohomologyModel::cup_matrix(int p) const {
    auto it = cup_h.find(p);
    return it != cup_h.end() ? it->second : IntMatrix(coords(p + 3), coords(p));
}

IntMatrix CohomologyModel::sq3_matrix(int p) const {
    auto it = sq3.find(p);
    return it != sq3.end() ? it->second : IntMatrix(coords(p + 3), coords(p));
}

IntMatrix CohomologyModel::d3(int p) const {
    IntMatrix a = sq3_matrix(p), b = cup_matrix(p);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
    return a;
}

std::optional<Int> CohomologyModel::h_integer() const {
    if (top < 3 || !(groups[3] == FGAbelianGroup(1)) || h.size() != 1) return std::nullopt;
    return h[0];
}

bool CohomologyModel::constraint_applies(const Constraint& c) const {
    if (c.when.empty()) return true;
    auto k = h_integer();
    if (!k) return false;
    bool odd = (*k % 2) != 0;
    return c.when == "h_odd" ? odd : !odd;
}

void CohomologyModel::validate() const {
    if (top < 0 || top > 9) throw std::invalid_argument("top degree must lie in 0..9");
    if (groups.size() != static_cast<std::size_t>(top) + 1) throw std::invalid_argument("one group per degree 0..top");
    for (const auto& g : groups) {
        if (g.torus) throw std::invalid_argument("model groups are finitely generated");
        if (!(FGAbelianGroup(g.rank, g.torsion) == g)) throw std::invalid_argument("group not in canonical form");
    }
    if (top >= 3) {
        if (h.size() != coords(3)) throw std::invalid_argument("h must have one coordinate per generator of H^3");
    } else {
        for (const auto& x : h)
            if (x != 0) throw std::invalid_argument("h must vanish when there is no H^3");
    }
    auto check_map = [&](const std::map<int, IntMatrix>& ms, const char* what) {
        for (const auto& [p, a] : ms) {
            if (p < 0 || p + 3 > top) throw std::invalid_argument(std::string(what) + ": degree out of range");
            if (a.rows() != coords(p + 3) || a.cols() != coords(p))
                throw std::invalid_argument(std::string(what) + ": matrix shape mismatch in degree " + std::to_string(p));
            for (std::size_t i = 0; i < groups[p].torsion.size(); ++i) {
                std::vector<Int> img = column(a, i);
                for (auto& x : img) x *= groups[p].torsion[i];
                if (!in_relations(groups[p + 3], img))
                    throw std::invalid_argument(std::string(what) + ": not a homomorphism on the torsion of H^" +
                                                std::to_string(p));
            }
        }
    };
    check_map(cup_h, "cup_h");
    check_map(sq3, "sq3");
    for (int p = 0; p < 3; ++p)
        if (!sq3_matrix(p).is_zero()) throw std::invalid_argument("Sq3 vanishes below degree 3");
    if (top >= 3 && groups[0] == FGAbelianGroup(1)) {
        std::vector<Int> c = column(cup_matrix(0), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= h[i];
        if (!in_relations(groups[3], c)) throw std::invalid_argument("cup_h on the unit of H^0 differs from h");
    }
    for (int p = 0; p + 6 <= top; ++p) {
        IntMatrix dd = d3(p + 3) * d3(p);
        for (std::size_t j = 0; j < dd.cols(); ++j)
            if (!in_relations(groups[p + 6], column(dd, j)))
                throw std::invalid_argument("d3 o d3 != 0 from degree " + std::to_string(p));
    }
    for (const auto& c : constraints) {
        if (c.from && (*c.from < 0 || *c.from + c.r > top))
            throw std::invalid_argument("constraint on a differential outside the model");
        if (c.value == Constraint::Value::KernelContains && c.element.size() != coords(*c.from))
            throw std::invalid_argument("constraint element has the wrong number of coordinates");
    }
}

CohomologyModel CohomologyModel::with_h(const Int& k) const {
    auto cur = h_integer();
    if (!cur) throw std::invalid_argument("--h needs a model with H^3 = Z");
    CohomologyModel m = *this;
    m.h = {k};
    if (*cur == k) return m;
    for (auto& [p, a] : m.cup_h) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (a(i, j) == 0) continue;
                if (*cur == 0 || (a(i, j) * k) % *cur != 0)
                    throw std::invalid_argument("cannot rescale the cup-by-h maps of this model to h = " + k.str());
                a(i, j) = a(i, j) * k / *cur;
            }
    }
    if (cur == 0 && m.top >= 3 && m.groups[0] == FGAbelianGroup(1)) {
        IntMatrix a = m.cup_matrix(0);
        a(a.rows() - 1, 0) = k;
        m.cup_h[0] = a;
    }
    m.validate();
    return m;
}

nlohmann::json CohomologyModel::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["top"] = top;
    j["groups"] = nlohmann::json::array();
    for (const auto& g : groups) j["groups"].push_back({{"rank", g.rank}, {"torsion", group_json(g)["torsion"]}});
    j["h"] = nlohmann::json::array();
    for (const auto& x : h) j["h"].push_back(int_json(x));
    j["cup_h"] = nlohmann::json::object();
    for (const auto& [p, a] : cup_h) j["cup_h"][std::to_string(p)] = matrix_json(a);
    j["sq3"] = nlohmann::json::object();
    for (const auto& [p, a] : sq3) j["sq3"][std::to_string(p)] = matrix_json(a);
    j["constraints"] = nlohmann::json::array();
    for (const auto& c : constraints) j["constraints"].push_back(c.to_json());
    return j;
}

CohomologyModel CohomologyModel::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("model file must be a JSON object");
    CohomologyModel m;
    m.name = j.value("name", std::string("model"));
    const nlohmann::json& gs = j.contains("groups") ? j.at("groups") : j.at("degrees");
    if (gs.is_array()) {
        for (const auto& g : gs) m.groups.push_back(group_from_json(g));
    } else if (gs.is_object()) {
        int top = -1;
        for (const auto& [key, v] : gs.items()) top = std::max(top, std::stoi(key));
        m.groups.resize(top + 1);
        for (const auto& [key, v] : gs.items()) m.groups[std::stoi(key)] = group_from_json(v);
    } else {
        throw std::invalid_argument("\"groups\" must be an array or an object");
    }
    m.top = j.contains("top") ? j.at("top").get<int>() : static_cast<int>(m.groups.size()) - 1;
    if (m.top + 1 > static_cast<int>(m.groups.size())) m.groups.resize(m.top + 1);
    if (m.top + 1 < static_cast<int>(m.groups.size())) throw std::invalid_argument("groups above the top degree");
    if (j.contains("h"))
        for (const auto& x : j.at("h")) m.h.push_back(int_from_json(x));
    else if (m.top >= 3)
        m.h.assign(m.coords(3), 0);
    m.cup_h = matrices_from_json(j.value("cup_h", nlohmann::json()), m, "cup_h");
    m.sq3 = matrices_from_json(j.value("sq3", nlohmann::json()), m, "sq3");
    if (j.contains("constraints"))
        for (const auto& c : j.at("constraints")) m.constraints.push_back(Constraint::from_json(c));
    if (!m.cup_h.count(0) && m.top >= 3 && m.groups[0] == FGAbelianGroup(1)) {
        IntMatrix a(m.coords(3), 1);
        for (std::size_t i = 0; i < m.h.size(); ++i) a(i, 0) = m.h[i];
        m.cup_h[0] = a;
    }
    m.validate();
    return m;
}

CohomologyModel model_from_complex(const cech::ComplexPtr& k, const std::vector<Int>& h) {
    CohomologyModel m;
    m.name = k->name();
    m.top = k->dim();
    std::vector<cech::IntegralCohomology> hc;
    std::vector<std::vector<cech::Cochain>> gens(m.top + 1);
    for (int p = 0; p <= m.top; ++p) {
        hc.push_back(cech::integral_cohomology(k, p));
        m.groups.push_back(hc.back().group());
        for (const auto& g : hc.back().generators()) gens[p].push_back(cech::from_int_vector(k, p, g));
    }
    if (m.groups[0] == FGAbelianGroup(1)) {
        /* the unit class as the generator of H^0 */
        cech::Cochain one(k, 0);
        for (std::size_t i = 0; i < one.size(); ++i) one.set(i, 1);
        gens[0] = {one};
    }
    if (m.top < 3) {
        for (const auto& x : h)
            if (x != 0) throw std::invalid_argument("h must vanish when there is no H^3");
    } else {
        if (h.size() != m.coords(3)) throw std::invalid_argument("h must have one coordinate per generator of H^3");
        m.h = h;
        cech::Cochain zh = cech::from_int_vector(k, 3, hc[3].representative({h}));
        for (int p = 0; p + 3 <= m.top; ++p) {
            IntMatrix a(m.coords(p + 3), m.coords(p)), s(m.coords(p + 3), m.coords(p));
            for (std::size_t j = 0; j < gens[p].size(); ++j) {
                auto c = hc[p + 3].class_of(cech::to_int_vector(cech::cup(zh, gens[p][j])));
                for (std::size_t i = 0; i < c.coords.size(); ++i) a(i, j) = c.coords[i];
                if (p >= 3) {
                    auto q = hc[p + 3].class_of(cech::to_int_vector(cech::integral_sq3(gens[p][j])));
                    for (std::size_t i = 0; i < q.coords.size(); ++i) s(i, j) = q.coords[i];
                }
            }
            if (!a.is_zero()) m.cup_h[p] = a;
            if (!s.is_zero()) m.sq3[p] = s;
        }
    }
    m.validate();
    return m;
}

namespace {

CohomologyModel lens(const Int& p, const Int& k) {
    if (p < 2) throw std::invalid_argument("lens model needs p >= 2");
    CohomologyModel m;
    m.name = "L(" + p.str() + ")";
    m.top = 3;
    m.groups = {FGAbelianGroup(1), FGAbelianGroup(), FGAbelianGroup(0, {p}), FGAbelianGroup(1)};
    m.h = {k};
    IntMatrix a(1, 1);
    a(0, 0) = k;
    m.cup_h[0] = a;
    return m;
}

CohomologyModel su3(const Int& k, bool even) {
    CohomologyModel m;
    m.name = even ? "SU(3)-even" : "SU(3)";
    m.top = 8;
    m.groups.assign(9, FGAbelianGroup());
    for (int p : {0, 3, 5, 8}) m.groups[p] = FGAbelianGroup(1);
    m.h = {k};
    IntMatrix a(1, 1);
    a(0, 0) = k;
    m.cup_h[0] = a;
    m.cup_h[5] = a; /* x3 x5 generates H^8 */
    Constraint c;
    c.r = 5;
    c.from = 3;
    if (!even) {
        c.when = "h_odd";
        c.justification =
            "mu_3 is injective on K^1_P(SU(3)) = Ker d5 and surjective onto Z/h, since the push-forward of the "
            "trivial bundle on the symmetric submanifold W has mu_3 = 1 mod h for odd h; hence d5 = 0";
    } else {
        c.when = "h_even";
        c.value = Constraint::Value::KernelContains;
        c.element = {2};
        c.justification =
            "the push-forward of 2 in K^0_Q(W) = 2Z has mu_3 = 2 mod h for even h, so Ker d5 contains 2Z/h; "
            "the argument does not decide d5 on the generator";
    }
    m.constraints.push_back(c);
    return m;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"S1", "S3", "SU3", "SU3-even", "T3", "lens:<p>"}; }

CohomologyModel fixture(const std::string& name, std::optional<Int> h) {
    CohomologyModel m;
    Int k = h.value_or(1);
    if (name == "S1") {
        if (h && *h != 0) throw std::invalid_argument("S1 carries no twist");
        return model_from_complex(cech::circle(), {});
    }
    if (name == "S3") return model_from_complex(cech::sphere3(), {k});
    if (name == "T3") return model_from_complex(cech::torus3(), {k});
    if (name == "SU3") m = su3(k, false);
    else if (name == "SU3-even") m = su3(h.value_or(2), true);
    else if (name.rfind("lens:", 0) == 0) {
        std::string d = name.substr(5);
        if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("lens model is lens:<p>");
        m = lens(Int(d), k);
    } else {
        throw std::invalid_argument("unknown model '" + name + "'");
    }
    m.validate();
    return m;
}

}  // namespace cf::ahss
