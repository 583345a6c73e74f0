#include "cf/charclass/charclass.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cf::charclass {

SignedSeries distinct_odd_partitions(int n) {
    if (n < 0) throw std::invalid_argument("N must be >= 0");
    SignedSeries q(n + 1);
    q[0] = 1;
    for (int part = 1; part <= n; part += 2)
        for (int k = n; k >= part; --k) q[k] += q[k - part];
    return q;
}

SignedSeries kernel_series(int n) {
    SignedSeries q = distinct_odd_partitions(n), c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = q[k] - (k >= 2 ? q[k - 2] : Int(0));
    if (n >= 2) c[2] += 1;
    return c;
}

SignedSeries poincare_series(int n) {
    SignedSeries c = kernel_series(n);
    if (n >= 3) c[3] += 1;
    return c;
}

std::vector<Monomial> exterior_basis(int n) {
    std::vector<Monomial> out;
    if (n < 0) return out;
    Monomial cur;
    std::function<void(int, int)> rec = [&](int next, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int a = next; a <= left; a += 2) {
            cur.push_back(a);
            rec(a + 2, left - a);
            cur.pop_back();
        }
    };
    rec(1, n);
    for (const auto& m : out)
        for (int a : m)
            if (a > n) throw std::logic_error("generator above the truncation degree");
    return out;
}

cech::IntMatrix exterior_differential(int n) {
    const auto src = exterior_basis(n + 2), dst = exterior_basis(n);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], i);
    cech::IntMatrix d(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        const Monomial& m = src[j];
        /* d has degree -2, so the Koszul sign (-1)^{|d| |left|} is +1 */
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 1) continue;
            Monomial t = m;
            t[k] -= 2;
            if (k > 0 && t[k - 1] == t[k]) continue;
            d(index.at(t), j) += 1;
        }
    }
    return d;
}

std::vector<ExteriorRow> exterior_brute_force(int n) {
    if (n < 0) throw std::invalid_argument("N must be >= 0");
    std::vector<ExteriorRow> rows;
    for (int k = 0; k <= n; ++k) {
        ExteriorRow r;
        r.n = k;
        r.dim = static_cast<long>(exterior_basis(k).size());
        r.kernel = r.dim - static_cast<long>(cech::rank(exterior_differential(k - 2)));
        if (k + 2 <= n) r.coker = r.dim - static_cast<long>(cech::rank(exterior_differential(k)));
        if (k >= 2 && k + 2 <= n) r.dd_zero = (exterior_differential(k - 2) * exterior_differential(k)).is_zero();
        rows.push_back(r);
    }
    return rows;
}

std::vector<ClassRow> classification_table() {
    const SignedSeries c = poincare_series(3);
    std::vector<ClassRow> rows;
    const cech::FGAbelianGroup groups[] = {cech::FGAbelianGroup(1), cech::FGAbelianGroup(1), cech::FGAbelianGroup(),
                                           cech::FGAbelianGroup(1)};
    for (int p = 0; p <= 3; ++p) {
        ClassRow r;
        r.p = p;
        r.group = groups[p];
        r.real_dim = c[p];
        r.consistent = Int(r.group.rank) == r.real_dim;
        rows.push_back(r);
    }
    return rows;
}

namespace {
nlohmann::json num(const Int& x) { return static_cast<long long>(x); }
}  // namespace

nlohmann::json series_report(int n, bool brute_force) {
    nlohmann::json j;
    j["N"] = n;
    const SignedSeries p = poincare_series(n), k = kernel_series(n);
    j["poincare"] = nlohmann::json::array();
    for (const auto& x : p) j["poincare"].push_back(num(x));
    j["kernel_series"] = nlohmann::json::array();
    for (const auto& x : k) j["kernel_series"].push_back(num(x));
    if (brute_force) {
        j["rows"] = nlohmann::json::array();
        bool all = true;
        for (const auto& r : exterior_brute_force(n)) {
            bool match = Int(r.kernel) == k[r.n];
            bool surj = r.n == 0 || r.coker <= 0;
            all = all && match && surj;
            nlohmann::json row = {{"n", r.n}, {"dim", r.dim}, {"kernel", r.kernel}, {"series", num(k[r.n])},
                                  {"match", match}, {"dd_zero", r.dd_zero}};
            row["coker"] = r.coker < 0 ? nlohmann::json(nullptr) : nlohmann::json(r.coker);
            j["rows"].push_back(row);
        }
        j["agree"] = all;
    }
    j["classification"] = nlohmann::json::array();
    for (const auto& r : classification_table())
        j["classification"].push_back(
            {{"p", r.p}, {"group", r.group.str()}, {"real_dim", num(r.real_dim)}, {"consistent", r.consistent}});
    if (n >= 8) j["degree8"] = "c_8 = 1: one real class in degree 8, representative not constructed";
    return j;
}

std::string series_text(int n, bool brute_force) {
    std::ostringstream os;
    const SignedSeries p = poincare_series(n), k = kernel_series(n);
    os << "P(t) through t^" << n << ": [";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "]\n";
    if (brute_force) {
        os << "   n  dim  ker  series  coker  d^2\n";
        for (const auto& r : exterior_brute_force(n)) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%4d %4ld %4ld %7s %6s  %s%s\n", r.n, r.dim, r.kernel, k[r.n].str().c_str(),
                          r.coker < 0 ? "-" : std::to_string(r.coker).c_str(), r.dd_zero ? "0" : "nonzero",
                          Int(r.kernel) == k[r.n] ? "" : "  MISMATCH");
            os << buf;
        }
    }
    os << "H^p(Y,Z):";
    for (const auto& r : classification_table()) os << " " << r.group.str() << (r.consistent ? "" : "(!)");
    os << "\n";
    return os.str();
}

}  // namespace cf::charclass
