#include "cf/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cf/ahss/ahss.hpp"
#include "cf/catalog/catalog.hpp"
#include "cf/cech/cohomology.hpp"
#include "cf/cech/complex.hpp"
#include "cf/cech/quotient.hpp"
#include "cf/charclass/charclass.hpp"

namespace cf::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> ids;
    bool all = false;
    std::string input, model;
    std::string ring = "Z";
    std::optional<int> degree;
    std::optional<int> weight;
    std::string h;
    std::optional<long long> budget;
    bool as_json = false;
    bool timing = false;
    bool brute_force = false, no_brute_force = false;
    unsigned jobs = 0;
    std::uint64_t seed = 0;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t resolve_budget(const Options& o) {
    long long b = 0;
    if (o.budget) {
        b = *o.budget;
    } else if (const char* env = std::getenv("COCHAINFORGE_BUDGET"); env && *env) {
        char* end = nullptr;
        b = std::strtoll(env, &end, 10);
        if (*end) throw UsageError("COCHAINFORGE_BUDGET must be a positive integer");
    } else {
        return 0; /* per-entry default */
    }
    if (b <= 0) throw UsageError("budget must be positive");
    return static_cast<std::uint64_t>(b);
}

/* ---- verify ---- */

json report_json(const cat::VerificationReport& r, bool timing) {
    json j = {{"id", r.id},         {"location", r.location}, {"quote", r.quote}, {"status", cat::status_name(r.status)},
              {"steps", r.steps},   {"lint", r.lint},         {"fired", r.fired}, {"note", r.note}};
    j["checks"] = json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back(
            {{"label", c.label}, {"status", cat::status_name(c.status)}, {"steps", c.steps}, {"residue", c.residue}});
    if (timing) j["millis"] = r.millis;
    return j;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.all == !o.ids.empty()) throw UsageError("verify needs either --id or --all");
    const std::uint64_t budget = resolve_budget(o);
    std::vector<const cat::Entry*> entries;
    if (o.all) {
        for (const auto& e : cat::manifest()) entries.push_back(&e);
    } else {
        for (const auto& id : o.ids) {
            const cat::Entry* e = cat::find_entry(id);
            if (!e) throw UsageError("unknown identity id '" + id + "'");
            if (std::find(entries.begin(), entries.end(), e) == entries.end()) entries.push_back(e);
        }
    }
    std::sort(entries.begin(), entries.end(), [](auto* a, auto* b) { return a->id < b->id; });
    unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    auto t0 = std::chrono::steady_clock::now();
    auto reports = cat::verify_many(entries, budget, jobs);
    const double total = ms_since(t0);

    std::size_t nv = 0, nf = 0, nb = 0;
    for (const auto& r : reports) {
        if (r.status == cat::Status::Verified) ++nv;
        else if (r.status == cat::Status::Failed) ++nf;
        else ++nb;
    }
    if (o.as_json) {
        json j = {{"command", "verify"}, {"seed", o.seed}};
        j["budget"] = budget ? json(budget) : json(nullptr);
        j["summary"] = {{"total", reports.size()}, {"verified", nv}, {"failed", nf}, {"budget_exceeded", nb}};
        j["reports"] = json::array();
        for (const auto& r : reports) j["reports"].push_back(report_json(r, o.timing));
        if (o.timing) j["millis"] = total;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << r.id << "  " << cat::status_name(r.status) << "  steps=" << r.steps;
            if (o.timing) out << "  ms=" << static_cast<long long>(r.millis);
            out << "  [" << r.location << "]\n";
            if (r.status != cat::Status::Verified) {
                if (!r.note.empty()) out << "    note: " << r.note << "\n";
                out << "    quote: " << r.quote << "\n";
                for (const auto& c : r.checks)
                    if (c.status != cat::Status::Verified)
                        out << "    " << c.label << ": " << cat::status_name(c.status) << " " << c.residue << "\n";
            }
        }
        out << reports.size() << " identities: " << nv << " verified, " << nf << " failed, " << nb
            << " budget-exceeded (seed " << o.seed << ")\n";
    }
    if (nb) {
        err << "budget exceeded\n";
        return Budget;
    }
    return nf ? VerificationFailed : Ok;
}

/* ---- cohomology ---- */

cech::ComplexPtr load_complex(const Options& o) {
    if (!o.input.empty() && !o.ids.empty()) throw UsageError("give either --id or --input, not both");
    if (!o.input.empty()) {
        try {
            return std::make_shared<const cech::SimplicialComplex>(cech::SimplicialComplex::from_json(read_json(o.input)));
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            throw UsageError("malformed complex file '" + o.input + "': " + e.what());
        }
    }
    if (o.ids.size() != 1) throw UsageError("give one complex with --id or --input");
    try {
        return cech::fixture(o.ids.front());
    } catch (const std::invalid_argument&) {
        std::string names;
        for (const auto& n : cech::fixture_names()) names += " " + n;
        throw UsageError("unknown complex id '" + o.ids.front() + "' (known:" + names + ")");
    }
}

int cmd_cohomology(const Options& o, std::ostream& out) {
    auto k = load_complex(o);
    cech::Ring ring;
    try {
        ring = cech::Ring::parse(o.ring);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::vector<int> degrees;
    if (o.degree) {
        if (*o.degree < 0) throw UsageError("degree must be >= 0");
        degrees.push_back(*o.degree);
    } else {
        for (int p = 0; p <= k->dim(); ++p) degrees.push_back(p);
    }
    auto t0 = std::chrono::steady_clock::now();
    std::vector<cech::CohomologyGroup> gs;
    for (int p : degrees) gs.push_back(cech::cohomology(k, p, ring));
    if (o.as_json) {
        json j = {{"command", "cohomology"}, {"complex", k->name()}, {"ring", ring.str()}, {"seed", o.seed},
                  {"euler_characteristic", k->euler_characteristic()}};
        j["groups"] = json::array();
        for (const auto& g : gs)
            j["groups"].push_back({{"degree", g.degree}, {"group", ahss::group_json(g.group)}, {"text", g.str()}});
        if (o.timing) j["millis"] = ms_since(t0);
        out << j.dump(2) << "\n";
    } else {
        out << k->name() << " (" << k->vertices() << " vertices, dim " << k->dim() << "), coefficients " << ring.str()
            << "\n";
        for (const auto& g : gs) out << "  H^" << g.degree << " = " << g.str() << "\n";
        if (o.timing) out << "  ms=" << static_cast<long long>(ms_since(t0)) << "\n";
    }
    return Ok;
}

/* ---- ahss ---- */

std::optional<cech::Int> parse_h(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::string d = s[0] == '-' ? s.substr(1) : s;
    if (d.empty() || !std::all_of(d.begin(), d.end(), ::isdigit)) throw UsageError("--h must be an integer");
    return cech::Int(s);
}

ahss::CohomologyModel load_model(const Options& o, const std::string& path) {
    const auto h = parse_h(o.h);
    try {
        if (!path.empty()) {
            auto m = ahss::CohomologyModel::from_json(read_json(path));
            if (h) m = m.with_h(*h);
            m.validate();
            return m;
        }
        if (o.ids.size() != 1) throw UsageError("give one model with --id, --input or --model");
        return ahss::fixture(o.ids.front(), h);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad model: ") + e.what());
    }
}

std::string model_path(const Options& o) {
    if (!o.input.empty() && !o.model.empty()) throw UsageError("--input and --model are aliases; give one");
    std::string path = o.input.empty() ? o.model : o.input;
    if (!path.empty() && !o.ids.empty()) throw UsageError("give either --id or a model file, not both");
    return path;
}

int cmd_ahss(const Options& o, std::ostream& out, std::ostream& err) {
    auto m = load_model(o, model_path(o));
    auto t0 = std::chrono::steady_clock::now();
    auto rep = ahss::run(m);
    auto targets = ahss::factorization_targets(m, rep);
    if (o.as_json) {
        json j = {{"command", "ahss"}, {"seed", o.seed}, {"report", rep.to_json()}};
        j["targets"] = json::array();
        for (const auto& t : targets) j["targets"].push_back(t.to_json());
        if (o.timing) j["millis"] = ms_since(t0);
        out << j.dump(2) << "\n";
    } else {
        out << rep.text();
        for (const auto& t : targets) {
            out << "  E_inf^{" << t.p << ",0} = " << (t.determined ? t.group.str() : std::string("indeterminate"))
                << " -> " << t.codomain << " = " << t.codomain_group.str();
            if (t.determined) out << (t.injective ? "  (injective)" : "  (not injective)");
            if (t.factor != 1) out << "  factor " << t.factor;
            out << "\n";
        }
        if (o.timing) out << "  ms=" << static_cast<long long>(ms_since(t0)) << "\n";
    }
    if (!rep.warnings.empty()) err << "warning: " << rep.warnings.front() << "\n";
    return Ok;
}

/* ---- deligne ---- */

int cmd_deligne(const Options& o, std::ostream& out) {
    if (!o.weight) throw UsageError("deligne needs --n (the weight n of Z(n)_D)");
    if (*o.weight <= 0) throw UsageError("--n must be positive");
    std::vector<cech::FGAbelianGroup> H;
    std::string name;
    const auto complexes = cech::fixture_names();
    const bool model_id =
        !o.ids.empty() && std::find(complexes.begin(), complexes.end(), o.ids.front()) == complexes.end();
    if (!o.model.empty() || (o.input.empty() && model_id)) {
        if (!o.input.empty()) throw UsageError("give either --input or --model, not both");
        auto m = load_model(o, o.model);
        H = m.groups;
        name = m.name;
    } else {
        auto k = load_complex(o);
        for (const auto& g : cech::cohomology_all(k)) H.push_back(g.group);
        name = k->name();
    }
    std::vector<int> degrees;
    if (o.degree) {
        if (*o.degree < 0) throw UsageError("degree must be >= 0");
        degrees.push_back(*o.degree);
    } else {
        for (int p = 0; p <= static_cast<int>(H.size()); ++p) degrees.push_back(p);
    }
    const int n = *o.weight;
    if (o.as_json) {
        json j = {{"command", "deligne"}, {"space", name}, {"n", n}, {"seed", o.seed}};
        j["groups"] = json::array();
        for (int p : degrees) {
            auto d = cech::deligne_groups(H, n, p);
            json g = {{"degree", p}, {"extension", d.extension}, {"text", d.str()}};
            if (d.extension) {
                g["rz_part"] = ahss::group_json(d.rz_part);
                g["integral"] = ahss::group_json(d.integral);
                g["sequences"] = d.sequences;
            } else {
                g["group"] = ahss::group_json(d.group);
            }
            j["groups"].push_back(g);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "Deligne cohomology H^p(" << name << ", Z(" << n << ")_D)\n";
        for (int p : degrees) out << "  p=" << p << ": " << cech::deligne_groups(H, n, p).str() << "\n";
    }
    return Ok;
}

/* ---- series ---- */

int cmd_series(const Options& o, std::ostream& out) {
    const int n = o.degree.value_or(17);
    if (n < 0) throw UsageError("N must be >= 0");
    if (o.brute_force && o.no_brute_force) throw UsageError("--brute-force and --no-brute-force conflict");
    const bool brute = o.brute_force || (!o.no_brute_force && n <= 24);
    auto t0 = std::chrono::steady_clock::now();
    json j = charclass::series_report(n, brute);
    if (o.as_json) {
        j["command"] = "series";
        j["seed"] = o.seed;
        if (o.timing) j["millis"] = ms_since(t0);
        out << j.dump(2) << "\n";
    } else {
        out << charclass::series_text(n, brute);
        if (o.timing) out << "  ms=" << static_cast<long long>(ms_since(t0)) << "\n";
    }
    return brute && !j["agree"].get<bool>() ? VerificationFailed : Ok;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_flag("--json", o.as_json, "Machine-readable JSON output");
    sub->add_flag("--timing", o.timing, "Include wall time in reports");
    sub->add_option("--seed", o.seed, "Seed recorded in every report");
    sub->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
    sub->add_option("--budget", o.budget, "Rewrite step budget (overrides COCHAINFORGE_BUDGET)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cochain, AHSS and series computations for twisted K-theory invariants", "cochainforge"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "Verify identities of the symbolic catalog");
    add_common(verify, o);
    verify->add_option("--id", o.ids, "Identity id (repeatable)");
    verify->add_flag("--all", o.all, "Verify every catalog entry");

    auto* coh = app.add_subcommand("cohomology", "Cohomology groups of a simplicial complex");
    add_common(coh, o);
    coh->add_option("--id", o.ids, "Built-in complex (S1, S3, RP2, T3, I)");
    coh->add_option("--input", o.input, "Complex JSON file");
    coh->add_option("--ring", o.ring, "Coefficients: Z, Q or Zmod:n");
    coh->add_option("--degree", o.degree, "Single degree (default: all)");

    auto* ah = app.add_subcommand("ahss", "Twisted K-groups via the Atiyah-Hirzebruch spectral sequence");
    add_common(ah, o);
    ah->add_option("--id", o.ids, "Built-in model (S1, S3, T3, lens:<p>, SU3, SU3-even)");
    ah->add_option("--input", o.input, "Model JSON file");
    ah->add_option("--model", o.model, "Alias of --input");
    ah->set_help_flag("--help", "Print this help message and exit");
    ah->add_option("--h", o.h, "Twist: multiple of the H^3 generator");

    auto* del = app.add_subcommand("deligne", "Deligne cohomology groups H^p(M, Z(n)_D)");
    add_common(del, o);
    del->add_option("--id", o.ids, "Built-in complex or model");
    del->add_option("--input", o.input, "Complex JSON file");
    del->add_option("--model", o.model, "Model JSON file");
    del->add_option("--n", o.weight, "Weight n");
    del->add_option("--degree", o.degree, "Single degree p (default: all)");

    auto* ser = app.add_subcommand("series", "Poincare series and exterior-algebra brute force");
    add_common(ser, o);
    ser->add_option("--degree", o.degree, "Truncation degree N (default 17)");
    ser->add_flag("--brute-force", o.brute_force, "Run the brute force (default for N <= 24)");
    ser->add_flag("--no-brute-force", o.no_brute_force, "Series only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? Ok : Usage;
    }

    try {
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (coh->parsed()) return cmd_cohomology(o, out);
        if (ah->parsed()) return cmd_ahss(o, out, err);
        if (del->parsed()) return cmd_deligne(o, out);
        if (ser->parsed()) return cmd_series(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}

}  // namespace cf::cli
