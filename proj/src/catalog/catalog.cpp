#include "cf/catalog/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace cf::cat {

void Task::cochains(const std::string& label, const SymCochain& a, const SymCochain& b) {
    for (auto& [slot, e] : difference_components(a, b)) checks.push_back({label + "[" + std::to_string(slot) + "]", e});
}

std::string status_name(Status s) {
    switch (s) {
    case Status::Verified: return "verified";
    case Status::Failed: return "failed";
    case Status::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

const std::vector<Entry>& manifest() {
    static const std::vector<Entry> all = [] {
        Registry r;
        register_local_entries(r);
        register_cocycle_entries(r);
        register_change_entries(r);
        std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
        for (std::size_t i = 1; i < r.size(); ++i)
            if (r[i].id == r[i - 1].id) throw std::logic_error("duplicate catalog id " + r[i].id);
        return r;
    }();
    return all;
}

const Entry* find_entry(const std::string& id) {
    for (const auto& e : manifest())
        if (e.id == id) return &e;
    return nullptr;
}

namespace {

std::string clip(const std::string& s, std::size_t n = 2000) { return s.size() <= n ? s : s.substr(0, n) + " ..."; }

}  // namespace

namespace {

void run_checks(const Task& task, std::uint64_t budget, VerificationReport& rep) {
    std::vector<std::string> bad;
    try {
        bad = task.ctx->check_cone_hypotheses(budget);
    } catch (const BudgetExceeded& ex) {
        rep.status = Status::BudgetExceeded;
        rep.note = "budget exceeded while checking coboundary hypotheses";
        return;
    }
    if (!bad.empty()) {
        rep.status = Status::Failed;
        rep.note = "inconsistent coboundary hypothesis for";
        for (const auto& b : bad) rep.note += " " + b;
    }

    std::set<std::string> fired;
    std::size_t lint_flags = 0, lint_atoms = 0;
    for (const auto& c : task.checks) {
        CheckReport cr;
        cr.label = c.label;
        LintReport lr = trace_class_lint(c.expr, *task.ctx);
        lint_flags += lr.flags.size();
        lint_atoms += lr.atoms_checked;
        NormalizeStats st;
        try {
            Expr r = normalize(c.expr, *task.ctx, budget, &st);
            cr.steps = st.steps;
            if (!r.is_zero()) {
                cr.status = Status::Failed;
                cr.residue = clip(r.str());
            }
        } catch (const BudgetExceeded& ex) {
            cr.status = Status::BudgetExceeded;
            cr.steps = ex.steps();
            cr.residue = ex.what();
        }
        for (const auto& [fam, n] : st.fired) fired.insert(fam);
        rep.steps += cr.steps;
        if (cr.status == Status::BudgetExceeded) rep.status = Status::BudgetExceeded;
        else if (cr.status == Status::Failed && rep.status == Status::Verified) rep.status = Status::Failed;
        rep.checks.push_back(std::move(cr));
    }
    rep.fired.assign(fired.begin(), fired.end());
    if (!task.allowed_families.empty()) {
        for (const auto& f : fired)
            if (!task.allowed_families.count(f)) {
                if (rep.status == Status::Verified) rep.status = Status::Failed;
                rep.note += (rep.note.empty() ? "" : "; ") + std::string("rule outside the allowed families fired: ") + f;
            }
    }
    rep.lint = std::to_string(lint_atoms) + " trace atoms, " + std::to_string(lint_flags) + " formal";
}

}  // namespace

VerificationReport verify(const Entry& entry, std::uint64_t budget) {
    if (budget == 0) budget = entry.budget;
    VerificationReport rep;
    rep.id = entry.id;
    rep.location = entry.location;
    rep.quote = entry.quote;
    auto t0 = std::chrono::steady_clock::now();
    try {
        run_checks(entry.build(), budget, rep);
    } catch (const BudgetExceeded& ex) {
        rep.status = Status::BudgetExceeded;
        rep.note = std::string("budget exceeded while building the identity: ") + ex.what();
    } catch (const std::exception& ex) {
        rep.status = Status::Failed;
        rep.note = std::string("construction error: ") + ex.what();
    }
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<VerificationReport> verify_many(const std::vector<const Entry*>& entries, std::uint64_t budget,
                                            unsigned jobs) {
    std::vector<VerificationReport> out(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) out[i] = verify(*entries[i], budget);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace cf::cat
