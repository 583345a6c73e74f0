#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cf/catalog/cochains.hpp"

namespace cf::cat {

/* One expression that must normalize to zero. */
struct Check {
    std::string label;
    Expr expr;
};

/* Everything needed to verify one identity: its context and the checks. */
struct Task {
    std::shared_ptr<Context> ctx;
    std::vector<Check> checks;
    /* If non-empty, rules of any other family firing is a failure. */
    std::set<std::string> allowed_families;

    void zero(const std::string& label, const Expr& e) { checks.push_back({label, e}); }
    void eq(const std::string& label, const Expr& lhs, const Expr& rhs) { checks.push_back({label, lhs - rhs}); }
    /* a = b slot by slot on the generic simplex of each slot. */
    void cochains(const std::string& label, const SymCochain& a, const SymCochain& b);
};

struct Entry {
    std::string id;
    std::string location;
    std::string quote;
    int arity = 1;
    std::uint64_t budget = kDefaultBudget;
    std::function<Task()> build;
};

enum class Status { Verified, Failed, BudgetExceeded };
std::string status_name(Status s);

struct CheckReport {
    std::string label;
    Status status = Status::Verified;
    std::uint64_t steps = 0;
    std::string residue;
};

struct VerificationReport {
    std::string id, location, quote;
    Status status = Status::Verified;
    std::uint64_t steps = 0;
    std::string lint;
    double millis = 0;
    std::vector<CheckReport> checks;
    std::vector<std::string> fired;
    std::string note;
};

/* All identities, sorted by id. */
const std::vector<Entry>& manifest();
const Entry* find_entry(const std::string& id);

/* budget 0 means the entry's own budget. */
VerificationReport verify(const Entry& e, std::uint64_t budget = 0);
/* Runs on up to jobs threads; the result follows the order of entries. */
std::vector<VerificationReport> verify_many(const std::vector<const Entry*>& entries, std::uint64_t budget = 0,
                                            unsigned jobs = 1);

/* Registration hooks of the entry groups. */
using Registry = std::vector<Entry>;
void register_local_entries(Registry& r);
void register_cocycle_entries(Registry& r);
void register_change_entries(Registry& r);

}  // namespace cf::cat
