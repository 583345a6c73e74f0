#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cf/cech/complex.hpp"
#include "cf/cech/lattice.hpp"

namespace cf::ahss {

using cech::FGAbelianGroup;
using cech::Int;
using cech::IntMatrix;
using cech::Subquotient;

struct Constraint {
    enum class Value { Zero, KernelContains };
    int r = 5;
    std::optional<int> from;   /* source column; all columns when absent */
    Value value = Value::Zero;
    std::vector<Int> element;  /* KernelContains: model coordinates in the source column */
    std::string when;          /* "", "h_odd" or "h_even" (needs H^3 = Z) */
    std::string justification;

    nlohmann::json to_json() const;
    static Constraint from_json(const nlohmann::json& j);
};

/* Integral cohomology of M with chosen generators, the twist class and the maps d3 is built from.
   Group coordinates are torsion first, then free. */
struct CohomologyModel {
    std::string name;
    int top = 0;
    std::vector<FGAbelianGroup> groups;
    std::vector<Int> h;
    std::map<int, IntMatrix> cup_h; /* H^p -> H^{p+3}; absent means zero */
    std::map<int, IntMatrix> sq3;
    std::vector<Constraint> constraints;

    std::size_t coords(int p) const;
    const FGAbelianGroup& group(int p) const;
    IntMatrix cup_matrix(int p) const;
    IntMatrix sq3_matrix(int p) const;
    /* d3 = Sq3 - h u : H^p -> H^{p+3} */
    IntMatrix d3(int p) const;
    /* h as an integer when H^3 = Z. */
    std::optional<Int> h_integer() const;
    bool constraint_applies(const Constraint& c) const;

    /* Throws std::invalid_argument on an inconsistent model. */
    void validate() const;
    /* Replace h by k times the generator of H^3 = Z, rescaling the cup-by-h maps. */
    CohomologyModel with_h(const Int& k) const;

    nlohmann::json to_json() const;
    static CohomologyModel from_json(const nlohmann::json& j);
};

/* Model of a simplicial complex with h given in the coordinates of its computed H^3. */
CohomologyModel model_from_complex(const cech::ComplexPtr& k, const std::vector<Int>& h);

/* Built-in models: S1, S3, T3, lens:<p>, SU3, SU3-even. */
CohomologyModel fixture(const std::string& name, std::optional<Int> h = std::nullopt);
std::vector<std::string> fixture_names();

struct Page {
    int r = 3;
    std::vector<Subquotient> E;     /* E_r^{p,0}, stored once per p */
    std::map<int, IntMatrix> d;     /* d_r from column p, in model coordinates */
};

Page init_pages(const CohomologyModel& m);
/* E_4 = E_5. */
Page apply_d3(const CohomologyModel& m, const Page& e3);

struct DifferentialStatus {
    int r = 0, from = 0, to = 0;
    std::string status; /* zero, constrained, indeterminate */
    std::string reason;
};

struct KGroup {
    bool determined = true;
    std::vector<std::pair<int, FGAbelianGroup>> graded;
    FGAbelianGroup assembled;
    bool extension_resolved = false;
    std::string note;
};

struct Candidate {
    std::string label; /* e.g. "(2Z)/4" */
    std::map<int, FGAbelianGroup> e_inf;
    KGroup k0, k1;
};

struct ConvergenceReport {
    std::string model;
    std::vector<Int> h;
    std::vector<FGAbelianGroup> e3, e5;
    std::vector<std::optional<FGAbelianGroup>> e_inf;
    std::vector<Subquotient> e5_sub;
    std::vector<DifferentialStatus> differentials;
    KGroup k0, k1;
    std::vector<Candidate> candidates;
    std::vector<Constraint> constraints;
    std::optional<bool> closed_form; /* three-dimensional models: K0 = H^2, K1 = H^1 + Z/h */
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
    std::string text() const;
};

ConvergenceReport converge(const CohomologyModel& m, const Page& e5);
ConvergenceReport run(const CohomologyModel& m);

struct Target {
    int p = 0;
    bool determined = false;
    FGAbelianGroup group;
    std::string codomain;
    FGAbelianGroup codomain_group;
    IntMatrix inclusion; /* columns: images of the generators of E_inf^{p,0} */
    bool injective = false;
    int factor = 1;
    std::string note;
    nlohmann::json to_json() const;
};

std::vector<Target> factorization_targets(const CohomologyModel& m, const ConvergenceReport& rep);

nlohmann::json group_json(const FGAbelianGroup& g);
FGAbelianGroup group_from_json(const nlohmann::json& j);
nlohmann::json matrix_json(const IntMatrix& a);
IntMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);

}  // namespace cf::ahss
