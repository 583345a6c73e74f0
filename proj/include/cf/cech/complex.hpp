#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "cf/cech/matrix.hpp"

namespace cf::cech {

using Simplex = std::vector<int>;

class SimplicialComplex {
public:
    /* Facets may be unsorted; every face is generated. */
    SimplicialComplex(std::string name, int vertices, const std::vector<Simplex>& facets);

    const std::string& name() const { return name_; }
    int vertices() const { return vertices_; }
    int dim() const { return static_cast<int>(simplices_.size()) - 1; }
    const std::vector<Simplex>& facets() const { return facets_; }
    std::size_t count(int p) const;
    const Simplex& simplex(int p, std::size_t i) const { return simplices_.at(p)[i]; }
    const std::vector<Simplex>& simplices(int p) const { return simplices_.at(p); }
    /* Index of a sorted simplex, or -1. */
    long index(const Simplex& s) const;

    /* delta_p : C^p -> C^{p+1}; rows are (p+1)-simplices. */
    IntMatrix coboundary_matrix(int p) const;
    long euler_characteristic() const;

    nlohmann::json to_json() const;
    static SimplicialComplex from_json(const nlohmann::json& j);

private:
    std::string name_;
    int vertices_;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, std::size_t>> index_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

ComplexPtr make_complex(std::string name, int vertices, const std::vector<Simplex>& facets);
ComplexPtr relabel(const SimplicialComplex& k, const std::vector<int>& perm);

/* Fixtures. */
ComplexPtr sphere3();   /* boundary of the 4-simplex */
ComplexPtr circle();    /* boundary of a triangle */
ComplexPtr rp2();       /* 6-vertex projective plane */
ComplexPtr torus3();    /* 27-vertex Freudenthal triangulation of T^3 */
ComplexPtr interval();  /* a single edge */
ComplexPtr simplex(int d);
ComplexPtr fixture(const std::string& name); /* throws std::invalid_argument */
std::vector<std::string> fixture_names();

struct Ring {
    enum class Kind { Z, Q, Zmod };
    Kind kind = Kind::Z;
    Int n = 0;

    static Ring Zr() { return {}; }
    static Ring Qr() { return {Kind::Q, 0}; }
    static Ring mod(const Int& n);
    /* "Z", "Q", "Zmod:n" */
    static Ring parse(const std::string& s);
    std::string str() const;
    /* Canonical representative; throws if the value is not in the ring. */
    Rat reduce(const Rat& x) const;
    bool operator==(const Ring& o) const { return kind == o.kind && n == o.n; }
};

class Cochain {
public:
    Cochain(ComplexPtr k, int degree, Ring ring = {});

    const ComplexPtr& complex() const { return k_; }
    int degree() const { return degree_; }
    const Ring& ring() const { return ring_; }
    std::size_t size() const { return values_.size(); }
    const Rat& operator[](std::size_t i) const { return values_[i]; }
    void set(std::size_t i, const Rat& v) { values_[i] = ring_.reduce(v); }
    const std::vector<Rat>& values() const { return values_; }

    /* Value on an arbitrary ordered simplex (sign of the sorting permutation, 0 on repeats). */
    Rat at(const Simplex& s) const;

    bool is_zero() const;
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator*(const Rat& c) const;
    bool operator==(const Cochain& o) const;
    Cochain with_ring(const Ring& r) const;

    nlohmann::json to_json() const;
    static Cochain from_json(ComplexPtr k, const nlohmann::json& j);

private:
    ComplexPtr k_;
    int degree_;
    Ring ring_;
    std::vector<Rat> values_;
};

std::string simplex_key(const Simplex& s);

/* Coboundary matrices delta_0 .. delta_{dim-1}, checked for delta^2 = 0. */
struct CochainComplex {
    ComplexPtr complex;
    Ring ring;
    std::vector<IntMatrix> delta;
};
CochainComplex cochain_complex(ComplexPtr k, Ring ring = {});

/* Raw coboundary on a value vector of degree p. */
std::vector<Rat> coboundary_values(const SimplicialComplex& k, int p, const std::vector<Rat>& v);

Cochain coboundary(const Cochain& c);
Cochain cup(const Cochain& a, const Cochain& b);
/* Steenrod cup-i product; i > 0 requires Z/2 coefficients. */
Cochain cup_i(const Cochain& a, const Cochain& b, int i);
/* Sq^k on a mod 2 cocycle. */
Cochain steenrod_square(const Cochain& x, int k);
/* Integral Sq^3 of an integral cocycle: Bockstein of Sq^2 of its reduction. */
Cochain integral_sq3(const Cochain& x);

}  // namespace cf::cech
