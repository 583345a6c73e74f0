#pragma once

#include <string>
#include <vector>

#include "cf/catalog/cochains.hpp"

namespace cf::cat {

/* Prefactor-free local forms; arguments are group elements. */
Expr C3(const Expr& f);
Expr B2(const Expr& f, const Expr& g);
Expr C5(const Expr& f);
Expr B4(const Expr& f, const Expr& g);
Expr A(const Expr& f, const Expr& g, const Expr& h);
Expr build_local_form(const std::string& name, const std::vector<Expr>& args);

/* Family names of one set of choices (section g, lifts phi, eta, alpha). */
struct Families {
    std::string g = "g", phi = "phi", eta = "eta", h = "h", alpha = "alpha", a = "a";
};

/* g_i conjugate along phi, phi with log eta, delta eta = h, delta h = 0,
   delta alpha = a, delta a = 0. */
void declare_standard(Context& ctx, const Families& f = {});
/* Only the parts that do not involve g, alpha, a. */
void declare_twist(Context& ctx, const Families& f = {});
/* Section g with det symbol alpha over an existing twist. */
void declare_section(Context& ctx, const Families& f = {});

/* Deligne 4-cochain (b, beta0, beta1, beta2, beta3). */
SymCochain beta(const Context& ctx, const Families& f = {});
/* Deligne 6-cochain (c, gamma0, ..., gamma5). */
SymCochain gamma(const Context& ctx, const Families& f = {});

/* Q(h)_{012345} = h2345 h0125 + h1234 h0145 + h0123 h0345. */
Expr Q(const Context& ctx, const std::string& h, const Idx& i);
/* h as an integer Deligne cochain of order 0. */
SymCochain integer_family(const Context& ctx, const std::string& fam, int p);

/* Component of form degree q of a Deligne or Cech-de Rham cochain. */
Builder form_part(const SymCochain& x, int q);

/* nu = (0, 0, 0, beta2_ij dalpha_j, beta3_i dalpha_i), a Cech-de Rham 4-cochain. */
SymCochain nu(const SymCochain& beta, const Builder& dalpha);
/* Cech-de Rham 9-cochain with components in form degrees 5..9. */
SymCochain pi(const SymCochain& beta, const SymCochain& gamma, const Builder& h, const Builder& dalpha);
/* S_ij = beta2_ij beta2_ij. */
Builder S4(const SymCochain& beta);

/* omega for beta = m u h + D lambda with a global alpha. */
struct OmegaData {
    Builder h, lambda0, lambda1, lambda2;
    Expr m;
};
SymCochain omega(const SymCochain& gamma, const OmegaData& w);

/* Deligne 3-cocycle (h, eta0, eta1, eta2) and dalpha for the partial Chern cochains. */
struct ChernData {
    Builder h, eta0, eta1, eta2, dalpha;
};
SymCochain chern_alpha(const ChernData& c);
SymCochain chern_beta(const SymCochain& beta, const ChernData& c);
SymCochain chern_gamma(const SymCochain& beta, const SymCochain& gamma, const ChernData& c);
/* (0, 0, 0, d eta2). */
SymCochain chern_eta(const ChernData& c);
/* (h, eta0, eta1, eta2) as a Deligne cochain of order 3. */
SymCochain deligne_eta(const ChernData& c);

}  // namespace cf::cat
