#ifndef LAGRANGE_KIT_IDENTITIES_REGISTRY_HPP
#define LAGRANGE_KIT_IDENTITIES_REGISTRY_HPP

#include <functional>
#include <string>
#include <vector>

#include <lagrange_kit/identities/catalan.hpp>
#include <lagrange_kit/identities/fuss_catalan.hpp>
#include <lagrange_kit/identities/narayana.hpp>
#include <lagrange_kit/identities/report.hpp>
#include <lagrange_kit/identities/residues.hpp>
#include <lagrange_kit/identities/stirling.hpp>
#include <lagrange_kit/identities/tree_function.hpp>

namespace lagrange_kit
{

struct IdentityEntry
{
    std::string name;
    std::string summary;
    // Parameter names the runner reads, besides "order".
    std::vector<std::string> params;
    std::function<IdentityReport(const IdentityParams &, int order)> run;
};

inline const std::vector<IdentityEntry> &identity_registry()
{
    static const std::vector<IdentityEntry> entries{
        {"catalan", "ballot numbers, central binomials, log c and convolutions", {"k"},
         [](const IdentityParams &p, int order) { return check_catalan_suite(p.get_range("k", {-5, 5}), order); }},
        {"fuss-catalan", "powers, inverse relations, duality and composition of c_p", {"p", "k"},
         [](const IdentityParams &p, int order) {
             return check_fuss_catalan(p.get_range("p", {2, 5}), p.get_range("k", {-3, 5}), order);
         }},
        {"jensen", "Jensen's binomial sum", {"p", "j", "r", "n-max"},
         [](const IdentityParams &p, int) {
             return check_jensen(p.get_range("p", {0, 4}), p.get_range("j", {-6, 6}), p.get_range("r", {-6, 6}),
                                 p.get_int("n-max", 8));
         }},
        {"rothe-hagen", "both Fuss-Catalan convolutions on a (p, k, l) grid", {"p", "k", "n-max"},
         [](const IdentityParams &p, int) {
             return check_rothe_hagen(p.get_range("p", {0, 4}), p.get_range("k", {-6, 6}), p.get_int("n-max", 8));
         }},
        {"tree-function", "tree and forest series, parking form, convolutions, Abel", {"k"},
         [](const IdentityParams &p, int order) {
             return check_tree_function_suite(p.get_range("k", {-3, 5}), order);
         }},
        {"lacasse", "U^3 - U^2 = sum n^{n+1} x^n/n! = T/(1-T)^3", {},
         [](const IdentityParams &, int order) { return check_lacasse(order); }},
        {"abel", "Abel's generalization of the binomial theorem", {"x", "z", "n-max"},
         [](const IdentityParams &p, int) {
             return check_abel(p.get_range("x", {-3, 3}), p.get_range("z", {-2, 2}), p.get_int("n-max", 8));
         }},
        {"weighted-stirling", "EGF of weighted Stirling numbers of the second kind", {"j", "k"},
         [](const IdentityParams &p, int order) {
             return check_ws_egf(p.get_range("j", {0, 6}), p.get_range("k", {-3, 3}), order);
         }},
        {"p-l", "sum (n+k)^{n-l} x^n/n! = e^{kT} p_l(T)", {"l", "k"},
         [](const IdentityParams &p, int order) {
             return check_p_l(p.get_range("l", {1, 4}), p.get_range("k", {-5, 5}), order);
         }},
        {"r-m", "sum (n+k)^{n+m} x^n/n! = e^{kT} r_m(T,k)/(1-T)^{2m+1}", {"m", "k"},
         [](const IdentityParams &p, int order) {
             return check_r_m(p.get_range("m", {0, 4}), p.get_range("k", {-3, 5}), order);
         }},
        {"q-l", "sum n^{n-l} x^n/n! = T q_l(T)", {"l"},
         [](const IdentityParams &p, int order) { return check_q_l(p.get_range("l", {1, 4}), order); }},
        {"fc-polynomial", "polynomiality of the Fuss-Catalan sums u_{i,j}", {"p", "i", "j"},
         [](const IdentityParams &p, int order) {
             return check_fc_polynomiality(p.get_int("p", 3), p.get_int("i", 0), p.get_int("j", 2), order);
         }},
        {"narayana", "f = (1+xf)(1+yf) and its three-variable extension", {"k"},
         [](const IdentityParams &p, int order) {
             return check_narayana_suite(p.get_range("k", {1, 3}), order);
         }},
        {"fuss-narayana", "f = prod (1+x_t f)^{r_t}; negative r_t means 1/(1-x_t f)^{-r_t}", {"r", "k"},
         [](const IdentityParams &p, int order) {
             return check_fuss_narayana(p.get_list("r", {2, 1}), p.get_range("k", {1, 3}), order);
         }},
        {"rational-expansion", "(1+a)^r (1+b)^s/(1-ab)^{r+s+1}", {"r", "s"},
         [](const IdentityParams &p, int order) {
             return check_rational_expansion(p.get_range("r", {0, 3}), p.get_range("s", {0, 3}), order);
         }},
        {"finite-difference-lemma", "k-th differences of random polynomials", {"n-max", "seed"},
         [](const IdentityParams &p, int) {
             return check_ffd_lemma(p.get_int("n-max", 8), static_cast<std::uint64_t>(p.get_int("seed", 1)));
         }},
        {"raney", "coefficients of powers of f = A1 e^{B1 f} + A2 e^{B2 f}", {"i", "k"},
         [](const IdentityParams &p, int) { return check_raney(p.get_int("i", 5), p.get_range("k", {1, 2})); }},
        {"schur-jabotinsky", "[x^n] f^k = (k/n) [x^{-k}] g^{-n}", {"n-max", "seed"},
         [](const IdentityParams &p, int) {
             return check_schur_jabotinsky(20, p.get_int("n-max", 6), static_cast<std::uint64_t>(p.get_int("seed", 1)));
         }},
        {"hirzebruch-residue", "residues of (1-e^{-x})^{-n} and change of variables", {"n-max", "seed"},
         [](const IdentityParams &p, int) {
             return check_hirzebruch_residue(p.get_int("n-max", 20), 30,
                                             static_cast<std::uint64_t>(p.get_int("seed", 1)));
         }},
    };
    return entries;
}

inline const IdentityEntry &find_identity(const std::string &name)
{
    for (const auto &e : identity_registry()) {
        if (e.name == name) {
            return e;
        }
    }
    throw UnknownIdentity("no identity named '" + name + "'");
}

// Default order per identity when none is given.
inline int default_identity_order(const std::string &name)
{
    if (name == "narayana" || name == "fuss-narayana") {
        return 8;
    }
    if (name == "rational-expansion") {
        return 10;
    }
    if (name == "lacasse") {
        return 20;
    }
    return 30;
}

inline IdentityReport run_identity(const std::string &name, const IdentityParams &params, int order)
{
    return find_identity(name).run(params, order);
}

} // namespace lagrange_kit

#endif
