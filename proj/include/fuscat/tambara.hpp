#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuscat/cyc.hpp"
#include "fuscat/fusion.hpp"
#include "fuscat/modular.hpp"

namespace fuscat {

/// Elements of E_n = (Z/2)^n are bitmasks; bit j-1 is the generator g_j.
using E2Elem = unsigned;

/// Symmetric nondegenerate +-1 valued bicharacter on E_n.
struct Bicharacter {
    int n = 0;
    int k = 1;
    std::vector<std::vector<int>> table;

    int size() const { return 1 << n; }
    int operator()(E2Elem g, E2Elem h) const { return table[g][h]; }
};

/// k = 1: chi(g_j, g_j) = -1 and distinct generators pair trivially.
/// k = 0: chi(g_j, g_j) = 1 and g_{2i-1}, g_{2i} pair to -1 (n even).
Bicharacter bicharacter(int n, int k);

/// q on all of E_n, indexed by element.
using QuadraticForm = std::vector<Cyc>;

/// All 2^n quadratic forms refining chi, ordered by the sign vector
/// (delta_1, ..., delta_n) descending, each sign in {+1, -1}.
std::vector<QuadraticForm> quadratic_forms(const Bicharacter& chi);

/// True iff q(0) = 1 and q(g) q(h) / q(g+h) = chi(g, h) for all g, h.
bool polarizes(const QuadraticForm& q, const Bicharacter& chi);

/// Object labels of the TY ring: invertibles in element order, then "x".
std::vector<std::string> ty_labels(int n);
FusionRing ty_ring(int n);

struct BraidingData {
    Bicharacter chi;
    Cyc tau;
    QuadraticForm q;
    Cyc alpha;

    int n() const { return chi.n; }
    int k() const { return chi.k; }
    int tau_sign() const;
    /// delta_j = q(g_j) / sqrt(chi(g_j, g_j)).
    std::vector<int> deltas() const;
    /// alpha relative to the principal square root of tau * sum q.
    int epsilon() const;
    /// Twist of x under the positive spherical structure: sign(tau) conj(alpha).
    Cyc theta_x() const { return tau_sign() > 0 ? alpha.conj() : -alpha.conj(); }
};

/// tau = tau_sign / sqrt(2^n).
Cyc ty_tau(int n, int tau_sign);

/// Builds braiding data; alpha = alpha_sign * principal sqrt(tau sum_g q(g)).
/// Throws std::invalid_argument when q does not polarize chi_n^k.
BraidingData make_braiding(int n, int k, int tau_sign, const QuadraticForm& q, int alpha_sign);

/// Checks the invariants: polarization, q(g)^4 = 1, alpha^2 = tau sum q,
/// tau^2 = 1 / 2^n.
bool valid_braiding(const BraidingData& b);

struct IsingEntry {
    int index;  // alpha = zeta16^index
    std::string name;
    BraidingData data;
};

/// The 8 Ising braidings, ordered by index 1, 3, ..., 15.
std::vector<IsingEntry> ising_catalog();
const BraidingData& ising(int index);

Premodular to_premodular(const BraidingData& b);

/// Automorphism of E_n given by the images of g_1, ..., g_n.
using E2Auto = std::vector<E2Elem>;

E2Elem apply_auto(const E2Auto& f, E2Elem g);
/// All automorphisms of E_n preserving chi.
std::vector<E2Auto> chi_automorphisms(const Bicharacter& chi);

/// f with q2(f(g)) = q1(g), tau and alpha equal; nullopt if none.
std::optional<E2Auto> braiding_equivalent(const BraidingData& b1, const BraidingData& b2);

struct BraidingClass {
    std::string name;
    BraidingData rep;
    std::vector<BraidingData> members;
    bool symmetric = false;
};

/// Orbit representatives of all (tau, q, alpha) for chi_n^k. Representatives
/// maximize the delta vector; classes are ordered by tau, delta, epsilon,
/// each descending.
std::vector<BraidingClass> enumerate_braiding_classes(int n, int k);

/// {g : q(g)^2 = 1}, plus x when the category is symmetric.
Subring ty_symmetric_center(const BraidingData& b);

/// Stabilizer of q among chi-preserving automorphisms.
std::vector<E2Auto> braided_autos(const BraidingData& b);

/// Display for an element of E_n: "e", "g1", "g1+g2", ...
std::string e2_label(int n, E2Elem g);

}  // namespace fuscat
