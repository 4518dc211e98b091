#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuscat/cyc.hpp"
#include "fuscat/fusion.hpp"

namespace fuscat {

using Matrix = std::vector<std::vector<Cyc>>;

/// Fusion ring with twists and the unnormalized S-matrix (rows of norm dim).
struct Premodular {
    FusionRing ring;
    std::vector<Cyc> theta;
    Matrix S;

    int rank() const { return ring.rank(); }
    const std::vector<Cyc>& dims() const { return ring.fpdim; }
    Cyc dim() const;
};

/// S_{x,y} = theta_x^-1 theta_y^-1 sum_z N_{x,y}^z theta_z d_z.
Matrix s_from_balancing(const FusionRing& ring, const std::vector<Cyc>& theta);

/// Fills in dimensions when missing and derives S by balancing.
Premodular make_premodular(FusionRing ring, std::vector<Cyc> theta);

/// Fusion coefficients dim * N_{y,z}^w = sum_x S_{x,y} S_{x,z} conj(S_{x,w}) / d_x,
/// with d_x = S_{unit,x}, laid out like FusionRing::mult. Returns nullopt if
/// some coefficient is not a nonnegative integer; `where` then receives (y, z, w).
std::optional<std::vector<int>> verlinde_coefficients(const Matrix& S, int unit = 0,
                                                      std::vector<int>* where = nullptr);

struct ModularReport {
    bool twists_valid = true;   // theta_1 = 1, theta_x* = theta_x, roots of unity
    bool symmetric = true;      // S = S^T
    bool dims_match = true;     // S_{1,x} = d_x
    bool balancing = true;      // S agrees with the balancing equation
    bool unitary = true;        // S conj(S)^T = dim Id
    bool verlinde_integral = true;
    std::vector<int> counterexample;
    std::string detail;

    bool ok() const { return twists_valid && symmetric && dims_match && balancing && unitary && verlinde_integral; }
};

ModularReport check_modular_axioms(const Premodular& P);

bool muger_centralizes(const Premodular& P, int x, int y);
Subring centralizer(const Premodular& P, const Subring& sub);
Subring symmetric_center(const Premodular& P);
bool is_nondegenerate(const Premodular& P);

/// FPdim(sub) FPdim(C(sub)) = FPdim(P) FPdim(sub n C(P)).
bool centralizer_dimension_identity(const Premodular& P, const Subring& sub);

/// Premodular data restricted to a subring (labels and order kept).
Premodular restrict_premodular(const Premodular& P, const Subring& sub);

struct GaussSums {
    Cyc tau_plus;
    Cyc tau_minus;
    std::optional<Cyc> xi;  // tau_plus / sqrt(dim) when |tau_plus|^2 = dim
};

GaussSums gauss_central_charge(const Premodular& P);

/// Order of the T-matrix.
long conductor(const Premodular& P);

/// Label bijection f: P1 -> P2 preserving unit, duality, d, theta and S.
std::optional<std::vector<int>> data_isomorphic(const Premodular& a, const Premodular& b);

struct TannakianReport {
    bool is_tannakian_candidate = false;
    bool is_lagrangian = false;
};

TannakianReport tannakian_and_lagrangian(const Premodular& P, const Subring& sub);

struct CondensationDims {
    Cyc quotient_dim;
    std::vector<std::pair<int, Cyc>> free_module_dims;  // (x, FPdim(sub) d_x) for x in C(sub)
};

/// Dimension bookkeeping for condensing a Tannakian candidate. Throws
/// std::invalid_argument when sub is not one.
CondensationDims condensation_dims(const Premodular& P, const Subring& sub);

/// True iff the sum of d^2 over rational d divides the sum over all d.
bool rational_divisibility_check(const std::vector<Cyc>& dims);

/// True iff a / b is an algebraic integer in Z[sqrt2] (or Z when rational).
bool divides_in_z_sqrt2(const Cyc& b, const Cyc& a);

}  // namespace fuscat
