#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuscat/modular.hpp"
#include "fuscat/tambara.hpp"

namespace fuscat {

/// One machine-checked step of a derivation trace.
struct TraceStep {
    std::string name;
    std::string statement;
    bool ok = false;
    bool assumed = false;  // cited, not recomputed
};

struct CoverShape {
    int n = 0;
    long base_dim = 0;     // FPdim C = 2^(2n+1)
    long pointed_dim = 0;  // 2^(2n)
    long cover_dim = 0;    // 2^(4n+1)
    std::vector<long> dy2_candidates;  // d_y^2 allowed before integrality
    std::vector<long> dy2_integral;    // after requiring D integral
    long dy2 = 0;                      // smallest integral choice
    long orbit = 0;
    long components = 0;  // nontrivial graded components
    long rank = 0;
    long multiplicity = 0;  // N^x_{y,y*}
    std::vector<TraceStep> steps;

    bool ok() const;
};

/// Forced structure of a nondegenerate cover of dimension 2^(4n+1) of a
/// nonsymmetric chi_2n^0 braiding.
CoverShape derive_cover_shape(int n);

struct CoverCandidate {
    BraidingData base;
    Premodular data;  // objects 1, g1, g2, g1+g2, x, y1, y1', y2, y2', y3, y3'
    std::vector<int> twist_exponents;  // theta_{y_i} = zeta16^a_i
    std::vector<int> eps;              // S_{y_i,y_i} = eps_i 2 sqrt2
    ModularReport report;
    bool twist_pairing = false;  // theta_{y_i'} = -theta_{y_i}
    bool restriction = false;    // restriction to the base is to_premodular(base)
    bool gauss = false;          // tau_+ = 4 + 4 theta_x and |tau_+|^2 = 32
    int block = 0;               // parity of the number of eps_i equal to +1

    bool ok() const { return report.ok() && twist_pairing && restriction && gauss; }
    std::vector<Cyc> t_row() const;  // theta_x, then the six theta_y
};

/// Builds the candidate from the six twists of y1, y1', y2, y2', y3, y3'.
/// The S-matrix follows the block shape forced by the base, with signs
/// eps_i = theta_{y_i}^-2 zeta8^(-i theta_x). Throws std::invalid_argument if
/// an eps_i is not +-1 or the base is not a nonsymmetric chi_2^0 braiding.
CoverCandidate cover_from_twists(const BraidingData& base, const std::vector<Cyc>& theta_y);

/// All candidates passing the modular axioms, theta_{y_i} = zeta16^a with
/// 0 <= a < 8, ordered by (a_1, a_2, a_3) descending.
std::vector<CoverCandidate> chi20_cover_candidates(const BraidingData& base);

/// Nonsymmetric chi_2^0 base with the given alpha (i or -i) and tau = -1/2.
BraidingData chi20_base(const Cyc& alpha);

struct LagrangianMatch {
    bool found = false;
    Subring lagrangian;  // in the product with the rank-2 pointed factor
    std::vector<std::string> labels;
    std::optional<std::pair<int, int>> extraspecial;  // (p, n)
    std::string group_type;  // "D4 or Q8 (not determined by the fusion ring)"
    int lagrangian_count = 0;
};

/// Rank-2 pointed premodular data with nontrivial twist t.
Premodular pointed_rank2(const Cyc& t);

LagrangianMatch lagrangian_match(const CoverCandidate& c);
LagrangianMatch lagrangian_match(const Premodular& D, const Cyc& theta_x);

struct ObstructionReport {
    int n = 0;
    CoverShape shape;
    std::vector<TraceStep> steps;
    std::string conclusion;
    int candidates = 0;  // n = 1 only
};

ObstructionReport obstruction_report_chi2n0(int n);

/// Citation for the conductor bound used as an external axiom.
extern const char* const kConductorAxiom;

}  // namespace fuscat
