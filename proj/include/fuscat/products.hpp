#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuscat/modular.hpp"
#include "fuscat/tambara.hpp"

namespace fuscat {

/// Deligne product with, for every object, its factor components.
struct DeligneProduct {
    Premodular data;
    std::vector<std::vector<int>> parts;  // parts[x][i] = object of factor i
    std::vector<Premodular> factors;
};

/// Objects: unit, then invertibles in mixed-radix order over the factors'
/// invertibles (first factor fastest), then the rest by (dim, label).
/// S is the Kronecker product; the balancing equation is checked and a
/// std::logic_error thrown on mismatch.
DeligneProduct deligne_product(const std::vector<Premodular>& factors);
DeligneProduct deligne_product(const Premodular& a, const Premodular& b);

/// Ising product I_{k_1} x ... x I_{k_n}.
DeligneProduct ising_product(const std::vector<int>& indices);

struct SubPremodular {
    Subring sub;
    Premodular data;  // restricted ring, twists and S
};

/// Subring generated by the unique simple of maximal dimension. Throws
/// std::invalid_argument if the maximum is not unique.
SubPremodular generated_by_max_dim(const Premodular& P);

/// Subring of objects with rational dimension.
SubPremodular integral_subcat(const Premodular& P);

/// Braiding data of a TY(E_n)-shaped subring of a product of Ising factors:
/// g_j is the object with g in factor j, q(g_j) = q_j(g), alpha = prod alpha_j,
/// tau = prod tau_j. The twists and S of the subring are checked against the
/// recovered data. Throws std::invalid_argument on non-TY shapes or when a
/// check fails.
BraidingData recover_ty_braiding(const DeligneProduct& product, const Subring& sub,
                                 const std::vector<BraidingData>& factor_braidings);

struct FactorizationReport {
    std::vector<int> indices;
    bool ok = false;
    BraidingData recovered;
    BraidingData expected;
    std::optional<E2Auto> witness;
    bool tau_product = false;
    bool alpha_product = false;
    bool q_basis = false;
    std::string detail;
};

/// Builds the Ising product, extracts the max-dim subring, recovers its
/// braiding and compares it with the braiding predicted from the factors.
FactorizationReport verify_ising_factorization(const std::vector<int>& indices);

struct PairClass {
    std::vector<std::pair<int, int>> members;
    std::pair<int, int> rep() const { return members.front(); }
};

struct XiRow {
    Cyc xi;
    std::vector<std::pair<int, int>> pairs;
    std::vector<PairClass> product_classes;
    std::vector<PairClass> integral_classes;
};

struct IsingProductReport {
    std::vector<XiRow> rows;  // xi = zeta8^m, m = 0..7
    int total_pairs = 0;
    int total_product_classes = 0;
    int total_integral_classes = 0;
};

/// Sweeps all unordered pairs j <= k of Ising indices. Class members are
/// ordered with j = k pairs first, then lexicographically.
IsingProductReport classify_ising_products(int workers = 1);

struct CoverConstruction {
    std::vector<int> indices;
    std::vector<Cyc> taus;
    FactorizationReport verification;
    bool equivalent_to_input = false;
};

/// Ising factors whose product realizes the given chi_n^1 braiding.
CoverConstruction build_cover_chi_n1(const BraidingData& b);

}  // namespace fuscat
