#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fuscat {

struct SuiteResult {
    std::string name;
    long checked = 0;
    long violations = 0;
    std::string detail;  // first violation
    double seconds = 0;

    bool ok() const { return violations == 0 && checked > 0; }
};

/// Field axioms on random elements of mixed conductors.
SuiteResult suite_cyc_field(std::uint64_t seed, int samples = 1000);
/// Gauss-sum central charge is multiplicative on every Ising pair.
SuiteResult suite_xi_multiplicative();
/// Reflexivity, symmetry and transitivity of data_isomorphic on a corpus
/// of Ising products and relabelled copies.
SuiteResult suite_isomorphism_laws(std::uint64_t seed);
/// FPdim(K) FPdim(C(K)) = FPdim(C) FPdim(K n C(C)) for every singly
/// generated subring of each nondegenerate corpus member.
SuiteResult suite_centralizer_identity();
/// Extraction of TY braidings from all 36 Ising pairs and random triples.
SuiteResult suite_factorization(std::uint64_t seed, int triples = 20);
/// Ring axioms for TY and extraspecial rings.
SuiteResult suite_ring_axioms();
/// Untwisted doubles of the catalog are modular with central charge 1.
SuiteResult suite_doubles();
/// Braiding class counts and conversion invariants for n <= 3.
SuiteResult suite_braidings();
/// Cover shape and obstruction traces for n = 1, 2, 3.
SuiteResult suite_obstruction();

/// Every suite, in a fixed order.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int workers);

}  // namespace fuscat
