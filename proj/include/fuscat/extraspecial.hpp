#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuscat/covers.hpp"
#include "fuscat/fusion.hpp"
#include "fuscat/modular.hpp"

namespace fuscat {

bool is_prime(long p);

/// Character ring of an extraspecial group of order p^(2n+1): invertibles
/// (Z/p)^(2n), then x_1, ..., x_{p-1} of dimension p^n with
/// x_a x_b = p^n x_{a+b} (a + b != 0 mod p) and x_a x_{-a} = sum of invertibles.
FusionRing extraspecial_ring(long p, int n);

/// (p, n) when R has the fusion rules above.
std::optional<std::pair<long, int>> is_extraspecial_charring(const FusionRing& R);

struct ExtraspecialDimReport {
    long p = 0;
    int n = 0;
    Cyc ring_dim;       // p^(2n+1)
    Cyc pointed_dim;    // p^(2n)
    Cyc cover_dim;      // p^(4n+1)
    Cyc quotient_dim;   // p
    Cyc double_ad_dim;  // p^(4n+2) / p^(2n+1)
    std::string grading;
    std::vector<TraceStep> steps;

    bool ok() const;
};

ExtraspecialDimReport extraspecial_dimension_checks(long p, int n);

struct Character {
    std::string name;
    std::vector<Cyc> values;  // indexed like Centralizer::elements
};

struct Centralizer {
    int class_index = 0;
    int rep = 0;
    std::vector<int> elements;
    std::vector<Character> characters;
};

struct GroupPresentation {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::vector<int>> mult;
    std::vector<std::string> class_names;
    std::vector<std::vector<int>> classes;
    std::vector<Centralizer> centralizers;  // one per class

    int order() const { return static_cast<int>(elements.size()); }
    int identity() const;
    int inverse(int g) const;
    /// Checks group axioms, class partition and character orthonormality.
    bool validate(std::string* why = nullptr) const;
};

/// Default catalog path under the data directory.
std::string default_catalog_path();
std::vector<GroupPresentation> load_group_catalog(const std::string& path = default_catalog_path());
const GroupPresentation& catalog_group(const std::string& name);

/// Simple (class, character) pairs.
struct DoubleSimple {
    int class_index;
    int character;
};

struct GroupDouble {
    Premodular data;
    std::vector<DoubleSimple> simples;
    int find(const std::string& class_name, const std::string& character) const;
};

GroupDouble double_untwisted(const GroupPresentation& G);

/// Representation ring of G from its character table.
FusionRing rep_ring(const GroupPresentation& G);

struct DoubleSubcatItem {
    std::string group;
    std::string seed;
    int rank = 0;
    std::vector<Cyc> dims;
    bool rep_rules = false;  // isomorphic to Rep(G) as a fusion ring
    int center_rank = 0;
    Cyc center_dim;
    bool ok = false;
};

struct DoubleSubcatReport {
    std::vector<DoubleSubcatItem> items;
    bool doubles_modular = false;
    bool ok() const;
};

DoubleSubcatReport double_subcategory_checks();

}  // namespace fuscat
