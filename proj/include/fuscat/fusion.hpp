#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fuscat/cyc.hpp"

namespace fuscat {

/// Commutative fusion ring with a dense rank^3 structure tensor.
struct FusionRing {
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    std::vector<int> mult;   // N_{x,y}^z at (x * r + y) * r + z
    std::vector<Cyc> fpdim;  // empty when not yet computed

    FusionRing() = default;
    explicit FusionRing(std::vector<std::string> names, int unit_index = 0);

    int rank() const { return static_cast<int>(labels.size()); }
    int N(int x, int y, int z) const { return mult[(static_cast<std::size_t>(x) * rank() + y) * rank() + z]; }
    void set(int x, int y, int z, int n) { mult[(static_cast<std::size_t>(x) * rank() + y) * rank() + z] = n; }
    /// Nonzero terms (z, N_{x,y}^z) of x (x) y.
    std::vector<std::pair<int, int>> product(int x, int y) const;
    int index_of(const std::string& label) const;
    bool has_dims() const { return static_cast<int>(fpdim.size()) == rank(); }
};

struct AxiomCheck {
    std::string axiom;
    bool ok = true;
    std::vector<int> counterexample;  // object indices of the first failure
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool ok() const;
    const AxiomCheck& get(const std::string& axiom) const;
};

ValidationReport validate_ring(const FusionRing& ring);

class recognition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Frobenius-Perron dimensions, recognized exactly in Z[sqrt2] and checked
/// against the fusion rules.
std::vector<Cyc> fp_dims(const FusionRing& ring);

/// Returns ring.fpdim when present, otherwise fp_dims(ring).
std::vector<Cyc> dims_of(const FusionRing& ring);

/// Sum of squared dimensions.
Cyc global_dim(const FusionRing& ring);

/// Finite abelian group Z/d1 x ... x Z/dk in invariant-factor form
/// (d1 | d2 | ... | dk, all > 1). Elements are encoded with the first
/// factor varying fastest.
struct AbelianGroup {
    std::vector<long> factors;

    long order() const;
    std::vector<long> coords(long element) const;
    long element(const std::vector<long>& coords) const;
    long add(long a, long b) const;
    long negate(long a) const;
    std::string str() const;
    std::string element_str(long element) const;
};

/// Identifies a finite abelian group given by its operation on 0..n-1 and
/// returns the group with, for each input element, its encoded image
/// under an explicit isomorphism.
std::pair<AbelianGroup, std::vector<long>> identify_abelian_group(int n, int identity,
                                                                  const std::function<int(int, int)>& op);

struct Subring {
    std::vector<int> indices;  // sorted

    bool contains(int x) const;
    int size() const { return static_cast<int>(indices.size()); }
    bool operator==(const Subring& o) const { return indices == o.indices; }
};

struct Grading {
    AbelianGroup group;
    std::vector<long> component_of;           // object -> group element
    std::vector<std::vector<int>> components;  // group element -> objects
    Subring adjoint;
};

Grading universal_grading(const FusionRing& ring);

Subring subring_generated(const FusionRing& ring, const std::vector<int>& seeds);
Subring whole_ring(const FusionRing& ring);
Cyc subring_dim(const FusionRing& ring, const Subring& sub);
Subring intersect(const Subring& a, const Subring& b);

struct DistinguishedSubrings {
    Subring pointed;
    Subring adjoint;
    Subring rational;
};

DistinguishedSubrings distinguished_subrings(const FusionRing& ring);

struct InvertiblesGroup {
    AbelianGroup group;
    std::vector<int> objects;      // invertible objects in ring order
    std::vector<long> element_of;  // parallel to objects
};

InvertiblesGroup invertibles_group(const FusionRing& ring);

/// Ring spanned by a subring, objects kept in parent order.
FusionRing restrict_ring(const FusionRing& ring, const Subring& sub);

/// Pointed ring of a finite abelian group, objects in element order.
FusionRing pointed_ring(const AbelianGroup& group, const std::string& prefix = "g");

/// Bijection f with N'_{f(x),f(y)}^{f(z)} = N_{x,y}^z, if one exists.
std::optional<std::vector<int>> ring_isomorphism(const FusionRing& a, const FusionRing& b);

}  // namespace fuscat
