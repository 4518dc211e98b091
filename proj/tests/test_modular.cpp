#include <gtest/gtest.h>

#include "fuscat/covers.hpp"
#include "fuscat/modular.hpp"
#include "fuscat/products.hpp"
#include "fuscat/tambara.hpp"

using namespace fuscat;

namespace {

// Toric code: pointed on Z/2 x Z/2 with twists 1, 1, 1, -1 (e, m bosons, f fermion).
Premodular toric_code() {
    auto R = pointed_ring(AbelianGroup{{2, 2}});
    return make_premodular(R, {Cyc(1), Cyc(1), Cyc(1), Cyc(-1)});
}

Premodular relabel(const Premodular& P, const std::vector<int>& perm) {
    // perm[new] = old, unit kept first
    int r = P.rank();
    FusionRing R;
    R.labels.resize(r);
    R.dual.resize(r);
    R.mult.assign(static_cast<std::size_t>(r) * r * r, 0);
    std::vector<int> inv(r);
    for (int i = 0; i < r; ++i) inv[perm[i]] = i;
    std::vector<Cyc> theta(r), dims(r);
    for (int i = 0; i < r; ++i) {
        R.labels[i] = P.ring.labels[perm[i]];
        R.dual[i] = inv[P.ring.dual[perm[i]]];
        theta[i] = P.theta[perm[i]];
        dims[i] = P.ring.fpdim[perm[i]];
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) R.set(i, j, k, P.ring.N(perm[i], perm[j], perm[k]));
    }
    R.fpdim = dims;
    return make_premodular(R, theta);
}

}  // namespace

TEST(Modular, IsingSMatrix) {
    auto P = to_premodular(ising(1));
    const Cyc r2 = sqrt2();
    Matrix want = {{1, 1, r2}, {1, 1, -r2}, {r2, -r2, 0}};
    EXPECT_EQ(P.S, want);
    EXPECT_TRUE(check_modular_axioms(P).ok());
    EXPECT_TRUE(is_nondegenerate(P));
    EXPECT_EQ(conductor(P), 16);
    auto g = gauss_central_charge(P);
    ASSERT_TRUE(g.xi);
    EXPECT_EQ(*g.xi, ising(1).theta_x());
}

TEST(Modular, SemionCentralCharge) {
    auto P = pointed_rank2(root_of_unity(4, 1));
    EXPECT_EQ(P.S, (Matrix{{1, 1}, {1, -1}}));
    auto g = gauss_central_charge(P);
    ASSERT_TRUE(g.xi);
    EXPECT_EQ(*g.xi, root_of_unity(8, 1));
    EXPECT_EQ(g.tau_plus * g.tau_minus, P.dim());
}

TEST(Modular, VerlindeRecoversFusionRules) {
    for (int j : {1, 3, 5, 7}) {
        auto P = to_premodular(ising(j));
        auto N = verlinde_coefficients(P.S);
        ASSERT_TRUE(N);
        EXPECT_EQ(*N, P.ring.mult);
    }
}

TEST(Modular, BrokenDataIsCaught) {
    auto P = to_premodular(ising(1));
    P.S[2][2] = Cyc(1);
    auto r = check_modular_axioms(P);
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.balancing);

    auto Q = to_premodular(ising(1));
    Q.theta[2] = Cyc(2);
    EXPECT_FALSE(check_modular_axioms(Q).twists_valid);
}

TEST(Modular, SymmetricCenters) {
    auto cls = enumerate_braiding_classes(2, 0);
    for (const auto& c : cls) {
        auto P = to_premodular(c.rep);
        auto z = symmetric_center(P);
        EXPECT_EQ(z.size(), c.symmetric ? 5 : 4) << c.name;
        EXPECT_EQ(z, ty_symmetric_center(c.rep)) << c.name;
        EXPECT_FALSE(is_nondegenerate(P));
        EXPECT_FALSE(check_modular_axioms(P).unitary);
    }
}

TEST(Modular, CentralizerIdentity) {
    auto prod = ising_product({1, 3});
    const auto& P = prod.data;
    for (int x = 0; x < P.rank(); ++x) EXPECT_TRUE(centralizer_dimension_identity(P, subring_generated(P.ring, {x})));
    auto T = to_premodular(enumerate_braiding_classes(2, 1)[0].rep);
    for (int x = 0; x < T.rank(); ++x) EXPECT_TRUE(centralizer_dimension_identity(T, subring_generated(T.ring, {x})));
}

TEST(Modular, TannakianAndLagrangian) {
    auto T = toric_code();
    EXPECT_TRUE(check_modular_axioms(T).ok());
    auto boson = tannakian_and_lagrangian(T, Subring{{0, 1}});
    EXPECT_TRUE(boson.is_tannakian_candidate);
    EXPECT_TRUE(boson.is_lagrangian);
    auto fermion = tannakian_and_lagrangian(T, Subring{{0, 3}});
    EXPECT_FALSE(fermion.is_tannakian_candidate);
    auto cd = condensation_dims(T, Subring{{0, 1}});
    EXPECT_EQ(cd.quotient_dim, Cyc(1));
    EXPECT_THROW(condensation_dims(T, Subring{{0, 3}}), std::invalid_argument);
}

TEST(Modular, DataIsomorphism) {
    auto P = ising_product({1, 5}).data;
    std::vector<int> perm(P.rank());
    for (int i = 0; i < P.rank(); ++i) perm[i] = i;
    std::reverse(perm.begin() + 1, perm.end());
    auto Q = relabel(P, perm);
    EXPECT_TRUE(data_isomorphic(P, Q));
    EXPECT_TRUE(data_isomorphic(Q, P));
    EXPECT_FALSE(data_isomorphic(to_premodular(ising(1)), to_premodular(ising(15))));
    EXPECT_FALSE(data_isomorphic(to_premodular(ising(1)), toric_code()));
}

TEST(Modular, Divisibility) {
    EXPECT_FALSE(rational_divisibility_check({Cyc(1), Cyc(1), Cyc(2), sqrt2()}));
    EXPECT_TRUE(rational_divisibility_check({Cyc(1), Cyc(1), sqrt2()}));
    EXPECT_TRUE(divides_in_z_sqrt2(sqrt2(), Cyc(2)));
    EXPECT_FALSE(divides_in_z_sqrt2(Cyc(2), sqrt2()));
    EXPECT_FALSE(divides_in_z_sqrt2(Cyc(3), Cyc(2)));
}
