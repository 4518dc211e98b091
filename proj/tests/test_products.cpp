#include <gtest/gtest.h>

#include "fuscat/covers.hpp"
#include "fuscat/products.hpp"

using namespace fuscat;

namespace {
const int kIsing[] = {1, 3, 5, 7, 9, 11, 13, 15};
}

TEST(Products, IsingSquareShape) {
    auto p = ising_product({1, 1});
    EXPECT_EQ(p.data.rank(), 9);
    EXPECT_EQ(p.data.dim(), Cyc(16));
    int twos = 0;
    for (const auto& d : p.data.dims()) twos += d == Cyc(2);
    EXPECT_EQ(twos, 1);
    EXPECT_TRUE(check_modular_axioms(p.data).ok());
    auto sub = generated_by_max_dim(p.data);
    EXPECT_EQ(sub.data.rank(), 5);
    EXPECT_EQ(integral_subcat(p.data).sub, sub.sub);
}

TEST(Products, KroneckerS) {
    auto a = to_premodular(ising(3)), b = to_premodular(ising(9));
    auto p = deligne_product(a, b);
    for (int x = 0; x < p.data.rank(); ++x)
        for (int y = 0; y < p.data.rank(); ++y) {
            const auto &px = p.parts[x], &py = p.parts[y];
            EXPECT_EQ(p.data.S[x][y], a.S[px[0]][py[0]] * b.S[px[1]][py[1]]);
        }
    for (int x = 0; x < p.data.rank(); ++x)
        EXPECT_EQ(p.data.theta[x], a.theta[p.parts[x][0]] * b.theta[p.parts[x][1]]);
}

TEST(Products, MaxDimMustBeUnique) {
    auto s = pointed_rank2(root_of_unity(4, 1));
    EXPECT_THROW(generated_by_max_dim(deligne_product(s, s).data), std::invalid_argument);
}

TEST(Products, CentralChargeIsProductOfTwists) {
    for (int j : kIsing)
        for (int k : kIsing) {
            auto g = gauss_central_charge(ising_product({j, k}).data);
            ASSERT_TRUE(g.xi);
            EXPECT_EQ(*g.xi, ising(j).theta_x() * ising(k).theta_x());
        }
}

TEST(Products, Factorization) {
    for (int a = 0; a < 8; ++a)
        for (int b = a; b < 8; ++b) {
            auto r = verify_ising_factorization({kIsing[a], kIsing[b]});
            EXPECT_TRUE(r.ok) << r.detail;
            EXPECT_TRUE(r.tau_product && r.alpha_product && r.q_basis);
            EXPECT_EQ(r.recovered.tau, ising(kIsing[a]).tau * ising(kIsing[b]).tau);
        }
    auto r = verify_ising_factorization({1, 7, 13});
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_EQ(r.recovered.n(), 3);
    EXPECT_EQ(r.recovered.k(), 1);
}

TEST(Products, Classification) {
    auto rep = classify_ising_products(2);
    EXPECT_EQ(rep.total_pairs, 36);
    EXPECT_EQ(rep.total_product_classes, 20);
    EXPECT_EQ(rep.total_integral_classes, 12);
    ASSERT_EQ(rep.rows.size(), 8u);
    for (int m = 0; m < 8; ++m) {
        EXPECT_EQ(rep.rows[m].xi, root_of_unity(8, m));
        for (const auto& [j, k] : rep.rows[m].pairs) EXPECT_EQ(ising(j).theta_x() * ising(k).theta_x(), rep.rows[m].xi);
    }
    // j, k -> j + 8, k + 8 never changes the product class
    for (const auto& row : rep.rows)
        for (const auto& c : row.product_classes)
            for (const auto& [j, k] : c.members) {
                int a = (j + 8) % 16, b = (k + 8) % 16;
                std::pair<int, int> s{std::min(a, b), std::max(a, b)};
                EXPECT_NE(std::find(c.members.begin(), c.members.end(), s), c.members.end());
            }
    // worker count does not change the answer
    auto one = classify_ising_products(1);
    for (int m = 0; m < 8; ++m) EXPECT_EQ(one.rows[m].integral_classes.size(), rep.rows[m].integral_classes.size());
}

TEST(Products, CoversOfChi21) {
    for (const auto& c : enumerate_braiding_classes(2, 1)) {
        auto cov = build_cover_chi_n1(c.rep);
        EXPECT_TRUE(cov.equivalent_to_input) << c.name;
        EXPECT_EQ(cov.indices.size(), 2u);
    }
    for (const auto& c : enumerate_braiding_classes(3, 1)) EXPECT_TRUE(build_cover_chi_n1(c.rep).equivalent_to_input) << c.name;
}
