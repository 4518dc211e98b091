#include <gtest/gtest.h>

#include "fuscat/extraspecial.hpp"
#include "fuscat/tambara.hpp"

using namespace fuscat;

namespace {

// Number of simples of the double: conjugation orbits on commuting pairs,
// which by Burnside is (commuting triples) / |G|.
int commuting_triples_over_order(const GroupPresentation& G) {
    int n = G.order(), c = 0;
    auto commute = [&](int a, int b) { return G.mult[a][b] == G.mult[b][a]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (commute(a, b))
                for (int h = 0; h < n; ++h) c += commute(a, h) && commute(b, h);
    return c / n;
}

}  // namespace

TEST(Extraspecial, Primes) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(5));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(9));
}

TEST(Extraspecial, Rings) {
    for (auto [p, n] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
        auto R = extraspecial_ring(p, n);
        long p2n = 1;
        for (int i = 0; i < 2 * n; ++i) p2n *= p;
        EXPECT_EQ(R.rank(), p2n + p - 1);
        EXPECT_TRUE(validate_ring(R).ok());
        EXPECT_EQ(global_dim(R), Cyc(p2n * p));
        auto es = is_extraspecial_charring(R);
        ASSERT_TRUE(es);
        EXPECT_EQ(*es, std::make_pair(p, n));
        auto s = extraspecial_dimension_checks(p, n);
        EXPECT_TRUE(s.ok());
        EXPECT_EQ(s.quotient_dim, Cyc(p));
        EXPECT_EQ(s.cover_dim, Cyc(p2n * p2n * p));
    }
    EXPECT_THROW(extraspecial_ring(4, 1), std::invalid_argument);
}

TEST(Extraspecial, TyRingsAreCharacterRings) {
    EXPECT_EQ(is_extraspecial_charring(ty_ring(2)), std::make_pair(2L, 1));
    EXPECT_EQ(is_extraspecial_charring(ty_ring(4)), std::make_pair(2L, 2));
    EXPECT_FALSE(is_extraspecial_charring(ty_ring(1)));
    EXPECT_FALSE(is_extraspecial_charring(ty_ring(3)));
}

TEST(Extraspecial, CatalogGroups) {
    auto groups = load_group_catalog();
    EXPECT_EQ(groups.size(), 6u);
    for (const auto& G : groups) {
        std::string why;
        EXPECT_TRUE(G.validate(&why)) << G.name << ": " << why;
    }
    EXPECT_THROW(load_group_catalog("/nonexistent/catalog.json"), std::runtime_error);
    EXPECT_THROW(catalog_group("S4"), std::invalid_argument);
}

TEST(Extraspecial, RepRingsOfOrderEightGroupsCoincide) {
    auto d4 = rep_ring(catalog_group("D4"));
    auto q8 = rep_ring(catalog_group("Q8"));
    EXPECT_TRUE(ring_isomorphism(d4, ty_ring(2)));
    EXPECT_TRUE(ring_isomorphism(q8, ty_ring(2)));
}

TEST(Extraspecial, Doubles) {
    for (const char* name : {"Z2", "E2", "S3", "D4", "Q8", "A4"}) {
        const auto& G = catalog_group(name);
        auto D = double_untwisted(G);
        EXPECT_EQ(D.data.rank(), commuting_triples_over_order(G)) << name;
        EXPECT_EQ(D.data.dim(), Cyc(static_cast<long>(G.order()) * G.order())) << name;
        EXPECT_TRUE(check_modular_axioms(D.data).ok()) << name;
        EXPECT_TRUE(is_nondegenerate(D.data)) << name;
        auto g = gauss_central_charge(D.data);
        ASSERT_TRUE(g.xi);
        EXPECT_EQ(*g.xi, Cyc(1)) << name;
    }
}

TEST(Extraspecial, SubcategoriesOfDoubles) {
    auto ex = double_subcategory_checks();
    EXPECT_TRUE(ex.ok());
    EXPECT_TRUE(ex.doubles_modular);
    int s3 = 0, a4 = 0;
    for (const auto& it : ex.items) {
        EXPECT_TRUE(it.ok) << it.group << " " << it.seed;
        if (it.group == "S3") {
            ++s3;
            EXPECT_EQ(it.rank, 3);
            EXPECT_EQ(it.center_dim, Cyc(2));
        } else {
            ++a4;
            EXPECT_EQ(it.rank, 4);
            EXPECT_EQ(it.center_rank, 3);
        }
    }
    EXPECT_EQ(s3, 2);
    EXPECT_EQ(a4, 2);
}
