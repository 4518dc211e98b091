#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fuscat/covers.hpp"

using namespace fuscat;

namespace {
const Cyc I = root_of_unity(4, 1);
}

TEST(Covers, Shapes) {
    auto s1 = derive_cover_shape(1);
    EXPECT_TRUE(s1.ok());
    EXPECT_EQ(s1.rank, 11);
    EXPECT_EQ(s1.dy2, 4);
    EXPECT_EQ(s1.cover_dim, 32);
    auto s2 = derive_cover_shape(2);
    EXPECT_TRUE(s2.ok());
    EXPECT_EQ(s2.rank, 47);
    EXPECT_EQ(s2.dy2, 16);
    EXPECT_EQ(s2.multiplicity, 2);
    // rank = |C| + (components) * (orbit size)
    for (int n = 1; n <= 3; ++n) {
        auto s = derive_cover_shape(n);
        EXPECT_EQ(s.rank, (1L << (2 * n)) + 1 + s.components * s.orbit) << n;
        EXPECT_EQ(s.orbit * s.dy2, 1L << (2 * n + 1)) << n;
    }
}

TEST(Covers, CandidatesPerBase) {
    std::set<std::vector<Cyc>> rows;
    for (const Cyc& a : {I, -I}) {
        auto base = chi20_base(a);
        EXPECT_EQ(base.tau_sign(), -1);
        auto cs = chi20_cover_candidates(base);
        ASSERT_EQ(cs.size(), 8u);
        std::map<int, int> per_block;
        for (const auto& c : cs) {
            EXPECT_TRUE(c.ok());
            EXPECT_EQ(check_modular_axioms(c.data).ok(), true);
            EXPECT_EQ(conductor(c.data), 16);
            ++per_block[c.block];
            rows.insert(c.t_row());
            for (int i = 0; i < 3; ++i) EXPECT_EQ(c.data.theta[6 + 2 * i], -c.data.theta[5 + 2 * i]);
        }
        EXPECT_EQ(per_block.size(), 2u);
        for (auto [b, n] : per_block) EXPECT_EQ(n, 4);
    }
    EXPECT_EQ(rows.size(), 16u);
}

TEST(Covers, ComponentRelabelingMergesCandidates) {
    // g1, g2, g1+g2 can be permuted freely on the data, so per theta_x the
    // candidates are determined up to isomorphism by the multiset of exponents
    auto cs = chi20_cover_candidates(chi20_base(I));
    int classes = 0;
    std::vector<bool> done(cs.size(), false);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (done[i]) continue;
        ++classes;
        for (std::size_t j = i; j < cs.size(); ++j) {
            auto a = cs[i].twist_exponents, b = cs[j].twist_exponents;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            bool iso = data_isomorphic(cs[i].data, cs[j].data).has_value();
            EXPECT_EQ(iso, a == b);
            if (iso) done[j] = true;
        }
    }
    EXPECT_EQ(classes, 4);
}

TEST(Covers, RejectsBadInput) {
    auto base = chi20_base(I);
    std::vector<Cyc> bad(6, root_of_unity(16, 2));
    EXPECT_THROW(cover_from_twists(base, bad), std::invalid_argument);
    EXPECT_THROW(cover_from_twists(base, {Cyc(1)}), std::invalid_argument);
    auto sym = enumerate_braiding_classes(2, 0)[0];
    ASSERT_TRUE(sym.symmetric);
    std::vector<Cyc> ok;
    for (int i = 0; i < 3; ++i) {
        ok.push_back(root_of_unity(16, 1));
        ok.push_back(root_of_unity(16, 9));
    }
    EXPECT_THROW(cover_from_twists(sym.rep, ok), std::invalid_argument);
    EXPECT_THROW(chi20_base(Cyc(1)), std::invalid_argument);
}

TEST(Covers, LagrangianInProductWithPointedFactor) {
    for (const Cyc& a : {I, -I})
        for (const auto& c : chi20_cover_candidates(chi20_base(a))) {
            auto m = lagrangian_match(c);
            EXPECT_TRUE(m.found);
            EXPECT_EQ(m.lagrangian_count, 1);
            ASSERT_TRUE(m.extraspecial);
            EXPECT_EQ(*m.extraspecial, std::make_pair(2, 1));
        }
}

TEST(Covers, ObstructionReports) {
    auto one = obstruction_report_chi2n0(1);
    EXPECT_EQ(one.candidates, 16);
    for (const auto& s : one.steps) {
        EXPECT_TRUE(s.ok) << s.name;
        EXPECT_FALSE(s.assumed) << s.name;
    }
    for (int n : {2, 3}) {
        auto r = obstruction_report_chi2n0(n);
        int cited = 0;
        for (const auto& s : r.steps) {
            EXPECT_TRUE(s.ok) << s.name;
            cited += s.assumed;
        }
        EXPECT_EQ(cited, 1);
        EXPECT_EQ(r.steps.back().name, "conductor");
        EXPECT_NE(r.conclusion.find("no nondegenerate cover"), std::string::npos);
    }
    EXPECT_NE(std::string(kConductorAxiom).find("MR2333187"), std::string::npos);
}
