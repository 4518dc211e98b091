#include "fuscat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>

#include "fuscat/covers.hpp"
#include "fuscat/extraspecial.hpp"
#include "fuscat/parallel.hpp"
#include "fuscat/products.hpp"

namespace fuscat {

namespace {

struct Tally {
    SuiteResult r;
    void check(bool ok, const std::string& what) {
        ++r.checked;
        if (!ok) {
            if (r.violations == 0) r.detail = what;
            ++r.violations;
        }
    }
};

SuiteResult timed(const std::string& name, const std::function<void(Tally&)>& body) {
    Tally t;
    t.r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
        body(t);
    } catch (const std::exception& e) {
        t.check(false, std::string("exception: ") + e.what());
    }
    t.r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return t.r;
}

const int kIsing[] = {1, 3, 5, 7, 9, 11, 13, 15};

Cyc random_cyc(std::mt19937_64& rng) {
    static const long conductors[] = {1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24};
    long n = conductors[rng() % std::size(conductors)];
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    std::vector<Rational> c(n);
    for (auto& q : c) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
        if (rng() % 3 == 0) q = 0;
    }
    return Cyc::from_coeffs(n, c);
}

Premodular permuted(const Premodular& P, const std::vector<int>& f) {
    // f: old index -> new index
    const int r = P.rank();
    Premodular Q;
    std::vector<std::string> labels(r);
    for (int x = 0; x < r; ++x) labels[f[x]] = P.ring.labels[x];
    Q.ring = FusionRing(labels, f[P.ring.unit]);
    Q.ring.fpdim.assign(r, Cyc());
    Q.theta.assign(r, Cyc());
    Q.S.assign(r, std::vector<Cyc>(r));
    for (int x = 0; x < r; ++x) {
        Q.ring.dual[f[x]] = f[P.ring.dual[x]];
        Q.ring.fpdim[f[x]] = P.ring.fpdim[x];
        Q.theta[f[x]] = P.theta[x];
        for (int y = 0; y < r; ++y) {
            Q.S[f[x]][f[y]] = P.S[x][y];
            for (int z = 0; z < r; ++z) Q.ring.set(f[x], f[y], f[z], P.ring.N(x, y, z));
        }
    }
    return Q;
}

std::vector<Premodular> nondegenerate_corpus() {
    std::vector<Premodular> out;
    for (int j : kIsing) out.push_back(to_premodular(ising(j)));
    for (auto [j, k] : std::vector<std::pair<int, int>>{{1, 1}, {1, 7}, {3, 5}, {1, 15}, {5, 13}})
        out.push_back(ising_product({j, k}).data);
    const Cyc I = root_of_unity(4, 1);
    for (const Cyc& a : {I, -I}) {
        auto cs = chi20_cover_candidates(chi20_base(a));
        out.push_back(cs.front().data);
        out.push_back(cs.back().data);
    }
    for (const char* g : {"Z2", "E2", "S3", "D4", "Q8", "A4"}) out.push_back(double_untwisted(catalog_group(g)).data);
    return out;
}

}  // namespace

SuiteResult suite_cyc_field(std::uint64_t seed, int samples) {
    return timed("cyc_field_axioms", [&](Tally& t) {
        std::mt19937_64 rng(seed);
        static const long ks[] = {11, 13, 17, 19, 23};
        for (int i = 0; i < samples; ++i) {
            Cyc a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
            std::string w = "sample " + std::to_string(i) + ": " + a.str() + ", " + b.str() + ", " + c.str();
            bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
                      a * (b + c) == a * b + a * c && a + Cyc(0) == a && a * Cyc(1) == a && (a - a).is_zero() &&
                      (a * b).conj() == a.conj() * b.conj() && parse_cyc(a.str()) == a;
            long k = ks[rng() % std::size(ks)];
            ok = ok && (a * b).galois(k) == a.galois(k) * b.galois(k) && (a + b).galois(k) == a.galois(k) + b.galois(k);
            if (!a.is_zero()) ok = ok && a * a.inverse() == Cyc(1) && (b / a) * a == b;
            t.check(ok, w);
        }
    });
}

SuiteResult suite_xi_multiplicative() {
    return timed("xi_multiplicative", [](Tally& t) {
        std::vector<Cyc> xi;
        for (int j : kIsing) xi.push_back(*gauss_central_charge(to_premodular(ising(j))).xi);
        for (int a = 0; a < 8; ++a)
            for (int b = a; b < 8; ++b) {
                auto g = gauss_central_charge(ising_product({kIsing[a], kIsing[b]}).data);
                t.check(g.xi && *g.xi == xi[a] * xi[b],
                        "I" + std::to_string(kIsing[a]) + " x I" + std::to_string(kIsing[b]));
            }
    });
}

SuiteResult suite_isomorphism_laws(std::uint64_t seed) {
    return timed("isomorphism_laws", [&](Tally& t) {
        std::mt19937_64 rng(seed);
        std::vector<Premodular> corpus;
        for (auto [j, k] : std::vector<std::pair<int, int>>{{1, 5}, {3, 11}, {7, 7}, {9, 13}, {1, 9}, {5, 5}, {13, 13}})
            corpus.push_back(ising_product({j, k}).data);
        const std::size_t base = corpus.size();
        for (std::size_t i = 0; i < base; ++i) {
            std::vector<int> f(corpus[i].rank());
            std::iota(f.begin(), f.end(), 0);
            std::shuffle(f.begin(), f.end(), rng);
            corpus.push_back(permuted(corpus[i], f));
        }
        const std::size_t m = corpus.size();
        std::vector<std::vector<char>> iso(m, std::vector<char>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) iso[i][j] = data_isomorphic(corpus[i], corpus[j]).has_value();
        for (std::size_t i = 0; i < m; ++i) {
            t.check(iso[i][i], "reflexive " + std::to_string(i));
            if (i < base) t.check(iso[i][i + base], "relabelled copy " + std::to_string(i));
            for (std::size_t j = 0; j < m; ++j) {
                t.check(iso[i][j] == iso[j][i], "symmetric " + std::to_string(i) + "," + std::to_string(j));
                for (std::size_t k = 0; k < m; ++k)
                    if (iso[i][j] && iso[j][k]) t.check(iso[i][k], "transitive");
            }
        }
    });
}

SuiteResult suite_centralizer_identity() {
    return timed("centralizer_identity", [](Tally& t) {
        for (const auto& P : nondegenerate_corpus()) {
            t.check(is_nondegenerate(P), "corpus member is degenerate");
            std::vector<Subring> subs;
            for (int x = 0; x < P.rank(); ++x) subs.push_back(subring_generated(P.ring, {x}));
            auto ds = distinguished_subrings(P.ring);
            subs.insert(subs.end(), {ds.pointed, ds.adjoint, ds.rational});
            for (const auto& s : subs) t.check(centralizer_dimension_identity(P, s), "subring of rank " + std::to_string(P.rank()));
        }
        // premodular but degenerate: the TY braidings at n = 2
        for (int k : {0, 1})
            for (const auto& cls : enumerate_braiding_classes(2, k)) {
                Premodular P = to_premodular(cls.rep);
                for (int x = 0; x < P.rank(); ++x)
                    t.check(centralizer_dimension_identity(P, subring_generated(P.ring, {x})), cls.name);
            }
    });
}

SuiteResult suite_factorization(std::uint64_t seed, int triples) {
    return timed("factorization", [&](Tally& t) {
        auto label = [](const std::vector<int>& v) {
            std::string s;
            for (int k : v) s += (s.empty() ? "I" : " x I") + std::to_string(k);
            return s;
        };
        for (int a = 0; a < 8; ++a)
            for (int b = a; b < 8; ++b) {
                auto r = verify_ising_factorization({kIsing[a], kIsing[b]});
                t.check(r.ok, label(r.indices) + ": " + r.detail);
            }
        std::mt19937_64 rng(seed);
        for (int i = 0; i < triples; ++i) {
            std::vector<int> v;
            for (int j = 0; j < 3; ++j) v.push_back(kIsing[rng() % 8]);
            auto r = verify_ising_factorization(v);
            t.check(r.ok, label(v) + ": " + r.detail);
        }
    });
}

SuiteResult suite_ring_axioms() {
    return timed("ring_axioms", [](Tally& t) {
        for (int n = 1; n <= 4; ++n) t.check(validate_ring(ty_ring(n)).ok(), "TY ring n=" + std::to_string(n));
        for (auto [p, n] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
            auto R = extraspecial_ring(p, n);
            std::string w = "extraspecial p=" + std::to_string(p) + " n=" + std::to_string(n);
            t.check(validate_ring(R).ok(), w);
            auto es = is_extraspecial_charring(R);
            t.check(es && es->first == p && es->second == n, w + " recognizer");
        }
        t.check(!is_extraspecial_charring(pointed_ring(AbelianGroup{{2, 2}})).has_value(), "pointed ring recognized");
    });
}

SuiteResult suite_doubles() {
    return timed("doubles", [](Tally& t) {
        for (const char* g : {"Z2", "E2", "S3", "D4", "Q8", "A4"}) {
            const auto& G = catalog_group(g);
            auto D = double_untwisted(G);
            auto mr = check_modular_axioms(D.data);
            t.check(mr.ok(), std::string(g) + ": " + mr.detail);
            t.check(is_nondegenerate(D.data), std::string(g) + " degenerate");
            auto gs = gauss_central_charge(D.data);
            t.check(gs.xi && *gs.xi == Cyc(1), std::string(g) + " central charge");
            t.check(D.data.dim() == Cyc(static_cast<long>(G.order()) * G.order()), std::string(g) + " dimension");
            // objects over the identity class form Rep(G)
            Subring reps;
            for (int i = 0; i < D.data.rank(); ++i)
                if (G.centralizers[D.simples[i].class_index].rep == G.identity()) reps.indices.push_back(i);
            t.check(ring_isomorphism(restrict_ring(D.data.ring, reps), rep_ring(G)).has_value(), std::string(g) + " Rep(G)");
        }
    });
}

SuiteResult suite_braidings() {
    return timed("braidings", [](Tally& t) {
        struct Case {
            int n, k;
            std::size_t classes;
        };
        for (auto c : std::vector<Case>{{1, 1, 8}, {2, 0, 8}, {2, 1, 12}, {3, 1, 0}}) {
            auto cls = enumerate_braiding_classes(c.n, c.k);
            std::string w = "n=" + std::to_string(c.n) + " k=" + std::to_string(c.k);
            if (c.classes) t.check(cls.size() == c.classes, w + " class count");
            std::size_t members = 0;
            for (const auto& cl : cls) {
                members += cl.members.size();
                for (const auto& m : cl.members) {
                    t.check(valid_braiding(m), w + " invalid member");
                    t.check(braiding_equivalent(m, cl.rep).has_value(), w + " member not equivalent to rep");
                }
            }
            t.check(members == (4u << c.n), w + " member total");
            for (std::size_t i = 0; i < cls.size(); ++i)
                for (std::size_t j = i + 1; j < cls.size(); ++j)
                    t.check(!braiding_equivalent(cls[i].rep, cls[j].rep), w + " reps equivalent");
        }
        for (const auto& e : ising_catalog()) {
            auto mr = check_modular_axioms(to_premodular(e.data));
            t.check(mr.ok(), e.name + ": " + mr.detail);
        }
    });
}

SuiteResult suite_obstruction() {
    return timed("obstruction", [](Tally& t) {
        for (int n = 1; n <= 3; ++n) {
            auto r = obstruction_report_chi2n0(n);
            for (const auto& s : r.steps) t.check(s.ok, "n=" + std::to_string(n) + " " + s.name);
            if (n == 1) t.check(r.candidates == 16, "n=1 candidate count");
        }
    });
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int workers) {
    std::vector<std::function<SuiteResult()>> jobs = {
        [&] { return suite_cyc_field(seed); },
        [] { return suite_xi_multiplicative(); },
        [&] { return suite_isomorphism_laws(seed); },
        [] { return suite_centralizer_identity(); },
        [&] { return suite_factorization(seed); },
        [] { return suite_ring_axioms(); },
        [] { return suite_doubles(); },
        [] { return suite_braidings(); },
        [] { return suite_obstruction(); },
    };
    std::vector<SuiteResult> out(jobs.size());
    parallel_for(jobs.size(), workers, [&](std::size_t i) { out[i] = jobs[i](); });
    return out;
}

}  // namespace fuscat
