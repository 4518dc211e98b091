#include "fuscat/products.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fuscat/parallel.hpp"

namespace fuscat {

DeligneProduct deligne_product(const std::vector<Premodular>& factors) {
    if (factors.empty()) throw std::invalid_argument("deligne_product: no factors");
    const std::size_t m = factors.size();

    // Invertible objects of each factor, unit first.
    std::vector<std::vector<int>> inv(m), rest(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& R = factors[i].ring;
        inv[i].push_back(R.unit);
        for (int x = 0; x < R.rank(); ++x) {
            if (x == R.unit) continue;
            (R.fpdim[x] == Cyc(1) ? inv[i] : rest[i]).push_back(x);
        }
    }

    std::vector<std::vector<int>> invertible_tuples, other_tuples;
    {
        std::vector<int> counter(m, 0);
        for (;;) {
            std::vector<int> t(m);
            for (std::size_t i = 0; i < m; ++i) t[i] = inv[i][counter[i]];
            invertible_tuples.push_back(t);
            std::size_t i = 0;
            while (i < m && ++counter[i] == static_cast<int>(inv[i].size())) counter[i++] = 0;
            if (i == m) break;
        }
        std::vector<int> t(m, 0);
        for (;;) {
            bool all_inv = true;
            for (std::size_t i = 0; i < m; ++i)
                if (!(factors[i].ring.fpdim[t[i]] == Cyc(1))) all_inv = false;
            if (!all_inv) other_tuples.push_back(t);
            std::size_t i = 0;
            while (i < m && ++t[i] == factors[i].rank()) t[i++] = 0;
            if (i == m) break;
        }
    }

    auto label_of = [&](const std::vector<int>& t) {
        std::string s = "(";
        for (std::size_t i = 0; i < m; ++i) {
            if (i) s += ",";
            s += factors[i].ring.labels[t[i]];
        }
        return s + ")";
    };
    auto dim_of = [&](const std::vector<int>& t) {
        Cyc d(1);
        for (std::size_t i = 0; i < m; ++i) d *= factors[i].ring.fpdim[t[i]];
        return d;
    };
    {
        std::vector<std::pair<double, std::string>> keys;
        std::vector<std::size_t> idx(other_tuples.size());
        std::iota(idx.begin(), idx.end(), 0);
        for (const auto& t : other_tuples) keys.emplace_back(dim_of(t).approx().real(), label_of(t));
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (std::abs(keys[a].first - keys[b].first) > 1e-9) return keys[a].first < keys[b].first;
            return keys[a].second < keys[b].second;
        });
        std::vector<std::vector<int>> sorted;
        for (auto i : idx) sorted.push_back(other_tuples[i]);
        other_tuples = std::move(sorted);
    }

    DeligneProduct out;
    out.factors = factors;
    out.parts = invertible_tuples;
    out.parts.insert(out.parts.end(), other_tuples.begin(), other_tuples.end());
    const int r = static_cast<int>(out.parts.size());

    // Position of each tuple, via mixed-radix encoding over full factor ranks.
    std::vector<int> pos;
    {
        std::size_t total = 1;
        for (const auto& f : factors) total *= static_cast<std::size_t>(f.rank());
        pos.assign(total, -1);
    }
    auto encode = [&](const std::vector<int>& t) {
        std::size_t e = 0, stride = 1;
        for (std::size_t i = 0; i < m; ++i) {
            e += static_cast<std::size_t>(t[i]) * stride;
            stride *= static_cast<std::size_t>(factors[i].rank());
        }
        return e;
    };
    for (int x = 0; x < r; ++x) pos[encode(out.parts[x])] = x;

    std::vector<std::string> labels;
    for (const auto& t : out.parts) labels.push_back(label_of(t));
    FusionRing ring(labels, 0);
    for (int x = 0; x < r; ++x) {
        std::vector<int> dual(m);
        for (std::size_t i = 0; i < m; ++i) dual[i] = factors[i].ring.dual[out.parts[x][i]];
        ring.dual[x] = pos[encode(dual)];
        ring.fpdim.push_back(dim_of(out.parts[x]));
    }
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) {
            // Expand the product of the factor-wise fusion products.
            std::vector<std::pair<std::vector<int>, int>> terms{{{}, 1}};
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<std::pair<std::vector<int>, int>> next;
                for (const auto& [t, c] : terms)
                    for (auto [z, n] : factors[i].ring.product(out.parts[x][i], out.parts[y][i])) {
                        auto t2 = t;
                        t2.push_back(z);
                        next.emplace_back(std::move(t2), c * n);
                    }
                terms = std::move(next);
            }
            for (const auto& [t, c] : terms) ring.set(x, y, pos[encode(t)], c);
        }

    std::vector<Cyc> theta(r);
    Matrix S(r, std::vector<Cyc>(r));
    for (int x = 0; x < r; ++x) {
        Cyc t(1);
        for (std::size_t i = 0; i < m; ++i) t *= factors[i].theta[out.parts[x][i]];
        theta[x] = t;
        for (int y = 0; y <= x; ++y) {
            Cyc s(1);
            for (std::size_t i = 0; i < m; ++i) s *= factors[i].S[out.parts[x][i]][out.parts[y][i]];
            S[x][y] = s;
            S[y][x] = s;
        }
    }
    Matrix B = s_from_balancing(ring, theta);
    if (B != S) throw std::logic_error("deligne_product: Kronecker S disagrees with the balancing equation");
    out.data = Premodular{std::move(ring), std::move(theta), std::move(S)};
    return out;
}

DeligneProduct deligne_product(const Premodular& a, const Premodular& b) { return deligne_product({a, b}); }

DeligneProduct ising_product(const std::vector<int>& indices) {
    std::vector<Premodular> factors;
    for (int k : indices) factors.push_back(to_premodular(ising(k)));
    return deligne_product(factors);
}

namespace {

SubPremodular make_sub(const Premodular& P, Subring sub) {
    Premodular data = restrict_premodular(P, sub);
    return {std::move(sub), std::move(data)};
}

}  // namespace

SubPremodular generated_by_max_dim(const Premodular& P) {
    int best = -1;
    double best_d = 0;
    for (int x = 0; x < P.rank(); ++x) {
        double d = P.ring.fpdim[x].approx().real();
        if (best < 0 || d > best_d + 1e-9) {
            best = x;
            best_d = d;
        }
    }
    for (int x = 0; x < P.rank(); ++x)
        if (x != best && P.ring.fpdim[x] == P.ring.fpdim[best])
            throw std::invalid_argument("generated_by_max_dim: maximal dimension is not attained uniquely");
    return make_sub(P, subring_generated(P.ring, {best}));
}

SubPremodular integral_subcat(const Premodular& P) {
    return make_sub(P, distinguished_subrings(P.ring).rational);
}

BraidingData recover_ty_braiding(const DeligneProduct& product, const Subring& sub,
                                 const std::vector<BraidingData>& factor_braidings) {
    const int n = static_cast<int>(factor_braidings.size());
    if (n < 1 || static_cast<int>(product.factors.size()) != n)
        throw std::invalid_argument("recover_ty_braiding: factor data does not match the product");
    const auto& P = product.data;
    const unsigned size = 1u << n;

    // Object with g in the factors of `mask` and the unit elsewhere.
    std::vector<int> obj(size, -1);
    for (int x = 0; x < P.rank(); ++x) {
        unsigned mask = 0;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            const auto& R = product.factors[i].ring;
            int part = product.parts[x][i];
            if (part == R.unit) continue;
            if (R.fpdim[part] == Cyc(1))
                mask |= 1u << i;
            else
                ok = false;
        }
        if (ok) obj[mask] = x;
    }
    std::vector<int> inv, noninv;
    for (int x : sub.indices) (P.ring.fpdim[x] == Cyc(1) ? inv : noninv).push_back(x);
    if (inv.size() != size || noninv.size() != 1)
        throw std::invalid_argument("recover_ty_braiding: subring is not TY-shaped over E_n");
    for (unsigned g = 0; g < size; ++g)
        if (obj[g] < 0 || !sub.contains(obj[g]))
            throw std::invalid_argument("recover_ty_braiding: invertible part of the subring is not E_n");
    const int X = noninv[0];
    {
        auto prod = P.ring.product(X, X);
        bool ok = prod.size() == size;
        for (auto [z, c] : prod)
            if (c != 1 || !(P.ring.fpdim[z] == Cyc(1))) ok = false;
        for (unsigned g = 0; g < size && ok; ++g) {
            auto gx = P.ring.product(obj[g], X);
            if (gx.size() != 1 || gx[0].first != X) ok = false;
        }
        if (!ok) throw std::invalid_argument("recover_ty_braiding: subring does not have TY fusion rules");
    }

    QuadraticForm q(size);
    Cyc tau(1), alpha(1);
    for (int i = 0; i < n; ++i) {
        if (factor_braidings[i].n() != 1) throw std::invalid_argument("recover_ty_braiding: factors must be Ising");
        tau *= factor_braidings[i].tau;
        alpha *= factor_braidings[i].alpha;
    }
    for (unsigned g = 0; g < size; ++g) {
        Cyc v(1);
        for (int i = 0; i < n; ++i)
            if (g >> i & 1u) v *= factor_braidings[i].q[1];
        q[g] = v;
    }
    // The bicharacter is read off from q by polarization.
    Bicharacter chi{n, 1, std::vector<std::vector<int>>(size, std::vector<int>(size, 1))};
    for (unsigned g = 0; g < size; ++g)
        for (unsigned h = 0; h < size; ++h) {
            Cyc c = q[g] * q[h] / q[g ^ h];
            if (c == Cyc(1))
                chi.table[g][h] = 1;
            else if (c == Cyc(-1))
                chi.table[g][h] = -1;
            else
                throw std::invalid_argument("recover_ty_braiding: polarization of q is not +-1 valued");
        }
    if (chi.table != bicharacter(n, 1).table)
        throw std::invalid_argument("recover_ty_braiding: polarization of q is not chi_n^1");
    BraidingData b{bicharacter(n, 1), tau, q, alpha};
    if (!valid_braiding(b)) throw std::invalid_argument("recover_ty_braiding: recovered data violates the invariants");

    // Compare with the product's own twists and S on the subring.
    Premodular expected = to_premodular(b);
    std::vector<int> map(size + 1);
    for (unsigned g = 0; g < size; ++g) map[g] = obj[g];
    map[size] = X;
    for (unsigned a = 0; a <= size; ++a) {
        if (!(P.theta[map[a]] == expected.theta[a]))
            throw std::invalid_argument("recover_ty_braiding: twist of " + P.ring.labels[map[a]] + " disagrees");
        for (unsigned c = 0; c <= size; ++c)
            if (!(P.S[map[a]][map[c]] == expected.S[a][c]))
                throw std::invalid_argument("recover_ty_braiding: S disagrees at (" + P.ring.labels[map[a]] + ", " +
                                            P.ring.labels[map[c]] + ")");
    }
    return b;
}

FactorizationReport verify_ising_factorization(const std::vector<int>& indices) {
    FactorizationReport rep;
    rep.indices = indices;
    const int n = static_cast<int>(indices.size());
    std::vector<BraidingData> fb;
    for (int k : indices) fb.push_back(ising(k));
    try {
        DeligneProduct prod = ising_product(indices);
        SubPremodular gen = generated_by_max_dim(prod.data);
        rep.recovered = recover_ty_braiding(prod, gen.sub, fb);
    } catch (const std::exception& e) {
        rep.detail = e.what();
        return rep;
    }
    Cyc tau(1), alpha(1);
    for (const auto& b : fb) {
        tau *= b.tau;
        alpha *= b.alpha;
    }
    rep.tau_product = rep.recovered.tau == tau;
    rep.alpha_product = rep.recovered.alpha == alpha;
    rep.q_basis = true;
    for (int j = 0; j < n; ++j)
        if (!(rep.recovered.q[1u << j] == fb[j].q[1])) rep.q_basis = false;

    // Expected data built from scratch: q determined by its basis values.
    auto chi = bicharacter(n, 1);
    const QuadraticForm* match = nullptr;
    auto forms = quadratic_forms(chi);
    for (const auto& q : forms) {
        bool ok = true;
        for (int j = 0; j < n; ++j)
            if (!(q[1u << j] == fb[j].q[1])) ok = false;
        if (ok) match = &q;
    }
    if (!match) {
        rep.detail = "no quadratic form with the factors' basis values";
        return rep;
    }
    int ts = tau.approx().real() > 0 ? 1 : -1;
    bool found = false;
    for (int as : {1, -1}) {
        BraidingData e = make_braiding(n, 1, ts, *match, as);
        if (e.alpha == alpha) {
            rep.expected = e;
            found = true;
        }
    }
    if (!found) {
        rep.detail = "product of alphas is not a square root of tau * sum q";
        return rep;
    }
    rep.witness = braiding_equivalent(rep.recovered, rep.expected);
    rep.ok = rep.tau_product && rep.alpha_product && rep.q_basis && rep.witness.has_value();
    if (!rep.ok && rep.detail.empty()) rep.detail = "recovered data differs from the prediction";
    return rep;
}

namespace {

bool pair_less(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    bool da = a.first == a.second, db = b.first == b.second;
    if (da != db) return da;
    return a < b;
}

template <class Equiv>
std::vector<PairClass> group_pairs(const std::vector<std::size_t>& members,
                                   const std::vector<std::pair<int, int>>& pairs, Equiv equiv) {
    std::vector<PairClass> classes;
    std::vector<std::size_t> reps;
    for (std::size_t i : members) {
        bool placed = false;
        for (std::size_t c = 0; c < classes.size() && !placed; ++c)
            if (equiv(i, reps[c])) {
                classes[c].members.push_back(pairs[i]);
                placed = true;
            }
        if (!placed) {
            classes.push_back({{pairs[i]}});
            reps.push_back(i);
        }
    }
    for (auto& c : classes) std::sort(c.members.begin(), c.members.end(), pair_less);
    std::sort(classes.begin(), classes.end(), [](const PairClass& a, const PairClass& b) { return a.rep() < b.rep(); });
    return classes;
}

}  // namespace

IsingProductReport classify_ising_products(int workers) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < 16; j += 2)
        for (int k = j; k < 16; k += 2) pairs.emplace_back(j, k);
    const std::size_t np = pairs.size();
    std::vector<Premodular> products(np);
    std::vector<BraidingData> integral(np);
    std::vector<Cyc> xi(np);
    parallel_for(np, workers, [&](std::size_t i) {
        auto [j, k] = pairs[i];
        DeligneProduct prod = ising_product({j, k});
        auto g = gauss_central_charge(prod.data);
        if (!g.xi) throw std::logic_error("Ising product is degenerate");
        xi[i] = *g.xi;
        SubPremodular q = integral_subcat(prod.data);
        integral[i] = recover_ty_braiding(prod, q.sub, {ising(j), ising(k)});
        products[i] = std::move(prod.data);
    });

    IsingProductReport rep;
    rep.total_pairs = static_cast<int>(np);
    for (long m = 0; m < 8; ++m) {
        XiRow row;
        row.xi = root_of_unity(8, m);
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < np; ++i)
            if (xi[i] == row.xi) {
                members.push_back(i);
                row.pairs.push_back(pairs[i]);
            }
        row.product_classes = group_pairs(members, pairs, [&](std::size_t a, std::size_t b) {
            return data_isomorphic(products[a], products[b]).has_value();
        });
        row.integral_classes = group_pairs(members, pairs, [&](std::size_t a, std::size_t b) {
            return braiding_equivalent(integral[a], integral[b]).has_value();
        });
        rep.total_product_classes += static_cast<int>(row.product_classes.size());
        rep.total_integral_classes += static_cast<int>(row.integral_classes.size());
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

CoverConstruction build_cover_chi_n1(const BraidingData& b) {
    if (b.k() != 1) throw std::invalid_argument("build_cover_chi_n1: braiding must be over chi_n^1");
    const int n = b.n();
    CoverConstruction out;
    const auto catalog = ising_catalog();
    Cyc rest(1);
    for (int j = 0; j < n; ++j) {
        Cyc tau_j = j + 1 < n ? ty_tau(1, 1) : b.tau / rest;
        rest *= tau_j;
        out.taus.push_back(tau_j);
        const Cyc& qj = b.q[1u << j];
        int chosen = -1;
        for (const auto& e : catalog)
            if (e.data.tau == tau_j && e.data.q[1] == qj && e.data.epsilon() == 1) chosen = e.index;
        if (chosen < 0) throw std::logic_error("build_cover_chi_n1: no Ising factor with the required tau and q");
        out.indices.push_back(chosen);
    }
    Cyc alpha(1);
    for (int k : out.indices) alpha *= ising(k).alpha;
    if (!(alpha == b.alpha)) {
        // alpha_1 -> -alpha_1 is the Ising factor with index shifted by 8.
        out.indices[0] = (out.indices[0] + 8) % 16;
    }
    out.verification = verify_ising_factorization(out.indices);
    out.equivalent_to_input =
        out.verification.ok && braiding_equivalent(out.verification.recovered, b).has_value();
    return out;
}

}  // namespace fuscat
