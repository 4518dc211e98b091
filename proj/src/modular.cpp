#include "fuscat/modular.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fuscat {

Cyc Premodular::dim() const {
    Cyc total;
    for (const auto& d : ring.fpdim) total += d * d;
    return total;
}

Matrix s_from_balancing(const FusionRing& ring, const std::vector<Cyc>& theta) {
    const int r = ring.rank();
    auto d = dims_of(ring);
    std::vector<Cyc> inv(r), td(r);
    for (int x = 0; x < r; ++x) {
        inv[x] = theta[x].inverse();
        td[x] = theta[x] * d[x];
    }
    Matrix S(r, std::vector<Cyc>(r));
    for (int x = 0; x < r; ++x)
        for (int y = x; y < r; ++y) {
            Cyc sum;
            for (auto [z, n] : ring.product(x, y)) sum += Cyc(static_cast<long>(n)) * td[z];
            S[x][y] = inv[x] * inv[y] * sum;
            S[y][x] = S[x][y];
        }
    return S;
}

Premodular make_premodular(FusionRing ring, std::vector<Cyc> theta) {
    if (static_cast<int>(theta.size()) != ring.rank()) throw std::invalid_argument("twist vector has wrong length");
    if (!ring.has_dims()) ring.fpdim = fp_dims(ring);
    Premodular P{std::move(ring), std::move(theta), {}};
    P.S = s_from_balancing(P.ring, P.theta);
    return P;
}

std::optional<std::vector<int>> verlinde_coefficients(const Matrix& S, int unit, std::vector<int>* where) {
    const int r = static_cast<int>(S.size());
    Cyc dim;
    for (int x = 0; x < r; ++x) dim += S[unit][x] * S[unit][x].conj();
    if (!dim.is_rational()) return std::nullopt;
    Rational inv_dim = 1 / dim.rational_value();
    Matrix A(r, std::vector<Cyc>(r)), C(r, std::vector<Cyc>(r));
    for (int x = 0; x < r; ++x) {
        Cyc dinv = S[unit][x].inverse();
        for (int y = 0; y < r; ++y) {
            A[x][y] = S[x][y] * dinv;
            C[x][y] = S[x][y].conj();
        }
    }
    std::vector<int> N(static_cast<std::size_t>(r) * r * r, 0);
    std::vector<Cyc> P(r);
    for (int y = 0; y < r; ++y)
        for (int z = y; z < r; ++z) {
            for (int x = 0; x < r; ++x) P[x] = A[x][y] * S[x][z];
            for (int w = 0; w < r; ++w) {
                Cyc sum;
                for (int x = 0; x < r; ++x) sum += P[x] * C[x][w];
                bool ok = sum.is_rational();
                Rational v;
                if (ok) {
                    v = sum.rational_value() * inv_dim;
                    ok = v.get_den() == 1 && sgn(v) >= 0 && v.get_num().fits_sint_p();
                }
                if (!ok) {
                    if (where) *where = {y, z, w};
                    return std::nullopt;
                }
                int n = static_cast<int>(v.get_num().get_si());
                N[(static_cast<std::size_t>(y) * r + z) * r + w] = n;
                N[(static_cast<std::size_t>(z) * r + y) * r + w] = n;
            }
        }
    return N;
}

ModularReport check_modular_axioms(const Premodular& P) {
    ModularReport rep;
    const int r = P.rank();
    const int u = P.ring.unit;
    auto fail = [&](bool& flag, std::vector<int> where, const std::string& msg) {
        flag = false;
        if (rep.counterexample.empty()) {
            rep.counterexample = std::move(where);
            rep.detail = msg;
        }
    };

    if (!(P.theta[u] == Cyc(1))) fail(rep.twists_valid, {u}, "twist of the unit is not 1");
    for (int x = 0; x < r && rep.twists_valid; ++x) {
        if (!as_root_of_unity(P.theta[x])) fail(rep.twists_valid, {x}, "twist is not a root of unity");
        else if (!(P.theta[P.ring.dual[x]] == P.theta[x])) fail(rep.twists_valid, {x}, "twist differs from twist of dual");
    }
    for (int x = 0; x < r && rep.symmetric; ++x)
        for (int y = x + 1; y < r && rep.symmetric; ++y)
            if (!(P.S[x][y] == P.S[y][x])) fail(rep.symmetric, {x, y}, "S is not symmetric");
    auto d = dims_of(P.ring);
    for (int x = 0; x < r && rep.dims_match; ++x)
        if (!(P.S[u][x] == d[x])) fail(rep.dims_match, {x}, "S_{1,x} differs from d_x");
    {
        Matrix B = s_from_balancing(P.ring, P.theta);
        for (int x = 0; x < r && rep.balancing; ++x)
            for (int y = 0; y < r && rep.balancing; ++y)
                if (!(B[x][y] == P.S[x][y])) fail(rep.balancing, {x, y}, "S disagrees with the balancing equation");
    }
    Cyc dim;
    for (const auto& v : d) dim += v * v;
    {
        std::vector<std::vector<Cyc>> C(r, std::vector<Cyc>(r));
        for (int x = 0; x < r; ++x)
            for (int z = 0; z < r; ++z) C[x][z] = P.S[x][z].conj();
        for (int x = 0; x < r && rep.unitary; ++x)
            for (int y = x; y < r && rep.unitary; ++y) {
                Cyc sum;
                for (int z = 0; z < r; ++z) sum += P.S[x][z] * C[y][z];
                if (!(sum == (x == y ? dim : Cyc()))) fail(rep.unitary, {x, y}, "orthogonality fails");
            }
    }
    if (!rep.unitary) {
        rep.verlinde_integral = false;
        return rep;
    }
    std::vector<int> where;
    auto N = verlinde_coefficients(P.S, u, &where);
    if (!N) {
        fail(rep.verlinde_integral, where, "Verlinde coefficient is not a nonnegative integer");
    } else {
        for (int x = 0; x < r && rep.verlinde_integral; ++x)
            for (int y = 0; y < r && rep.verlinde_integral; ++y)
                for (int z = 0; z < r && rep.verlinde_integral; ++z)
                    if ((*N)[(static_cast<std::size_t>(x) * r + y) * r + z] != P.ring.N(x, y, z))
                        fail(rep.verlinde_integral, {x, y, z}, "Verlinde coefficient differs from N");
    }
    return rep;
}

bool muger_centralizes(const Premodular& P, int x, int y) {
    return P.S[x][y] == P.ring.fpdim[x] * P.ring.fpdim[y];
}

Subring centralizer(const Premodular& P, const Subring& sub) {
    Subring out;
    for (int x = 0; x < P.rank(); ++x) {
        bool all = std::all_of(sub.indices.begin(), sub.indices.end(),
                               [&](int s) { return muger_centralizes(P, x, s); });
        if (all) out.indices.push_back(x);
    }
    return out;
}

Subring symmetric_center(const Premodular& P) { return centralizer(P, whole_ring(P.ring)); }

bool is_nondegenerate(const Premodular& P) { return symmetric_center(P).size() == 1; }

bool centralizer_dimension_identity(const Premodular& P, const Subring& sub) {
    Subring c = centralizer(P, sub);
    Subring z = symmetric_center(P);
    Cyc lhs = subring_dim(P.ring, sub) * subring_dim(P.ring, c);
    Cyc rhs = P.dim() * subring_dim(P.ring, intersect(sub, z));
    return lhs == rhs;
}

Premodular restrict_premodular(const Premodular& P, const Subring& sub) {
    Premodular out;
    out.ring = restrict_ring(P.ring, sub);
    for (int x : sub.indices) {
        out.theta.push_back(P.theta[x]);
        std::vector<Cyc> row;
        for (int y : sub.indices) row.push_back(P.S[x][y]);
        out.S.push_back(std::move(row));
    }
    return out;
}

GaussSums gauss_central_charge(const Premodular& P) {
    GaussSums g;
    for (int x = 0; x < P.rank(); ++x) {
        Cyc d2 = P.ring.fpdim[x] * P.ring.fpdim[x];
        g.tau_plus += d2 * P.theta[x];
        g.tau_minus += d2 * P.theta[x].inverse();
    }
    Cyc dim = P.dim();
    if (dim.is_rational() && g.tau_plus * g.tau_plus.conj() == dim) g.xi = g.tau_plus / sqrt_rational(dim.rational_value());
    return g;
}

long conductor(const Premodular& P) {
    long n = 1;
    for (const auto& t : P.theta) {
        auto r = as_root_of_unity(t);
        if (!r) throw std::invalid_argument("twist is not a root of unity");
        n = std::lcm(n, r->order);
    }
    return n;
}

namespace {

struct Fingerprint {
    Cyc d;
    Cyc theta;
    bool self_dual;
    std::vector<Cyc> row;

    bool operator==(const Fingerprint& o) const {
        return self_dual == o.self_dual && d == o.d && theta == o.theta && row == o.row;
    }
    bool operator<(const Fingerprint& o) const {
        if (!(d == o.d)) return d < o.d;
        if (!(theta == o.theta)) return theta < o.theta;
        if (self_dual != o.self_dual) return self_dual < o.self_dual;
        return row < o.row;
    }
};

std::vector<Fingerprint> fingerprints(const Premodular& P) {
    std::vector<Fingerprint> out;
    for (int x = 0; x < P.rank(); ++x) {
        Fingerprint f{P.ring.fpdim[x], P.theta[x], P.ring.dual[x] == x, P.S[x]};
        std::sort(f.row.begin(), f.row.end());
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

std::optional<std::vector<int>> data_isomorphic(const Premodular& a, const Premodular& b) {
    const int r = a.rank();
    if (b.rank() != r) return std::nullopt;
    auto fa = fingerprints(a), fb = fingerprints(b);
    {
        auto sa = fa, sb = fb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (!(sa == sb)) return std::nullopt;
    }
    std::vector<std::vector<int>> cand(r);
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            if (fa[x] == fb[y]) cand[x].push_back(y);
    cand[a.ring.unit] = {b.ring.unit};
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return cand[x].size() < cand[y].size(); });
    std::vector<int> f(r, -1), used(r, 0);
    std::function<bool(int)> search = [&](int k) -> bool {
        if (k == r) return true;
        int x = order[k];
        for (int y : cand[x]) {
            if (used[y]) continue;
            int xd = a.ring.dual[x];
            if (f[xd] >= 0 && f[xd] != b.ring.dual[y]) continue;
            if (xd == x && b.ring.dual[y] != y) continue;
            bool ok = a.S[x][x] == b.S[y][y];
            for (int i = 0; i < k && ok; ++i) {
                int u = order[i];
                if (!(a.S[x][u] == b.S[y][f[u]])) ok = false;
            }
            if (!ok) continue;
            f[x] = y;
            used[y] = 1;
            if (search(k + 1)) return true;
            f[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    if (!search(0)) return std::nullopt;
    return f;
}

TannakianReport tannakian_and_lagrangian(const Premodular& P, const Subring& sub) {
    TannakianReport rep;
    bool trivial_twists = std::all_of(sub.indices.begin(), sub.indices.end(),
                                      [&](int x) { return P.theta[x] == Cyc(1); });
    bool isotropic = true;
    for (int x : sub.indices)
        for (int y : sub.indices)
            if (!muger_centralizes(P, x, y)) isotropic = false;
    rep.is_tannakian_candidate = trivial_twists && isotropic;
    Cyc ds = subring_dim(P.ring, sub);
    rep.is_lagrangian = rep.is_tannakian_candidate && ds * ds == P.dim();
    return rep;
}

CondensationDims condensation_dims(const Premodular& P, const Subring& sub) {
    if (!tannakian_and_lagrangian(P, sub).is_tannakian_candidate)
        throw std::invalid_argument("subring is not a Tannakian candidate");
    Cyc ds = subring_dim(P.ring, sub);
    CondensationDims out;
    out.quotient_dim = P.dim() / (ds * ds);
    for (int x : centralizer(P, sub).indices) out.free_module_dims.emplace_back(x, ds * P.ring.fpdim[x]);
    return out;
}

bool divides_in_z_sqrt2(const Cyc& b, const Cyc& a) {
    if (b.is_zero()) return false;
    auto pq = as_quadratic_sqrt2(a / b);
    return pq && pq->first.get_den() == 1 && pq->second.get_den() == 1;
}

bool rational_divisibility_check(const std::vector<Cyc>& dims) {
    Cyc rational, total;
    for (const auto& d : dims) {
        Cyc d2 = d * d;
        total += d2;
        if (d.is_rational()) rational += d2;
    }
    return divides_in_z_sqrt2(rational, total);
}

}  // namespace fuscat
