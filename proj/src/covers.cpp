#include "fuscat/covers.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "fuscat/extraspecial.hpp"
#include "fuscat/products.hpp"

namespace fuscat {

const char* const kConductorAxiom =
    "Z(Vec_G^w) has Frobenius-Schur exponent at most 8 for every extraspecial 2-group G of order > 8 "
    "(MR2333187, Theorem 4.7)";

namespace {

long pow2(int e) { return 1L << e; }

TraceStep step(std::string name, std::string statement, bool ok, bool assumed = false) {
    return TraceStep{std::move(name), std::move(statement), ok, assumed};
}

// A nonsymmetric chi_{2n}^0 braiding, if any.
std::optional<BraidingData> nonsymmetric_chi0(int n, bool* all_twists_pm_i) {
    auto chi = bicharacter(2 * n, 0);
    std::optional<BraidingData> found;
    bool ok = true;
    for (const auto& q : quadratic_forms(chi))
        for (int ts : {1, -1})
            for (int as : {1, -1}) {
                auto b = make_braiding(2 * n, 0, ts, q, as);
                bool sym = ty_symmetric_center(b).size() == (1 << (2 * n)) + 1;
                Cyc tx = b.theta_x();
                if (sym != (tx * tx == Cyc(1))) ok = false;
                if (!sym && !(tx == root_of_unity(4, 1) || tx == root_of_unity(4, 3))) ok = false;
                if (!sym && !found) found = b;
            }
    if (all_twists_pm_i) *all_twists_pm_i = ok;
    return found;
}

}  // namespace

bool CoverShape::ok() const {
    return std::all_of(steps.begin(), steps.end(), [](const TraceStep& s) { return s.ok; });
}

CoverShape derive_cover_shape(int n) {
    if (n < 1) throw std::invalid_argument("derive_cover_shape: n must be >= 1");
    if (n > 4) throw std::invalid_argument("derive_cover_shape: n > 4 not supported");
    CoverShape s;
    s.n = n;
    s.base_dim = pow2(2 * n + 1);
    s.pointed_dim = pow2(2 * n);
    s.cover_dim = s.base_dim * s.pointed_dim;

    bool pm_i = false;
    auto b = nonsymmetric_chi0(n, &pm_i);
    s.steps.push_back(step("nonsymmetric_twist",
                           "chi_" + std::to_string(2 * n) + "^0 is nonsymmetric iff theta_x = +-i", pm_i && b));
    if (!b) return s;

    Subring center = ty_symmetric_center(*b);
    Subring pointed;
    for (int g = 0; g < (1 << (2 * n)); ++g) pointed.indices.push_back(g);
    s.steps.push_back(step("muger_center", "the symmetric center is the pointed part, FPdim " + std::to_string(s.pointed_dim),
                           center == pointed));
    s.steps.push_back(step("cover_dim",
                           "FPdim(C) FPdim(C') = " + std::to_string(s.base_dim) + " * " + std::to_string(s.pointed_dim) +
                               " = 2^" + std::to_string(4 * n + 1),
                           s.cover_dim == pow2(4 * n + 1)));

    // S_{x,x} = theta_x^-2 sum_g theta_g d_g.
    Cyc tx = b->theta_x();
    Cyc sum_theta;
    for (const auto& qg : b->q) sum_theta += qg * qg;
    Cyc sxx = tx.inverse() * tx.inverse() * sum_theta;
    Cyc sxx2 = sxx * sxx.conj();
    s.steps.push_back(step("s_xx", "|S_{x,x}|^2 = " + sxx2.str(), sxx2 == Cyc(pow2(4 * n))));
    bool orth = pow2(2 * n) * pow2(2 * n) + sxx2.rational_value() == Rational(s.cover_dim);
    s.steps.push_back(step("x_orthogonality", "2^{2n} 2^{2n} + |S_{x,x}|^2 = FPdim(D), so S_{x,y} = 0 off C", orth));

    // phi_x(x) = S_{x,x} / d_x = -2^n gives N^x_{y,y*} = d_y^2 / 2^{n+1}.
    Cyc phix = sxx / Cyc(pow2(n));
    s.steps.push_back(step("multiplicity", "S_{x,x}/d_x = " + phix.str() + ", so N^x_{y,y*} = d_y^2/2^(n+1)",
                           phix == Cyc(-pow2(n))));

    for (int e = n + 1; e <= 2 * n; ++e) s.dy2_candidates.push_back(pow2(e));
    s.steps.push_back(step("orbit", "orbit of y has 2^(2n+1)/d_y^2 > 1 elements and N^x_{y,y*} is an integer",
                           !s.dy2_candidates.empty()));

    // Twists off C: (1 + theta_x) / theta_y^2 real forces a primitive 16th root.
    bool twist16 = true;
    for (long tk : {1L, 3L}) {
        Cyc t = root_of_unity(4, tk);
        int real_count = 0;
        for (long a = 0; a < 16; ++a) {
            Cyc v = (Cyc(1) + t) / pow(root_of_unity(16, a), 2);
            if (!v.is_real()) continue;
            ++real_count;
            if (a % 2 == 0) twist16 = false;
        }
        if (real_count != 4) twist16 = false;
    }
    s.steps.push_back(step("twist_16th", "S_{y,y*} real forces theta_y to be a primitive 16th root of unity", twist16));

    std::vector<Cyc> quotient = {Cyc(1), Cyc(1), Cyc(2), sqrt2()};
    Cyc qdim;
    for (const auto& d : quotient) qdim += d * d;
    bool integral = !rational_divisibility_check(quotient) && qdim == Cyc(8);
    s.steps.push_back(step("integrality", "dimensions 1, 1, 2, sqrt2 are impossible (6 does not divide 8)", integral));
    for (long d : s.dy2_candidates)
        if ((__builtin_ctzl(d) % 2) == 0) s.dy2_integral.push_back(d);

    if (!s.dy2_integral.empty()) {
        s.dy2 = s.dy2_integral.front();
        s.orbit = pow2(2 * n + 1) / s.dy2;
        s.components = pow2(2 * n) - 1;
        s.rank = pow2(2 * n) + 1 + s.components * s.orbit;
        s.multiplicity = s.dy2 / pow2(n + 1);
    }
    s.steps.push_back(step("shape", "rank " + std::to_string(s.rank) + ", d_y^2 = " + std::to_string(s.dy2),
                           !s.dy2_integral.empty()));
    return s;
}

std::vector<Cyc> CoverCandidate::t_row() const {
    std::vector<Cyc> row;
    for (int i = 4; i < 11; ++i) row.push_back(data.theta[i]);
    return row;
}

CoverCandidate cover_from_twists(const BraidingData& base, const std::vector<Cyc>& theta_y) {
    if (base.n() != 2 || base.k() != 0) throw std::invalid_argument("cover_from_twists: base must be chi_2^0");
    if (theta_y.size() != 6) throw std::invalid_argument("cover_from_twists: need six twists");
    Cyc tx = base.theta_x();
    const Cyc I = root_of_unity(4, 1);
    if (!(tx == I || tx == -I)) throw std::invalid_argument("cover_from_twists: base is symmetric");

    CoverCandidate c;
    c.base = base;
    Premodular bp = to_premodular(base);
    // zeta8^(-i theta_x) with -i theta_x = +-1
    long ex = (tx == I) ? 1 : -1;
    Cyc z8 = root_of_unity(8, ex);
    for (int i = 0; i < 3; ++i) {
        Cyc e = theta_y[2 * i].inverse() * theta_y[2 * i].inverse() * z8;
        if (e == Cyc(1))
            c.eps.push_back(1);
        else if (e == Cyc(-1))
            c.eps.push_back(-1);
        else
            throw std::invalid_argument("cover_from_twists: theta_y^-2 zeta8^(-i theta_x) = " + e.str() + " is not a sign");
        auto r = as_root_of_unity(theta_y[2 * i]);
        c.twist_exponents.push_back(r && r->order == 16 ? r->exponent : -1);
    }

    std::vector<std::string> labels = bp.ring.labels;
    for (int i = 1; i <= 3; ++i) {
        labels.push_back("y" + std::to_string(i));
        labels.push_back("y" + std::to_string(i) + "'");
    }
    const int r = 11;
    Matrix S(r, std::vector<Cyc>(r));
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) S[a][b] = bp.S[a][b];
    Cyc s22 = Cyc(2) * sqrt2();
    for (int i = 0; i < 3; ++i) {
        unsigned fixer = static_cast<unsigned>(i + 1);
        for (int half = 0; half < 2; ++half) {
            int y = 5 + 2 * i + half;
            for (unsigned g = 0; g < 4; ++g) {
                Cyc v = (g == 0 || g == fixer) ? Cyc(2) : Cyc(-2);
                S[g][y] = S[y][g] = v;
            }
            S[4][y] = S[y][4] = Cyc(0);
            for (int half2 = 0; half2 < 2; ++half2) {
                int y2 = 5 + 2 * i + half2;
                Cyc v = Cyc(static_cast<long>(c.eps[i])) * s22;
                S[y][y2] = half == half2 ? v : -v;
            }
        }
    }

    std::vector<Cyc> theta = bp.theta;
    theta.insert(theta.end(), theta_y.begin(), theta_y.end());

    FusionRing ring(labels, 0);
    std::vector<int> where;
    auto N = verlinde_coefficients(S, 0, &where);
    c.data.theta = theta;
    c.data.S = S;
    if (N) {
        ring.mult = *N;
        for (int x = 0; x < r; ++x)
            for (int y = 0; y < r; ++y)
                if (ring.N(x, y, 0) == 1) ring.dual[x] = y;
        for (int x = 0; x < r; ++x) ring.fpdim.push_back(S[0][x]);
        c.data.ring = ring;
        c.report = check_modular_axioms(c.data);
    } else {
        ring.fpdim = S[0];
        c.data.ring = ring;
        c.report.verlinde_integral = false;
        c.report.counterexample = where;
        c.report.detail = "Verlinde coefficients are not nonnegative integers";
    }

    c.twist_pairing = true;
    for (int i = 0; i < 3; ++i)
        if (!(theta_y[2 * i] + theta_y[2 * i + 1]).is_zero()) c.twist_pairing = false;

    if (N) {
        Subring base_sub{{0, 1, 2, 3, 4}};
        Premodular restricted = restrict_premodular(c.data, base_sub);
        c.restriction = restricted.theta == bp.theta && restricted.S == bp.S && restricted.ring.mult == bp.ring.mult;
    }

    Cyc tp;
    for (int x = 0; x < r; ++x) tp += S[0][x] * S[0][x] * theta[x];
    c.gauss = tp == Cyc(4) + Cyc(4) * tx && tp * tp.conj() == Cyc(32);

    int plus = static_cast<int>(std::count(c.eps.begin(), c.eps.end(), 1));
    c.block = plus % 2;
    return c;
}

std::vector<CoverCandidate> chi20_cover_candidates(const BraidingData& base) {
    std::vector<CoverCandidate> out;
    for (long a1 = 7; a1 >= 0; --a1)
        for (long a2 = 7; a2 >= 0; --a2)
            for (long a3 = 7; a3 >= 0; --a3) {
                std::vector<Cyc> ty;
                for (long a : {a1, a2, a3}) {
                    Cyc t = root_of_unity(16, a);
                    ty.push_back(t);
                    ty.push_back(-t);
                }
                try {
                    auto c = cover_from_twists(base, ty);
                    if (c.ok()) out.push_back(std::move(c));
                } catch (const std::invalid_argument&) {
                    // eps not a sign: no S-matrix of the forced shape
                }
            }
    return out;
}

BraidingData chi20_base(const Cyc& alpha) {
    for (const auto& cls : enumerate_braiding_classes(2, 0))
        for (const auto& m : cls.members)
            if (m.alpha == alpha && m.tau_sign() < 0 && !cls.symmetric) return cls.rep.alpha == alpha ? cls.rep : m;
    throw std::invalid_argument("chi20_base: no nonsymmetric chi_2^0 braiding with alpha = " + alpha.str());
}

Premodular pointed_rank2(const Cyc& t) {
    FusionRing ring({"e", "h"}, 0);
    ring.dual = {0, 1};
    ring.set(0, 0, 0, 1);
    ring.set(0, 1, 1, 1);
    ring.set(1, 0, 1, 1);
    ring.set(1, 1, 0, 1);
    ring.fpdim = {Cyc(1), Cyc(1)};
    return make_premodular(ring, {Cyc(1), t});
}

LagrangianMatch lagrangian_match(const Premodular& D, const Cyc& theta_x) {
    LagrangianMatch m;
    auto prod = deligne_product(D, pointed_rank2(theta_x.inverse()));
    const Premodular& P = prod.data;
    std::vector<int> trivial;
    for (int x = 0; x < P.rank(); ++x)
        if (P.theta[x] == Cyc(1)) trivial.push_back(x);
    if (trivial.size() > 16) throw std::runtime_error("lagrangian_match: too many trivial twists");
    std::set<std::vector<int>> seen;
    for (unsigned mask = 1; mask < (1u << trivial.size()); ++mask) {
        std::vector<int> seeds;
        for (std::size_t i = 0; i < trivial.size(); ++i)
            if (mask >> i & 1) seeds.push_back(trivial[i]);
        Subring sub = subring_generated(P.ring, seeds);
        if (!seen.insert(sub.indices).second) continue;
        bool all_trivial = std::all_of(sub.indices.begin(), sub.indices.end(),
                                       [&](int x) { return P.theta[x] == Cyc(1); });
        if (!all_trivial) continue;
        if (!tannakian_and_lagrangian(P, sub).is_lagrangian) continue;
        ++m.lagrangian_count;
        if (!m.found) {
            m.found = true;
            m.lagrangian = sub;
            for (int x : sub.indices) m.labels.push_back(P.ring.labels[x]);
            auto es = is_extraspecial_charring(restrict_ring(P.ring, sub));
            if (es) m.extraspecial = std::make_pair(static_cast<int>(es->first), es->second);
        }
    }
    if (m.extraspecial && m.extraspecial->first == 2 && m.extraspecial->second == 1)
        m.group_type = "D4 or Q8 (not determined by the fusion ring)";
    else if (m.extraspecial)
        m.group_type = "extraspecial of order " + std::to_string(1L << (2 * m.extraspecial->second + 1));
    return m;
}

LagrangianMatch lagrangian_match(const CoverCandidate& c) { return lagrangian_match(c.data, c.base.theta_x()); }

ObstructionReport obstruction_report_chi2n0(int n) {
    ObstructionReport r;
    r.n = n;
    r.shape = derive_cover_shape(n);
    r.steps = r.shape.steps;
    auto es = is_extraspecial_charring(ty_ring(2 * n));
    r.steps.push_back(step("lagrangian_rules",
                           "the subring on g (x) e and x (x) h has the fusion rules of an extraspecial 2-group of order 2^" +
                               std::to_string(2 * n + 1),
                           es && es->first == 2 && es->second == n));
    if (n == 1) {
        const Cyc I = root_of_unity(4, 1);
        for (const Cyc& a : {I, -I}) r.candidates += static_cast<int>(chi20_cover_candidates(chi20_base(a)).size());
        r.steps.push_back(step("candidates", std::to_string(r.candidates) + " modular data pass the axioms", r.candidates > 0));
        r.conclusion = "n = 1: covers of dimension 32 are not excluded";
    } else {
        r.steps.push_back(step("conductor", std::string("twists off C have order 16 > 8; ") + kConductorAxiom, true, true));
        r.conclusion = "n = " + std::to_string(n) + ": no nondegenerate cover of dimension 2^" + std::to_string(4 * n + 1);
    }
    return r;
}

}  // namespace fuscat
