#include "fuscat/tambara.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fuscat {

namespace {

int parity(unsigned v) { return std::popcount(v) & 1; }

Cyc sign_cyc(int s) { return Cyc(static_cast<long>(s)); }

}  // namespace

Bicharacter bicharacter(int n, int k) {
    if (n < 1) throw std::invalid_argument("bicharacter: n must be positive");
    if (k != 0 && k != 1) throw std::invalid_argument("bicharacter: k must be 0 or 1");
    if (k == 0 && n % 2 != 0) throw std::invalid_argument("bicharacter: k = 0 requires n even");
    Bicharacter chi{n, k, {}};
    const unsigned size = 1u << n;
    chi.table.assign(size, std::vector<int>(size, 1));
    for (unsigned g = 0; g < size; ++g)
        for (unsigned h = 0; h < size; ++h) {
            int e;
            if (k == 1) {
                e = parity(g & h);
            } else {
                // Swap adjacent bits of h: pairs (g_{2i-1}, g_{2i}).
                unsigned odd = h & 0x55555555u, even = h & 0xAAAAAAAAu;
                e = parity(g & ((odd << 1) | (even >> 1)));
            }
            chi.table[g][h] = e ? -1 : 1;
        }
    return chi;
}

bool polarizes(const QuadraticForm& q, const Bicharacter& chi) {
    const unsigned size = static_cast<unsigned>(chi.size());
    if (q.size() != size || !(q[0] == Cyc(1))) return false;
    for (unsigned g = 0; g < size; ++g)
        for (unsigned h = 0; h < size; ++h)
            if (!(q[g] * q[h] == sign_cyc(chi(g, h)) * q[g ^ h])) return false;
    return true;
}

std::vector<QuadraticForm> quadratic_forms(const Bicharacter& chi) {
    const int n = chi.n;
    const unsigned size = static_cast<unsigned>(chi.size());
    std::vector<Cyc> root(n);
    for (int j = 0; j < n; ++j) root[j] = chi(1u << j, 1u << j) == 1 ? Cyc(1) : root_of_unity(4, 1);
    std::vector<QuadraticForm> out;
    // mask bit j set means delta_{j+1} = -1; counting up gives descending sign vectors.
    for (unsigned mask = 0; mask < size; ++mask) {
        std::vector<Cyc> base(n);
        for (int j = 0; j < n; ++j) base[j] = (mask >> (n - 1 - j) & 1u) ? -root[j] : root[j];
        QuadraticForm q(size);
        for (unsigned g = 0; g < size; ++g) {
            Cyc v(1);
            int sign = 1;
            for (int i = 0; i < n; ++i) {
                if (!(g >> i & 1u)) continue;
                v *= base[i];
                for (int j = i + 1; j < n; ++j)
                    if (g >> j & 1u) sign *= chi(1u << i, 1u << j);
            }
            q[g] = sign_cyc(sign) * v;
        }
        if (!polarizes(q, chi)) throw std::logic_error("quadratic_forms: constructed form does not polarize");
        out.push_back(std::move(q));
    }
    return out;
}

std::string e2_label(int n, E2Elem g) {
    if (g == 0) return "e";
    if (n == 1) return "g";
    std::string s;
    for (int j = 0; j < n; ++j)
        if (g >> j & 1u) {
            if (!s.empty()) s += "+";
            s += "g" + std::to_string(j + 1);
        }
    return s;
}

std::vector<std::string> ty_labels(int n) {
    std::vector<std::string> labels;
    for (unsigned g = 0; g < (1u << n); ++g) labels.push_back(g == 0 ? "1" : e2_label(n, g));
    labels.push_back("x");
    return labels;
}

FusionRing ty_ring(int n) {
    if (n < 1) throw std::invalid_argument("ty_ring: n must be positive");
    const int m = 1 << n;
    FusionRing ring(ty_labels(n), 0);
    const int x = m;
    for (int g = 0; g < m; ++g) {
        for (int h = 0; h < m; ++h) ring.set(g, h, g ^ h, 1);
        ring.set(g, x, x, 1);
        ring.set(x, g, x, 1);
        ring.set(x, x, g, 1);
    }
    ring.fpdim.assign(m, Cyc(1));
    ring.fpdim.push_back(sqrt_rational(Rational(m)));
    return ring;
}

Cyc ty_tau(int n, int tau_sign) {
    if (tau_sign != 1 && tau_sign != -1) throw std::invalid_argument("tau sign must be +1 or -1");
    return sign_cyc(tau_sign) / sqrt_rational(Rational(1L << n));
}

int BraidingData::tau_sign() const { return tau.approx().real() > 0 ? 1 : -1; }

std::vector<int> BraidingData::deltas() const {
    std::vector<int> d;
    for (int j = 0; j < n(); ++j) {
        E2Elem g = 1u << j;
        Cyc root = chi(g, g) == 1 ? Cyc(1) : root_of_unity(4, 1);
        d.push_back(q[g] == root ? 1 : -1);
    }
    return d;
}

namespace {

Cyc q_sum(const QuadraticForm& q) {
    Cyc s;
    for (const auto& v : q) s += v;
    return s;
}

}  // namespace

int BraidingData::epsilon() const {
    Cyc principal = principal_sqrt_root_of_unity(tau * q_sum(q));
    return alpha == principal ? 1 : -1;
}

BraidingData make_braiding(int n, int k, int tau_sign, const QuadraticForm& q, int alpha_sign) {
    if (alpha_sign != 1 && alpha_sign != -1) throw std::invalid_argument("alpha sign must be +1 or -1");
    BraidingData b{bicharacter(n, k), ty_tau(n, tau_sign), q, Cyc()};
    if (!polarizes(q, b.chi)) throw std::invalid_argument("make_braiding: q does not polarize the bicharacter");
    Cyc s = b.tau * q_sum(q);
    if (!as_root_of_unity(s)) throw std::logic_error("make_braiding: tau * sum q is not a root of unity");
    b.alpha = sign_cyc(alpha_sign) * principal_sqrt_root_of_unity(s);
    return b;
}

bool valid_braiding(const BraidingData& b) {
    if (!polarizes(b.q, b.chi)) return false;
    for (const auto& v : b.q)
        if (!(pow(v, 4) == Cyc(1))) return false;
    if (!(b.tau * b.tau * Cyc(1L << b.n()) == Cyc(1))) return false;
    return b.alpha * b.alpha == b.tau * q_sum(b.q);
}

std::vector<IsingEntry> ising_catalog() {
    std::vector<IsingEntry> out;
    auto chi = bicharacter(1, 1);
    auto forms = quadratic_forms(chi);
    for (int ts : {1, -1})
        for (const auto& q : forms)
            for (int as : {1, -1}) {
                auto b = make_braiding(1, 1, ts, q, as);
                auto r = as_root_of_unity(b.alpha);
                if (!r || r->order != 16) throw std::logic_error("Ising alpha is not a primitive 16th root");
                out.push_back({static_cast<int>(r->exponent), "I" + std::to_string(r->exponent), b});
            }
    std::sort(out.begin(), out.end(), [](const IsingEntry& a, const IsingEntry& b) { return a.index < b.index; });
    return out;
}

const BraidingData& ising(int index) {
    static const std::vector<IsingEntry> catalog = ising_catalog();
    int m = ((index % 16) + 16) % 16;
    for (const auto& e : catalog)
        if (e.index == m) return e.data;
    throw std::invalid_argument("no Ising braiding with index " + std::to_string(index));
}

Premodular to_premodular(const BraidingData& b) {
    FusionRing ring = ty_ring(b.n());
    std::vector<Cyc> theta;
    for (const auto& v : b.q) theta.push_back(v * v);
    theta.push_back(b.theta_x());
    return make_premodular(std::move(ring), std::move(theta));
}

E2Elem apply_auto(const E2Auto& f, E2Elem g) {
    E2Elem out = 0;
    for (std::size_t j = 0; j < f.size(); ++j)
        if (g >> j & 1u) out ^= f[j];
    return out;
}

namespace {

bool independent(const std::vector<E2Elem>& vs, int n) {
    std::vector<char> seen(1u << n, 0);
    for (unsigned c = 0; c < (1u << vs.size()); ++c) {
        E2Elem v = 0;
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (c >> j & 1u) v ^= vs[j];
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<E2Auto> compute_chi_automorphisms(const Bicharacter& chi) {
    const int n = chi.n;
    const unsigned size = 1u << n;
    std::vector<E2Auto> out;
    E2Auto f;
    auto rec = [&](auto&& self, int j) -> void {
        if (j == n) {
            out.push_back(f);
            return;
        }
        for (E2Elem v = 1; v < size; ++v) {
            if (chi(v, v) != chi(1u << j, 1u << j)) continue;
            bool ok = true;
            for (int i = 0; i < j && ok; ++i)
                if (chi(f[i], v) != chi(1u << i, 1u << j)) ok = false;
            if (!ok) continue;
            f.push_back(v);
            if (independent(f, n)) self(self, j + 1);
            f.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::vector<E2Auto> chi_automorphisms(const Bicharacter& chi) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<E2Auto>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(chi.n, chi.k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_chi_automorphisms(chi)).first;
    return it->second;
}

std::optional<E2Auto> braiding_equivalent(const BraidingData& b1, const BraidingData& b2) {
    if (b1.n() != b2.n() || b1.k() != b2.k()) return std::nullopt;
    if (!(b1.tau == b2.tau) || !(b1.alpha == b2.alpha)) return std::nullopt;
    const unsigned size = 1u << b1.n();
    for (const auto& f : chi_automorphisms(b1.chi)) {
        bool ok = true;
        for (E2Elem g = 1; g < size && ok; ++g)
            if (!(b2.q[apply_auto(f, g)] == b1.q[g])) ok = false;
        if (ok) return f;
    }
    return std::nullopt;
}

namespace {

std::string class_name(int n, int k, const BraidingData& rep, bool symmetric) {
    auto alpha_root = as_root_of_unity(rep.alpha);
    if (n == 1) return "I" + std::to_string(alpha_root ? alpha_root->exponent : 0);
    if (n == 2 && k == 0) {
        bool tp = rep.tau_sign() > 0;
        if (symmetric) {
            std::string g = tp ? "Rep(D4," : "Rep(Q8,";
            return g + (rep.alpha == Cyc(1) ? "e)" : "z)");
        }
        bool rev = !(rep.alpha == root_of_unity(4, 1));
        if (tp) return rev ? "K^rev" : "K";
        return rev ? "Z(Vec_Q8^g)^rev_ad" : "Z(Vec_Q8^g)_ad";
    }
    if (n == 2 && k == 1) {
        // Name by an Ising pair (j, k) realizing the class, preferring j = k.
        const auto& cat = ising_catalog();
        std::string best;
        bool best_diag = false;
        for (std::size_t a = 0; a < cat.size(); ++a)
            for (std::size_t c = a; c < cat.size(); ++c) {
                const auto& A = cat[a].data;
                const auto& C = cat[c].data;
                QuadraticForm q(4);
                q[0] = Cyc(1);
                q[1] = A.q[1];
                q[2] = C.q[1];
                q[3] = A.q[1] * C.q[1];
                BraidingData prod{rep.chi, A.tau * C.tau, q, A.alpha * C.alpha};
                if (!braiding_equivalent(prod, rep)) continue;
                bool diag = a == c;
                if (best.empty() || (diag && !best_diag)) {
                    best = "(I" + std::to_string(cat[a].index) + "xI" + std::to_string(cat[c].index) + ")_Q";
                    best_diag = diag;
                }
            }
        if (!best.empty()) return best;
    }
    std::string s = "C(chi_" + std::to_string(n) + "^" + std::to_string(k) + ",";
    s += rep.tau_sign() > 0 ? "+" : "-";
    s += ")[";
    for (int d : rep.deltas()) s += d > 0 ? "+" : "-";
    s += rep.epsilon() > 0 ? "|+]" : "|-]";
    return s;
}

}  // namespace

std::vector<BraidingClass> enumerate_braiding_classes(int n, int k) {
    auto chi = bicharacter(n, k);
    auto forms = quadratic_forms(chi);
    std::vector<BraidingData> all;
    for (int ts : {1, -1})
        for (const auto& q : forms)
            for (int as : {1, -1}) all.push_back(make_braiding(n, k, ts, q, as));

    std::vector<BraidingClass> classes;
    for (const auto& b : all) {
        bool placed = false;
        for (auto& c : classes)
            if (braiding_equivalent(b, c.rep)) {
                c.members.push_back(b);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({"", b, {b}, false});
    }
    for (auto& c : classes) {
        for (const auto& m : c.members)
            if (m.deltas() > c.rep.deltas()) c.rep = m;
        Subring center = ty_symmetric_center(c.rep);
        c.symmetric = center.size() == (1 << n) + 1;
    }
    if (n == 1) {
        std::sort(classes.begin(), classes.end(), [](const BraidingClass& a, const BraidingClass& b) {
            return as_root_of_unity(a.rep.alpha)->exponent < as_root_of_unity(b.rep.alpha)->exponent;
        });
    } else {
        std::sort(classes.begin(), classes.end(), [](const BraidingClass& a, const BraidingClass& b) {
            if (a.rep.tau_sign() != b.rep.tau_sign()) return a.rep.tau_sign() > b.rep.tau_sign();
            if (a.rep.deltas() != b.rep.deltas()) return a.rep.deltas() > b.rep.deltas();
            return a.rep.epsilon() > b.rep.epsilon();
        });
    }
    for (auto& c : classes) c.name = class_name(n, k, c.rep, c.symmetric);
    return classes;
}

Subring ty_symmetric_center(const BraidingData& b) {
    Subring s;
    const unsigned size = 1u << b.n();
    bool all_trivial = true;
    for (E2Elem g = 0; g < size; ++g) {
        if (b.q[g] * b.q[g] == Cyc(1))
            s.indices.push_back(static_cast<int>(g));
        else
            all_trivial = false;
    }
    if (all_trivial && b.alpha * b.alpha == Cyc(1)) s.indices.push_back(static_cast<int>(size));
    return s;
}

std::vector<E2Auto> braided_autos(const BraidingData& b) {
    std::vector<E2Auto> out;
    const unsigned size = 1u << b.n();
    for (const auto& f : chi_automorphisms(b.chi)) {
        bool ok = true;
        for (E2Elem g = 1; g < size && ok; ++g)
            if (!(b.q[apply_auto(f, g)] == b.q[g])) ok = false;
        if (ok) out.push_back(f);
    }
    return out;
}

}  // namespace fuscat
