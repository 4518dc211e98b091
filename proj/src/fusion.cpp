#include "fuscat/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fuscat {

FusionRing::FusionRing(std::vector<std::string> names, int unit_index)
    : labels(std::move(names)), unit(unit_index), dual(labels.size()) {
    std::iota(dual.begin(), dual.end(), 0);
    std::size_t r = labels.size();
    mult.assign(r * r * r, 0);
}

std::vector<std::pair<int, int>> FusionRing::product(int x, int y) const {
    std::vector<std::pair<int, int>> out;
    int r = rank();
    const int* row = &mult[(static_cast<std::size_t>(x) * r + y) * r];
    for (int z = 0; z < r; ++z)
        if (row[z] != 0) out.emplace_back(z, row[z]);
    return out;
}

int FusionRing::index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::out_of_range("no object labelled '" + label + "'");
    return static_cast<int>(it - labels.begin());
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.ok; });
}

const AxiomCheck& ValidationReport::get(const std::string& axiom) const {
    for (const auto& c : checks)
        if (c.axiom == axiom) return c;
    throw std::out_of_range("no axiom check named " + axiom);
}

ValidationReport validate_ring(const FusionRing& ring) {
    ValidationReport report;
    const int r = ring.rank();
    const int u = ring.unit;

    AxiomCheck nonneg{"nonnegative"};
    for (int x = 0; x < r && nonneg.ok; ++x)
        for (int y = 0; y < r && nonneg.ok; ++y)
            for (int z = 0; z < r && nonneg.ok; ++z)
                if (ring.N(x, y, z) < 0) {
                    nonneg.ok = false;
                    nonneg.counterexample = {x, y, z};
                }
    report.checks.push_back(nonneg);

    AxiomCheck unit{"unit"};
    if (u < 0 || u >= r) {
        unit.ok = false;
        unit.detail = "unit index out of range";
    }
    for (int y = 0; y < r && unit.ok; ++y)
        for (int z = 0; z < r && unit.ok; ++z) {
            int want = y == z ? 1 : 0;
            if (ring.N(u, y, z) != want || ring.N(y, u, z) != want) {
                unit.ok = false;
                unit.counterexample = {y, z};
            }
        }
    report.checks.push_back(unit);

    AxiomCheck dual{"dual"};
    if (static_cast<int>(ring.dual.size()) != r) {
        dual.ok = false;
        dual.detail = "dual table has wrong length";
    }
    for (int x = 0; x < r && dual.ok; ++x) {
        int xs = ring.dual[x];
        if (xs < 0 || xs >= r || ring.dual[xs] != x) {
            dual.ok = false;
            dual.counterexample = {x};
            dual.detail = "dual is not an involution";
            break;
        }
        for (int y = 0; y < r; ++y) {
            int want = y == xs ? 1 : 0;
            if (ring.N(x, y, u) != want) {
                dual.ok = false;
                dual.counterexample = {x, y};
                dual.detail = "N_{x,y}^1 must equal [y = x*]";
                break;
            }
        }
    }
    // Frobenius reciprocity N_{x,y}^z = N_{x*,z}^y.
    for (int x = 0; x < r && dual.ok; ++x)
        for (int y = 0; y < r && dual.ok; ++y)
            for (int z = 0; z < r && dual.ok; ++z)
                if (ring.N(x, y, z) != ring.N(ring.dual[x], z, y)) {
                    dual.ok = false;
                    dual.counterexample = {x, y, z};
                    dual.detail = "Frobenius reciprocity fails";
                }
    report.checks.push_back(dual);

    AxiomCheck comm{"commutativity"};
    for (int x = 0; x < r && comm.ok; ++x)
        for (int y = x + 1; y < r && comm.ok; ++y)
            for (int z = 0; z < r && comm.ok; ++z)
                if (ring.N(x, y, z) != ring.N(y, x, z)) {
                    comm.ok = false;
                    comm.counterexample = {x, y, z};
                }
    report.checks.push_back(comm);

    AxiomCheck assoc{"associativity"};
    {
        std::vector<std::vector<std::pair<int, int>>> prod(static_cast<std::size_t>(r) * r);
        for (int x = 0; x < r; ++x)
            for (int y = 0; y < r; ++y) prod[static_cast<std::size_t>(x) * r + y] = ring.product(x, y);
        std::vector<long> lhs(r), rhs(r);
        for (int x = 0; x < r && assoc.ok; ++x)
            for (int y = 0; y < r && assoc.ok; ++y)
                for (int z = 0; z < r && assoc.ok; ++z) {
                    std::fill(lhs.begin(), lhs.end(), 0);
                    std::fill(rhs.begin(), rhs.end(), 0);
                    for (auto [w, a] : prod[static_cast<std::size_t>(x) * r + y])
                        for (auto [v, b] : prod[static_cast<std::size_t>(w) * r + z]) lhs[v] += static_cast<long>(a) * b;
                    for (auto [w, a] : prod[static_cast<std::size_t>(y) * r + z])
                        for (auto [v, b] : prod[static_cast<std::size_t>(x) * r + w]) rhs[v] += static_cast<long>(a) * b;
                    if (lhs != rhs) {
                        assoc.ok = false;
                        assoc.counterexample = {x, y, z};
                    }
                }
    }
    report.checks.push_back(assoc);

    AxiomCheck dims{"fpdim_homomorphism"};
    if (!ring.has_dims()) {
        dims.detail = "no dimensions supplied";
    } else {
        if (!(ring.fpdim[u] == Cyc(1))) {
            dims.ok = false;
            dims.counterexample = {u};
            dims.detail = "d_1 must be 1";
        }
        for (int x = 0; x < r && dims.ok; ++x) {
            auto z = ring.fpdim[x].approx();
            if (!ring.fpdim[x].is_real() || z.real() < 1.0 - 1e-9) {
                dims.ok = false;
                dims.counterexample = {x};
                dims.detail = "dimension must be real and at least 1";
            }
        }
        for (int x = 0; x < r && dims.ok; ++x)
            for (int y = x; y < r && dims.ok; ++y) {
                Cyc sum;
                for (auto [z, n] : ring.product(x, y)) sum += Cyc(static_cast<long>(n)) * ring.fpdim[z];
                if (!(sum == ring.fpdim[x] * ring.fpdim[y])) {
                    dims.ok = false;
                    dims.counterexample = {x, y};
                    dims.detail = "d_x d_y != sum_z N_{x,y}^z d_z";
                }
            }
    }
    report.checks.push_back(dims);
    return report;
}

std::vector<Cyc> fp_dims(const FusionRing& ring) {
    const int r = ring.rank();
    // The dimension vector is the Perron eigenvector of sum_x N_x, normalized at the unit.
    std::vector<double> m(static_cast<std::size_t>(r) * r, 0.0);
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            for (int z = 0; z < r; ++z) m[static_cast<std::size_t>(z) * r + y] += ring.N(x, y, z);
    for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i) * r + i] += 1.0;
    std::vector<double> v(r, 1.0), w(r);
    for (int iter = 0; iter < 200000; ++iter) {
        for (int i = 0; i < r; ++i) {
            double s = 0;
            for (int j = 0; j < r; ++j) s += m[static_cast<std::size_t>(i) * r + j] * v[j];
            w[i] = s;
        }
        double scale = w[ring.unit];
        double diff = 0;
        for (int i = 0; i < r; ++i) {
            w[i] /= scale;
            diff = std::max(diff, std::fabs(w[i] - v[i]));
        }
        v.swap(w);
        if (diff < 1e-14) break;
    }
    std::vector<Cyc> dims(r);
    const double root2 = std::sqrt(2.0);
    for (int x = 0; x < r; ++x) {
        double d = v[x];
        // An algebraic integer a + b sqrt2 that is an FP dimension dominates its
        // conjugate a - b sqrt2 in absolute value, so |b| sqrt2 <= d.
        bool found = false;
        long bmax = static_cast<long>(std::floor(d / root2 + 1e-9));
        for (long babs = 0; babs <= bmax && !found; ++babs) {
            for (int s : {1, -1}) {
                long b = s * babs;
                long a = std::lround(d - static_cast<double>(b) * root2);
                if (std::fabs(static_cast<double>(a) + static_cast<double>(b) * root2 - d) < 1e-8 * std::max(1.0, d) &&
                    std::fabs(static_cast<double>(a) - static_cast<double>(b) * root2) <= d + 1e-8) {
                    dims[x] = Cyc(a) + Cyc(b) * sqrt2();
                    found = true;
                    break;
                }
                if (babs == 0) break;
            }
        }
        if (!found) {
            std::ostringstream os;
            os << "dimension of " << ring.labels[x] << " (~" << d << ") is not recognized in Z[sqrt2]";
            throw recognition_error(os.str());
        }
    }
    for (int x = 0; x < r; ++x)
        for (int y = x; y < r; ++y) {
            Cyc sum;
            for (auto [z, n] : ring.product(x, y)) sum += Cyc(static_cast<long>(n)) * dims[z];
            if (!(sum == dims[x] * dims[y]))
                throw recognition_error("recognized dimensions fail the homomorphism check at (" + ring.labels[x] +
                                        ", " + ring.labels[y] + ")");
        }
    return dims;
}

std::vector<Cyc> dims_of(const FusionRing& ring) { return ring.has_dims() ? ring.fpdim : fp_dims(ring); }

Cyc global_dim(const FusionRing& ring) {
    Cyc total;
    for (const auto& d : dims_of(ring)) total += d * d;
    return total;
}

long AbelianGroup::order() const {
    long n = 1;
    for (long f : factors) n *= f;
    return n;
}

std::vector<long> AbelianGroup::coords(long element) const {
    std::vector<long> c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        c[i] = element % factors[i];
        element /= factors[i];
    }
    return c;
}

long AbelianGroup::element(const std::vector<long>& c) const {
    long e = 0, stride = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        long v = ((c[i] % factors[i]) + factors[i]) % factors[i];
        e += v * stride;
        stride *= factors[i];
    }
    return e;
}

long AbelianGroup::add(long a, long b) const {
    auto ca = coords(a), cb = coords(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return element(ca);
}

long AbelianGroup::negate(long a) const {
    auto c = coords(a);
    for (auto& v : c) v = -v;
    return element(c);
}

std::string AbelianGroup::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(factors[i]);
    }
    return s;
}

std::string AbelianGroup::element_str(long element) const {
    auto c = coords(element);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

std::pair<AbelianGroup, std::vector<long>> identify_abelian_group(int n, int identity,
                                                                  const std::function<int(int, int)>& op) {
    std::vector<long> order(n, 0);
    for (int g = 0; g < n; ++g) {
        int x = g;
        long k = 1;
        while (x != identity) {
            x = op(x, g);
            ++k;
            if (k > n) throw std::invalid_argument("operation does not define a group");
        }
        order[g] = k;
    }
    // p-primary parts from counting elements killed by p^k.
    std::map<long, std::vector<long>> partitions;  // p -> exponents of cyclic factors
    for (long p : prime_factors(n)) {
        std::vector<long> counts;  // counts[k] = log_p #{g : g^{p^k} = e}
        long pk = 1;
        long prev = 0;
        std::vector<long> at_least;  // number of parts of size >= k
        for (int k = 1;; ++k) {
            pk *= p;
            long c = 0;
            for (int g = 0; g < n; ++g)
                if (pk % order[g] == 0) ++c;
            long e = 0;
            for (long t = c; t > 1; t /= p) ++e;
            if (e == prev) break;
            at_least.push_back(e - prev);
            prev = e;
        }
        std::vector<long> parts;
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            long with_exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
            for (long j = 0; j < with_exact; ++j) parts.push_back(static_cast<long>(k + 1));
        }
        std::sort(parts.rbegin(), parts.rend());
        partitions[p] = parts;
    }
    std::size_t nf = 0;
    for (auto& [p, parts] : partitions) nf = std::max(nf, parts.size());
    std::vector<long> factors(nf, 1);
    for (auto& [p, parts] : partitions)
        for (std::size_t i = 0; i < parts.size(); ++i) {
            long q = 1;
            for (long j = 0; j < parts[i]; ++j) q *= p;
            factors[nf - 1 - i] *= q;
        }
    AbelianGroup group{factors};

    // Backtracking search for generators, largest factor first.
    std::vector<int> gens(nf, identity);
    std::vector<long> image;
    std::function<bool(int, std::vector<char>&)> search = [&](int idx, std::vector<char>& in_h) -> bool {
        if (idx < 0) return true;
        long d = factors[idx];
        for (int g = 0; g < n; ++g) {
            if (order[g] != d) continue;
            // <g> must meet the current subgroup trivially.
            bool ok = true;
            int x = g;
            for (long j = 1; j < d; ++j) {
                if (in_h[x]) {
                    ok = false;
                    break;
                }
                x = op(x, g);
            }
            if (!ok) continue;
            std::vector<char> next(n, 0);
            for (int h = 0; h < n; ++h) {
                if (!in_h[h]) continue;
                int y = h;
                for (long j = 0; j < d; ++j) {
                    next[y] = 1;
                    y = op(y, g);
                }
            }
            gens[idx] = g;
            if (search(idx - 1, next)) return true;
        }
        return false;
    };
    std::vector<char> trivial(n, 0);
    trivial[identity] = 1;
    if (!search(static_cast<int>(nf) - 1, trivial)) throw std::logic_error("abelian group generator search failed");
    std::vector<long> elem_of(n, -1);
    for (long e = 0; e < group.order(); ++e) {
        auto c = group.coords(e);
        int x = identity;
        for (std::size_t i = 0; i < nf; ++i)
            for (long j = 0; j < c[i]; ++j) x = op(x, gens[i]);
        if (elem_of[x] != -1) throw std::invalid_argument("operation is not abelian of the expected type");
        elem_of[x] = e;
    }
    return {group, elem_of};
}

bool Subring::contains(int x) const { return std::binary_search(indices.begin(), indices.end(), x); }

Subring subring_generated(const FusionRing& ring, const std::vector<int>& seeds) {
    std::vector<char> in(ring.rank(), 0);
    std::vector<int> members;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    };
    add(ring.unit);
    for (int s : seeds) {
        add(s);
        add(ring.dual[s]);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            int a = members[i], b = members[j];
            for (auto [z, n] : ring.product(a, b)) {
                add(z);
                add(ring.dual[z]);
            }
        }
    }
    Subring out;
    out.indices = members;
    std::sort(out.indices.begin(), out.indices.end());
    return out;
}

Subring whole_ring(const FusionRing& ring) {
    Subring s;
    s.indices.resize(ring.rank());
    std::iota(s.indices.begin(), s.indices.end(), 0);
    return s;
}

Cyc subring_dim(const FusionRing& ring, const Subring& sub) {
    auto d = dims_of(ring);
    Cyc total;
    for (int x : sub.indices) total += d[x] * d[x];
    return total;
}

Subring intersect(const Subring& a, const Subring& b) {
    Subring out;
    std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                          std::back_inserter(out.indices));
    return out;
}

Grading universal_grading(const FusionRing& ring) {
    const int r = ring.rank();
    std::vector<int> seeds;
    for (int x = 0; x < r; ++x)
        for (auto [z, n] : ring.product(x, ring.dual[x])) seeds.push_back(z);
    Grading g;
    g.adjoint = subring_generated(ring, seeds);

    std::vector<int> comp(r, -1);
    std::vector<std::vector<int>> comps;
    for (int x = 0; x < r; ++x) {
        if (comp[x] != -1) continue;
        int id = static_cast<int>(comps.size());
        comps.emplace_back();
        for (int a : g.adjoint.indices)
            for (auto [z, n] : ring.product(x, a))
                if (comp[z] == -1) {
                    comp[z] = id;
                    comps.back().push_back(z);
                }
        std::sort(comps.back().begin(), comps.back().end());
    }
    const int nc = static_cast<int>(comps.size());
    auto op = [&](int a, int b) {
        auto terms = ring.product(comps[a][0], comps[b][0]);
        return comp[terms.front().first];
    };
    // Grading property: every summand of x (x) y lies over comp(x) comp(y).
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            for (auto [z, n] : ring.product(x, y))
                if (comp[z] != op(comp[x], comp[y]))
                    throw std::logic_error("universal grading: fusion does not respect components");
    auto [group, elem_of] = identify_abelian_group(nc, comp[ring.unit], op);
    g.group = group;
    g.component_of.resize(r);
    for (int x = 0; x < r; ++x) g.component_of[x] = elem_of[comp[x]];
    g.components.assign(group.order(), {});
    for (int c = 0; c < nc; ++c) g.components[elem_of[c]] = comps[c];

    auto d = dims_of(ring);
    Cyc first;
    for (std::size_t c = 0; c < g.components.size(); ++c) {
        Cyc total;
        for (int x : g.components[c]) total += d[x] * d[x];
        if (c == 0)
            first = total;
        else if (!(total == first))
            throw std::logic_error("universal grading: components have unequal dimension");
    }
    return g;
}

DistinguishedSubrings distinguished_subrings(const FusionRing& ring) {
    auto d = dims_of(ring);
    DistinguishedSubrings out;
    for (int x = 0; x < ring.rank(); ++x) {
        if (d[x] == Cyc(1)) out.pointed.indices.push_back(x);
        if (d[x].is_rational()) out.rational.indices.push_back(x);
    }
    out.adjoint = universal_grading(ring).adjoint;
    return out;
}

InvertiblesGroup invertibles_group(const FusionRing& ring) {
    auto d = dims_of(ring);
    InvertiblesGroup out;
    for (int x = 0; x < ring.rank(); ++x)
        if (d[x] == Cyc(1)) out.objects.push_back(x);
    std::vector<int> pos(ring.rank(), -1);
    for (std::size_t i = 0; i < out.objects.size(); ++i) pos[out.objects[i]] = static_cast<int>(i);
    auto op = [&](int a, int b) {
        auto terms = ring.product(out.objects[a], out.objects[b]);
        return pos[terms.front().first];
    };
    auto [group, elem_of] = identify_abelian_group(static_cast<int>(out.objects.size()), pos[ring.unit], op);
    out.group = group;
    out.element_of = elem_of;
    return out;
}

FusionRing restrict_ring(const FusionRing& ring, const Subring& sub) {
    std::vector<std::string> names;
    std::vector<int> pos(ring.rank(), -1);
    for (int x : sub.indices) {
        pos[x] = static_cast<int>(names.size());
        names.push_back(ring.labels[x]);
    }
    if (pos[ring.unit] < 0) throw std::invalid_argument("subring does not contain the unit");
    FusionRing out(names, pos[ring.unit]);
    for (int x : sub.indices) {
        if (pos[ring.dual[x]] < 0) throw std::invalid_argument("subring is not closed under duality");
        out.dual[pos[x]] = pos[ring.dual[x]];
        for (int y : sub.indices)
            for (auto [z, n] : ring.product(x, y)) {
                if (pos[z] < 0) throw std::invalid_argument("subring is not closed under fusion");
                out.set(pos[x], pos[y], pos[z], n);
            }
    }
    if (ring.has_dims())
        for (int x : sub.indices) out.fpdim.push_back(ring.fpdim[x]);
    return out;
}

FusionRing pointed_ring(const AbelianGroup& group, const std::string& prefix) {
    long n = group.order();
    std::vector<std::string> names;
    for (long e = 0; e < n; ++e) names.push_back(e == 0 ? "1" : prefix + group.element_str(e));
    FusionRing ring(names, 0);
    for (long a = 0; a < n; ++a) {
        ring.dual[a] = static_cast<int>(group.negate(a));
        for (long b = 0; b < n; ++b) ring.set(static_cast<int>(a), static_cast<int>(b), static_cast<int>(group.add(a, b)), 1);
    }
    ring.fpdim.assign(n, Cyc(1));
    return ring;
}

std::optional<std::vector<int>> ring_isomorphism(const FusionRing& a, const FusionRing& b) {
    const int r = a.rank();
    if (b.rank() != r) return std::nullopt;
    auto da = dims_of(a), db = dims_of(b);
    std::vector<int> f(r, -1), used(r, 0);
    f[a.unit] = b.unit;
    used[b.unit] = 1;
    if (!(da[a.unit] == db[b.unit])) return std::nullopt;
    std::vector<int> order;
    for (int x = 0; x < r; ++x)
        if (x != a.unit) order.push_back(x);
    std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
        if (k == order.size()) return true;
        int x = order[k];
        for (int y = 0; y < r; ++y) {
            if (used[y] || !(da[x] == db[y])) continue;
            f[x] = y;
            used[y] = 1;
            bool ok = true;
            for (std::size_t i = 0; i <= k && ok; ++i) {
                int u = order[i];
                if (f[a.dual[u]] >= 0 && f[a.dual[u]] != b.dual[f[u]]) ok = false;
                for (std::size_t j = 0; j <= k && ok; ++j) {
                    int v = order[j];
                    for (std::size_t l = 0; l <= k && ok; ++l) {
                        int w = order[l];
                        if (i != k && j != k && l != k) continue;
                        if (a.N(u, v, w) != b.N(f[u], f[v], f[w])) ok = false;
                    }
                }
            }
            if (ok && search(k + 1)) return true;
            used[y] = 0;
            f[x] = -1;
        }
        return false;
    };
    if (!search(0)) return std::nullopt;
    return f;
}

}  // namespace fuscat
