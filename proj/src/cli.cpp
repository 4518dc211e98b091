#include "fuscat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "fuscat/covers.hpp"
#include "fuscat/extraspecial.hpp"
#include "fuscat/json_io.hpp"
#include "fuscat/parallel.hpp"
#include "fuscat/products.hpp"
#include "fuscat/table.hpp"
#include "fuscat/verify.hpp"

namespace fuscat {

namespace {

struct Options {
    std::string format = "md";
    std::string out;
    std::uint64_t seed = 20240601;
    int parallel = 0;
    std::string sort = "standard";
};

struct Outcome {
    Report report;
    bool ok = true;
};

std::string yn(bool b) { return b ? "yes" : "no"; }
std::string sgn(int s) { return s > 0 ? "1" : "-1"; }

std::string pairs_str(const std::vector<std::pair<int, int>>& v) {
    std::string s;
    for (const auto& [j, k] : v) s += (s.empty() ? "" : ",") + ("(" + std::to_string(j) + "," + std::to_string(k) + ")");
    return s;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

int parse_ising_name(const std::string& s) {
    std::string t = s;
    if (!t.empty() && (t[0] == 'I' || t[0] == 'i')) t = t.substr(1);
    int k = 0;
    try {
        std::size_t used = 0;
        k = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad Ising name '" + s + "' (expected I1, I3, ..., I15)");
    }
    if (k < 1 || k > 15 || k % 2 == 0) throw std::invalid_argument("bad Ising name '" + s + "' (expected I1, I3, ..., I15)");
    return k;
}

Table premodular_objects(const Premodular& P, const std::string& title) {
    Table t{title, {"object", "dim", "theta", "dual"}, {}};
    for (int x = 0; x < P.rank(); ++x)
        t.add({P.ring.labels[x], P.dims()[x].str(), P.theta[x].str(), P.ring.labels[P.ring.dual[x]]});
    return t;
}

Table s_matrix(const Premodular& P, const std::string& title) {
    Table t{title, {"S"}, {}};
    for (const auto& l : P.ring.labels) t.columns.push_back(l);
    for (int x = 0; x < P.rank(); ++x) {
        std::vector<std::string> row{P.ring.labels[x]};
        for (int y = 0; y < P.rank(); ++y) row.push_back(P.S[x][y].str());
        t.add(row);
    }
    return t;
}

// --- ising / ty ---------------------------------------------------------------

Outcome cmd_ising_list() {
    Outcome o;
    Table t{"chi_1^1 braidings", {"name", "tau", "delta", "epsilon", "q(e)", "q(g)", "alpha"}, {}};
    for (const auto& e : ising_catalog())
        t.add({e.name, e.data.tau.str(), sgn(e.data.deltas()[0]), sgn(e.data.epsilon()), e.data.q[0].str(), e.data.q[1].str(),
               e.data.alpha.str()});
    o.report.tables.push_back(t);
    return o;
}

std::vector<std::string> braiding_columns(int n) {
    std::vector<std::string> cols{"name", "tau"};
    for (int j = 1; j <= n; ++j) cols.push_back("delta_" + std::to_string(j));
    cols.push_back("epsilon");
    for (E2Elem g = 0; g < (1u << n); ++g) cols.push_back("q(" + e2_label(n, g) + ")");
    cols.push_back("alpha");
    return cols;
}

std::vector<std::string> braiding_row(const std::string& name, const BraidingData& b) {
    std::vector<std::string> row{name, b.tau.str()};
    for (int d : b.deltas()) row.push_back(sgn(d));
    row.push_back(sgn(b.epsilon()));
    for (const auto& q : b.q) row.push_back(q.str());
    row.push_back(b.alpha.str());
    return row;
}

std::vector<int> ks_for(int n, int k) {
    if (k >= 0) return {k};
    if (n % 2 == 0) return {0, 1};
    return {1};
}

Outcome cmd_ty_enum(int n, int kopt) {
    if (n < 1 || n > 4) throw std::invalid_argument("--n must be between 1 and 4");
    Outcome o;
    Table wit{"equivalence witnesses", {"class", "member q", "f"}, {}};
    for (int k : ks_for(n, kopt)) {
        auto classes = enumerate_braiding_classes(n, k);
        std::string chi = "chi_" + std::to_string(n) + "^" + std::to_string(k);
        auto cols = braiding_columns(n);
        cols.push_back("members");
        Table sym{"symmetric " + chi + " braidings", cols, {}};
        Table non{(k == 0 ? "nonsymmetric " : "") + chi + " braidings", cols, {}};
        for (const auto& c : classes) {
            auto row = braiding_row(c.name, c.rep);
            row.push_back(std::to_string(c.members.size()));
            (c.symmetric ? sym : non).add(row);
            for (const auto& m : c.members) {
                if (m.q == c.rep.q) continue;
                auto f = braiding_equivalent(m, c.rep);
                std::vector<std::string> qs, fs;
                for (E2Elem g = 1; g < (1u << n); ++g) qs.push_back(m.q[g].str());
                if (f)
                    for (int j = 0; j < n; ++j) fs.push_back(e2_label(n, 1u << j) + "->" + e2_label(n, (*f)[j]));
                wit.add({c.name, "(" + join(qs, ",") + ")", f ? join(fs, " ") : "none"});
                if (!f) o.ok = false;
            }
        }
        if (!sym.rows.empty()) o.report.tables.push_back(sym);
        o.report.tables.push_back(non);
    }
    o.report.tables.push_back(wit);
    return o;
}

Outcome cmd_ty_center(int n, int kopt) {
    if (n < 1 || n > 4) throw std::invalid_argument("--n must be between 1 and 4");
    Outcome o;
    auto labels = ty_labels(n);
    Table t{"symmetric centers", {"name", "k", "center", "FPdim", "symmetric"}, {}};
    for (int k : ks_for(n, kopt))
        for (const auto& c : enumerate_braiding_classes(n, k)) {
            Subring z = ty_symmetric_center(c.rep);
            std::vector<std::string> objs;
            Cyc dim;
            for (int x : z.indices) {
                objs.push_back(labels[x]);
                dim += x == (1 << n) ? Cyc(1L << n) : Cyc(1);
            }
            t.add({c.name, std::to_string(k), join(objs, " "), dim.str(), yn(c.symmetric)});
        }
    o.report.tables.push_back(t);
    return o;
}

// --- modular / product ----------------------------------------------------

Outcome cmd_modular_check(const std::string& path) {
    Outcome o;
    Premodular P = premodular_from_json(read_json_file(path));
    Table t{"checks", {"check", "ok", "detail"}, {}};
    auto vr = validate_ring(P.ring);
    for (const auto& c : vr.checks) {
        std::string d = c.detail;
        if (!c.counterexample.empty()) {
            std::vector<std::string> ce;
            for (int x : c.counterexample) ce.push_back(P.ring.labels.at(x));
            d += (d.empty() ? "" : "; ") + std::string("at ") + join(ce, ",");
        }
        t.add({"ring:" + c.axiom, yn(c.ok), d});
    }
    if (!vr.ok()) {
        o.ok = false;
        o.report.tables.push_back(t);
        o.report.extra["ring"] = validation_to_json(vr);
        return o;
    }
    auto mr = check_modular_axioms(P);
    std::vector<std::string> ce;
    for (int x : mr.counterexample) ce.push_back(x >= 0 && x < P.rank() ? P.ring.labels[x] : std::to_string(x));
    t.add({"twists", yn(mr.twists_valid), ""});
    t.add({"S symmetric", yn(mr.symmetric), ""});
    t.add({"S row of unit = dims", yn(mr.dims_match), ""});
    t.add({"balancing", yn(mr.balancing), ""});
    t.add({"unitary", yn(mr.unitary), ""});
    t.add({"Verlinde integral", yn(mr.verlinde_integral), ""});
    if (!mr.ok()) t.add({"first failure", "no", mr.detail + (ce.empty() ? "" : " at " + join(ce, ","))});
    auto gs = gauss_central_charge(P);
    t.add({"central charge", gs.xi ? "yes" : "no", gs.xi ? gs.xi->str() : "|tau_+|^2 != dim"});
    o.ok = mr.ok();
    o.report.tables.push_back(t);
    o.report.extra["ring"] = validation_to_json(vr);
    o.report.extra["modular"] = modular_report_to_json(mr);
    return o;
}

Outcome cmd_product(const std::string& factors, bool integral) {
    Outcome o;
    std::vector<int> idx;
    std::stringstream ss(factors);
    std::string tok;
    while (std::getline(ss, tok, ',')) idx.push_back(parse_ising_name(tok));
    if (idx.empty()) throw std::invalid_argument("--factors needs at least one Ising name");
    auto prod = ising_product(idx);
    Premodular P = prod.data;
    std::string title = "product";
    if (integral) {
        P = integral_subcat(prod.data).data;
        title = "integral subcategory";
    }
    o.report.tables.push_back(premodular_objects(P, title + " objects"));
    o.report.tables.push_back(s_matrix(P, title + " S-matrix"));
    auto gs = gauss_central_charge(P);
    auto mr = check_modular_axioms(P);
    Table s{"summary", {"rank", "dim", "nondegenerate", "central charge"}, {}};
    bool nd = is_nondegenerate(P);
    s.add({std::to_string(P.rank()), P.dim().str(), yn(nd), gs.xi ? gs.xi->str() : "-"});
    o.report.tables.push_back(s);
    if (!integral) o.ok = mr.ok();
    o.report.extra["data"] = premodular_to_json(P);
    return o;
}

// --- classify ----------------------------------------------------------------

Outcome cmd_classify(int workers, bool computed) {
    Outcome o;
    auto rep = classify_ising_products(workers);
    Table t{"Ising products", {"xi", "pairs", "product classes", "integral classes"}, {}};
    auto reps = [&](std::vector<PairClass> cls) {
        if (computed) {
            for (auto& c : cls) std::sort(c.members.begin(), c.members.end());
            std::sort(cls.begin(), cls.end(), [](const PairClass& a, const PairClass& b) { return a.rep() < b.rep(); });
        }
        std::vector<std::pair<int, int>> v;
        for (const auto& c : cls) v.push_back(c.rep());
        return pairs_str(v);
    };
    Table members{"class members", {"xi", "kind", "representative", "members"}, {}};
    for (const auto& row : rep.rows) {
        t.add({row.xi.str(), pairs_str(row.pairs), reps(row.product_classes), reps(row.integral_classes)});
        for (const auto& c : row.product_classes) members.add({row.xi.str(), "product", pairs_str({c.rep()}), pairs_str(c.members)});
        for (const auto& c : row.integral_classes)
            members.add({row.xi.str(), "integral", pairs_str({c.rep()}), pairs_str(c.members)});
    }
    o.report.tables.push_back(t);
    o.report.tables.push_back(members);
    o.report.extra["total_pairs"] = rep.total_pairs;
    o.report.extra["product_classes"] = rep.total_product_classes;
    o.report.extra["integral_classes"] = rep.total_integral_classes;
    o.report.notes.push_back("pairs " + std::to_string(rep.total_pairs) + ", product classes " +
                             std::to_string(rep.total_product_classes) + ", integral classes " +
                             std::to_string(rep.total_integral_classes));
    return o;
}

// --- covers ------------------------------------------------------------------

/// Candidate order used for display: the block holding the all-high row
/// first, then a_2, then a_1, high exponent before low.
std::vector<CoverCandidate> display_order(std::vector<CoverCandidate> cs, bool computed) {
    if (computed || cs.empty()) return cs;
    int hi = 0;
    for (const auto& c : cs)
        for (int a : c.twist_exponents) hi = std::max(hi, a);
    int block_a = -1;
    for (const auto& c : cs)
        if (std::all_of(c.twist_exponents.begin(), c.twist_exponents.end(), [&](int a) { return a == hi; })) block_a = c.block;
    std::stable_sort(cs.begin(), cs.end(), [&](const CoverCandidate& x, const CoverCandidate& y) {
        auto key = [&](const CoverCandidate& c) {
            return std::make_tuple(c.block != block_a, c.twist_exponents[1] != hi, c.twist_exponents[0] != hi);
        };
        return key(x) < key(y);
    });
    return cs;
}

Table s_template(const BraidingData& base) {
    Premodular bp = to_premodular(base);
    std::vector<std::string> labels = bp.ring.labels;
    for (int i = 1; i <= 3; ++i) {
        labels.push_back("y" + std::to_string(i));
        labels.push_back("y" + std::to_string(i) + "'");
    }
    Table t{"S-matrix shape", {"S"}, {}};
    for (const auto& l : labels) t.columns.push_back(l);
    for (int x = 0; x < 11; ++x) {
        std::vector<std::string> row{labels[x]};
        for (int y = 0; y < 11; ++y) {
            std::string v;
            if (x < 5 && y < 5) {
                v = bp.S[x][y].str();
            } else if (x == 4 || y == 4) {
                v = "0";
            } else if (x < 4 || y < 4) {
                int g = std::min(x, y), yy = std::max(x, y);
                int comp = (yy - 5) / 2 + 1;
                v = (g == 0 || g == comp) ? "2" : "-2";
            } else {
                int cx = (x - 5) / 2, cy = (y - 5) / 2;
                if (cx != cy)
                    v = "0";
                else
                    v = std::string(x == y ? "" : "-") + "eps" + std::to_string(cx + 1) + "*2*sqrt2";
            }
            row.push_back(v);
        }
        t.add(row);
    }
    return t;
}

Outcome cmd_cover_chi20(const std::string& alpha, bool computed) {
    Outcome o;
    const Cyc I = root_of_unity(4, 1);
    std::vector<Cyc> alphas;
    if (alpha.empty())
        alphas = {I, -I};
    else
        alphas = {parse_cyc(alpha)};
    Json blocks = Json::array();
    for (const Cyc& a : alphas) {
        if (!(a == I || a == -I)) throw std::invalid_argument("--alpha must be i or -i");
        BraidingData base = chi20_base(a);
        std::string tx = base.theta_x().str();
        auto cands = display_order(chi20_cover_candidates(base), computed);
        std::vector<int> cls(cands.size(), -1);
        int ncls = 0;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (cls[i] >= 0) continue;
            cls[i] = ncls;
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (cls[j] < 0 && data_isomorphic(cands[i].data, cands[j].data)) cls[j] = ncls;
            ++ncls;
        }
        Table shape = s_template(base);
        shape.title = "S-matrix shape, theta_x = " + tx;
        o.report.tables.push_back(shape);
        Table t{"candidates, theta_x = " + tx,
                {"theta_x", "theta_y1", "theta_y1'", "theta_y2", "theta_y2'", "theta_y3", "theta_y3'", "eps1", "eps2", "eps3",
                 "block", "unitary", "Verlinde", "data class"},
                {}};
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const auto& c = cands[i];
            std::vector<std::string> row;
            for (const auto& v : c.t_row()) row.push_back(v.str());
            for (int e : c.eps) row.push_back(sgn(e));
            row.push_back(std::to_string(c.block));
            row.push_back(yn(c.report.unitary));
            row.push_back(yn(c.report.verlinde_integral));
            row.push_back(std::to_string(cls[i] + 1));
            t.add(row);
            if (!c.ok()) o.ok = false;
        }
        o.report.tables.push_back(t);
        o.report.notes.push_back("theta_x = " + tx + ": " + std::to_string(cands.size()) + " candidates, " +
                                 std::to_string(ncls) + " data-isomorphism classes");
        blocks.push_back(Json{{"theta_x", tx}, {"base", braiding_to_json(base)}, {"candidates", cands.size()},
                              {"data_classes", ncls}});
        if (cands.size() != 8) o.ok = false;
    }
    o.report.extra["blocks"] = blocks;
    return o;
}

Outcome cmd_cover_chi_n1(int n, const std::string& spec) {
    Outcome o;
    std::vector<std::pair<std::string, BraidingData>> targets;
    if (!spec.empty()) {
        auto b = braiding_from_json(read_json_file(spec));
        if (b.k() != 1) throw std::invalid_argument("spec must describe a chi_n^1 braiding (k = 1)");
        targets.emplace_back("spec", b);
    } else {
        if (n < 1 || n > 4) throw std::invalid_argument("--n must be between 1 and 4");
        for (const auto& c : enumerate_braiding_classes(n, 1)) targets.emplace_back(c.name, c.rep);
    }
    Table t{"Ising covers", {"braiding", "tau", "alpha", "factors", "taus", "tau product", "alpha product", "q basis",
                             "equivalent"},
            {}};
    for (const auto& [name, b] : targets) {
        auto c = build_cover_chi_n1(b);
        std::vector<std::string> fs, ts;
        for (int k : c.indices) fs.push_back("I" + std::to_string(k));
        for (const auto& x : c.taus) ts.push_back(x.str());
        t.add({name, b.tau.str(), b.alpha.str(), join(fs, " x "), join(ts, " "), yn(c.verification.tau_product),
               yn(c.verification.alpha_product), yn(c.verification.q_basis), yn(c.equivalent_to_input)});
        if (!c.equivalent_to_input || !c.verification.ok) o.ok = false;
    }
    o.report.tables.push_back(t);
    return o;
}

Table trace_table(const std::vector<TraceStep>& steps, const std::string& title) {
    Table t{title, {"step", "ok", "cited", "statement"}, {}};
    for (const auto& s : steps) t.add({s.name, yn(s.ok), yn(s.assumed), s.statement});
    return t;
}

Outcome cmd_cover_obstruct(int n) {
    Outcome o;
    auto r = obstruction_report_chi2n0(n);
    o.report.tables.push_back(trace_table(r.steps, "derivation, n = " + std::to_string(n)));
    Table s{"cover shape", {"FPdim C", "FPdim C_pt", "FPdim D", "d_y^2 candidates", "d_y^2 integral", "orbit", "rank",
                            "N^x_{y,y*}"},
            {}};
    std::vector<std::string> c1, c2;
    for (long d : r.shape.dy2_candidates) c1.push_back(std::to_string(d));
    for (long d : r.shape.dy2_integral) c2.push_back(std::to_string(d));
    s.add({std::to_string(r.shape.base_dim), std::to_string(r.shape.pointed_dim), std::to_string(r.shape.cover_dim),
           join(c1, " "), join(c2, " "), std::to_string(r.shape.orbit), std::to_string(r.shape.rank),
           std::to_string(r.shape.multiplicity)});
    o.report.tables.push_back(s);
    o.report.notes.push_back(r.conclusion);
    o.report.extra["conclusion"] = r.conclusion;
    o.report.extra["candidates"] = r.candidates;
    o.ok = std::all_of(r.steps.begin(), r.steps.end(), [](const TraceStep& x) { return x.ok; });
    return o;
}

// --- extraspecial / doubles --------------------------------------------------

Outcome cmd_extraspecial(long p, int n) {
    Outcome o;
    if (n < 1 || n > 3) throw std::invalid_argument("--n must be between 1 and 3");
    if (!is_prime(p)) throw std::invalid_argument("--p must be prime");
    auto R = extraspecial_ring(p, n);
    auto s = extraspecial_dimension_checks(p, n);
    auto es = is_extraspecial_charring(R);
    Table sum{"ring", {"p", "n", "rank", "invertibles", "noninvertible dim", "FPdim", "grading", "recognized"}, {}};
    sum.add({std::to_string(p), std::to_string(n), std::to_string(R.rank()), std::to_string(R.rank() - (p - 1)),
             R.fpdim.back().str(), s.ring_dim.str(), s.grading,
             es ? "(" + std::to_string(es->first) + "," + std::to_string(es->second) + ")" : "no"});
    o.report.tables.push_back(sum);
    Table dims{"dimensions", {"FPdim C", "FPdim C_pt", "cover", "quotient", "double adjoint"}, {}};
    dims.add({s.ring_dim.str(), s.pointed_dim.str(), s.cover_dim.str(), s.quotient_dim.str(), s.double_ad_dim.str()});
    o.report.tables.push_back(dims);
    o.report.tables.push_back(trace_table(s.steps, "checks"));
    o.ok = s.ok();
    return o;
}

Outcome cmd_double(const std::string& name) {
    Outcome o;
    const auto& G = catalog_group(name);
    auto D = double_untwisted(G);
    o.report.tables.push_back(premodular_objects(D.data, "simples of the double of " + name));
    auto mr = check_modular_axioms(D.data);
    auto gs = gauss_central_charge(D.data);
    Table s{"summary", {"group", "order", "rank", "dim", "modular", "nondegenerate", "central charge"}, {}};
    bool nd = is_nondegenerate(D.data);
    s.add({name, std::to_string(G.order()), std::to_string(D.data.rank()), D.data.dim().str(), yn(mr.ok()), yn(nd),
           gs.xi ? gs.xi->str() : "-"});
    o.report.tables.push_back(s);
    o.ok = mr.ok() && nd && gs.xi && *gs.xi == Cyc(1);
    return o;
}

Outcome cmd_verify_all(std::uint64_t seed, int workers) {
    Outcome o;
    Table t{"suites", {"suite", "checked", "violations", "seconds", "first violation"}, {}};
    for (const auto& r : run_all_suites(seed, workers)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", r.seconds);
        t.add({r.name, std::to_string(r.checked), std::to_string(r.violations), buf, r.detail});
        if (!r.ok()) o.ok = false;
    }
    auto ex = double_subcategory_checks();
    t.add({"subcategories_of_doubles", std::to_string(ex.items.size()), ex.ok() ? "0" : "1", "-", ""});
    if (!ex.ok()) o.ok = false;
    o.report.tables.push_back(t);
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact modular data for braided Tambara-Yamagami categories and their covers", "fuscat"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"md", "json", "csv"}));
    app.add_option("--out", opt.out, "Write output to PATH");
    app.add_option("--seed", opt.seed, "Seed for randomized samples");
    app.add_option("--parallel", opt.parallel, "Worker threads (default FUSCAT_PARALLEL or 1)");
    app.add_option("--sort", opt.sort, "Row order")->check(CLI::IsMember({"standard", "computed"}));

    std::function<Outcome()> action;

    auto* ising_cmd = app.add_subcommand("ising", "Ising braidings");
    ising_cmd->require_subcommand(1);
    ising_cmd->add_subcommand("list", "List the 8 Ising braidings")->callback([&] { action = cmd_ising_list; });

    auto* ty = app.add_subcommand("ty", "Tambara-Yamagami braidings");
    ty->require_subcommand(1);
    int ty_n = 2, ty_k = -1;
    auto* ty_enum = ty->add_subcommand("enum", "Braiding classes");
    ty_enum->add_option("--n", ty_n, "Rank of E_n")->default_val(2);
    ty_enum->add_option("--k", ty_k, "Bicharacter type 0 or 1 (default both)")->check(CLI::IsMember({0, 1}));
    ty_enum->callback([&] { action = [&] { return cmd_ty_enum(ty_n, ty_k); }; });
    auto* ty_center = ty->add_subcommand("center", "Symmetric centers of the braiding classes");
    ty_center->add_option("--n", ty_n, "Rank of E_n")->default_val(2);
    ty_center->add_option("--k", ty_k, "Bicharacter type 0 or 1 (default both)")->check(CLI::IsMember({0, 1}));
    ty_center->callback([&] { action = [&] { return cmd_ty_center(ty_n, ty_k); }; });

    auto* modular = app.add_subcommand("modular", "Premodular data");
    modular->require_subcommand(1);
    std::string in_path;
    auto* check = modular->add_subcommand("check", "Check the modular axioms of a JSON file");
    check->add_option("--in", in_path, "Premodular JSON")->required();
    check->callback([&] { action = [&] { return cmd_modular_check(in_path); }; });

    std::string factors;
    bool integral = false;
    auto* product = app.add_subcommand("product", "Deligne product of Ising braidings");
    product->add_option("--factors", factors, "Comma-separated list such as I1,I7")->required();
    product->add_flag("--integral", integral, "Restrict to the integral subcategory");
    product->callback([&] { action = [&] { return cmd_product(factors, integral); }; });

    auto* classify = app.add_subcommand("classify", "Classifications");
    classify->require_subcommand(1);
    classify->add_subcommand("ising-products", "Classes of products of two Ising braidings")->callback([&] {
        action = [&] { return cmd_classify(opt.parallel, opt.sort == "computed"); };
    });

    auto* cover = app.add_subcommand("cover", "Minimal nondegenerate covers");
    cover->require_subcommand(1);
    std::string alpha, spec;
    int cover_n = 2;
    auto* chi20 = cover->add_subcommand("chi20", "Rank-11 candidates over nonsymmetric chi_2^0 braidings");
    chi20->add_option("--alpha", alpha, "alpha of the base braiding: i or -i (default both)");
    chi20->callback([&] { action = [&] { return cmd_cover_chi20(alpha, opt.sort == "computed"); }; });
    auto* chin1 = cover->add_subcommand("chi-n1", "Ising-product covers of chi_n^1 braidings");
    chin1->add_option("--n", cover_n, "Rank of E_n")->default_val(2);
    chin1->add_option("--spec", spec, "Braiding JSON {n, k, tau_sign, q, alpha_sign}");
    chin1->callback([&] { action = [&] { return cmd_cover_chi_n1(cover_n, spec); }; });
    auto* obstruct = cover->add_subcommand("obstruct", "Derivation trace for chi_2n^0 covers");
    obstruct->add_option("--n", cover_n, "n in chi_2n^0")->default_val(2)->check(CLI::Range(1, 4));
    obstruct->callback([&] { action = [&] { return cmd_cover_obstruct(cover_n); }; });

    long es_p = 3;
    int es_n = 1;
    auto* extra = app.add_subcommand("extraspecial", "Character rings of extraspecial p-groups");
    extra->add_option("--p", es_p, "Prime p")->default_val(3);
    extra->add_option("--n", es_n, "Order p^(2n+1)")->default_val(1);
    extra->callback([&] { action = [&] { return cmd_extraspecial(es_p, es_n); }; });

    std::string group;
    auto* dbl = app.add_subcommand("double", "Untwisted Drinfeld double of a catalog group");
    dbl->add_option("--group", group, "S3, D4, Q8, A4, Z2 or E2")->required();
    dbl->callback([&] { action = [&] { return cmd_double(group); }; });

    auto* verify = app.add_subcommand("verify", "Verification suites");
    verify->require_subcommand(1);
    verify->add_subcommand("all", "Run every suite")->callback([&] {
        action = [&] { return cmd_verify_all(opt.seed, opt.parallel); };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    if (opt.parallel <= 0) opt.parallel = default_workers();
    if (!action) {
        err << app.help();
        return 2;
    }

    Outcome result;
    try {
        result = action();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }

    Format f = parse_format(opt.format);
    if (opt.out.empty()) {
        write_report(out, result.report, f);
    } else {
        std::ofstream file(opt.out);
        if (!file) {
            err << "error: cannot open " << opt.out << " for writing\n";
            return 2;
        }
        write_report(file, result.report, f);
    }
    if (!result.ok) {
        err << "verification failed\n";
        return 1;
    }
    return 0;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace fuscat
