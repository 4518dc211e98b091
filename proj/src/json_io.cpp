#include "fuscat/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace fuscat {

Json cyc_to_json(const Cyc& c) {
    Json coeffs = Json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back({q.get_num().get_str(), q.get_den().get_str()});
    return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

namespace {

mpz_class to_mpz(const Json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace

Cyc cyc_from_json(const Json& j) {
    if (j.is_string()) return parse_cyc(j.get<std::string>());
    if (j.is_number_integer()) return Cyc(j.get<long>());
    if (!j.is_object()) throw std::invalid_argument("bad cyclotomic value: " + j.dump());
    long n = j.at("conductor").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& e : j.at("coeffs")) {
        if (e.is_array()) {
            if (e.size() != 2) throw std::invalid_argument("coefficient must be [num, den]");
            mpz_class den = to_mpz(e[1]);
            if (den == 0) throw std::invalid_argument("zero denominator");
            Rational q(to_mpz(e[0]), den);
            q.canonicalize();
            coeffs.push_back(q);
        } else {
            coeffs.emplace_back(to_mpz(e));
        }
    }
    return Cyc::from_coeffs(n, coeffs);
}

Json ring_to_json(const FusionRing& r) {
    Json N = Json::array();
    for (int x = 0; x < r.rank(); ++x)
        for (int y = 0; y < r.rank(); ++y)
            for (int z = 0; z < r.rank(); ++z)
                if (int n = r.N(x, y, z)) N.push_back({x, y, z, n});
    Json j{{"labels", r.labels}, {"unit", r.unit}, {"dual", r.dual}, {"N", N}};
    Json dims = Json::array();
    for (const auto& d : dims_of(r)) dims.push_back(cyc_to_json(d));
    j["fpdim"] = dims;
    return j;
}

FusionRing ring_from_json(const Json& j) {
    FusionRing r(j.at("labels").get<std::vector<std::string>>(), j.value("unit", 0));
    const int rank = r.rank();
    if (r.unit < 0 || r.unit >= rank) throw std::invalid_argument("unit out of range");
    if (j.contains("dual")) {
        r.dual = j.at("dual").get<std::vector<int>>();
        if (static_cast<int>(r.dual.size()) != rank) throw std::invalid_argument("dual has wrong length");
    }
    for (const auto& e : j.at("N")) {
        auto v = e.get<std::vector<int>>();
        if (v.size() != 4) throw std::invalid_argument("N entries are [x, y, z, n]");
        for (int i = 0; i < 3; ++i)
            if (v[i] < 0 || v[i] >= rank) throw std::invalid_argument("N index out of range");
        r.set(v[0], v[1], v[2], v[3]);
    }
    if (!j.contains("dual"))
        for (int x = 0; x < rank; ++x)
            for (int y = 0; y < rank; ++y)
                if (r.N(x, y, r.unit) == 1) r.dual[x] = y;
    if (j.contains("fpdim"))
        for (const auto& d : j.at("fpdim")) r.fpdim.push_back(cyc_from_json(d));
    return r;
}

Json premodular_to_json(const Premodular& p) {
    Json j = ring_to_json(p.ring);
    Json theta = Json::array();
    for (const auto& t : p.theta) theta.push_back(cyc_to_json(t));
    j["theta"] = theta;
    Json S = Json::array();
    for (const auto& row : p.S) {
        Json jr = Json::array();
        for (const auto& v : row) jr.push_back(cyc_to_json(v));
        S.push_back(jr);
    }
    j["S"] = S;
    return j;
}

Premodular premodular_from_json(const Json& j) {
    FusionRing ring = ring_from_json(j);
    std::vector<Cyc> theta;
    for (const auto& t : j.at("theta")) theta.push_back(cyc_from_json(t));
    if (static_cast<int>(theta.size()) != ring.rank()) throw std::invalid_argument("theta has wrong length");
    if (!j.contains("S")) return make_premodular(std::move(ring), std::move(theta));
    Premodular p;
    if (!ring.has_dims()) ring.fpdim = fp_dims(ring);
    p.ring = std::move(ring);
    p.theta = std::move(theta);
    for (const auto& row : j.at("S")) {
        std::vector<Cyc> r;
        for (const auto& v : row) r.push_back(cyc_from_json(v));
        if (static_cast<int>(r.size()) != p.rank()) throw std::invalid_argument("S row has wrong length");
        p.S.push_back(std::move(r));
    }
    if (static_cast<int>(p.S.size()) != p.rank()) throw std::invalid_argument("S has wrong size");
    return p;
}

Json braiding_to_json(const BraidingData& b) {
    Json q = Json::array();
    for (int j = 0; j < b.n(); ++j) q.push_back(b.q[1u << j].str());
    Json out{{"n", b.n()}, {"k", b.k()}, {"tau_sign", b.tau_sign()}, {"q", q}};
    out["alpha_sign"] = b.epsilon();
    out["alpha"] = b.alpha.str();
    return out;
}

BraidingData braiding_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    int ts = j.at("tau_sign").get<int>();
    int as = j.value("alpha_sign", 1);
    if (n < 1 || n > 8) throw std::invalid_argument("n out of range");
    if ((ts != 1 && ts != -1) || (as != 1 && as != -1)) throw std::invalid_argument("signs must be +-1");
    auto chi = bicharacter(n, k);
    std::vector<Cyc> vals;
    for (const auto& v : j.at("q")) vals.push_back(cyc_from_json(v));
    QuadraticForm q;
    if (static_cast<int>(vals.size()) == (1 << n)) {
        q = vals;
    } else if (static_cast<int>(vals.size()) == n) {
        // extend from the generators by polarization
        q.assign(1u << n, Cyc(1));
        for (unsigned g = 1; g < (1u << n); ++g) {
            unsigned low = g & (~g + 1u);
            unsigned rest = g ^ low;
            int j0 = __builtin_ctz(low);
            q[g] = q[rest] * vals[j0] * Cyc(static_cast<long>(chi(rest, low)));
        }
    } else {
        throw std::invalid_argument("q must list n or 2^n values");
    }
    return make_braiding(n, k, ts, q, as);
}

Json modular_report_to_json(const ModularReport& r) {
    return Json{{"twists_valid", r.twists_valid}, {"symmetric", r.symmetric},     {"dims_match", r.dims_match},
                {"balancing", r.balancing},       {"unitary", r.unitary},         {"verlinde_integral", r.verlinde_integral},
                {"ok", r.ok()},                   {"counterexample", r.counterexample}, {"detail", r.detail}};
}

Json validation_to_json(const ValidationReport& r) {
    Json j = Json::object();
    for (const auto& c : r.checks) j[c.axiom] = Json{{"ok", c.ok}, {"counterexample", c.counterexample}, {"detail", c.detail}};
    j["ok"] = r.ok();
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace fuscat
