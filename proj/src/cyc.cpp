#include "fuscat/cyc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace fuscat {

long euler_phi(long n) {
    long result = n;
    for (long p : prime_factors(n)) result = result / p * (p - 1);
    return result;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Extended gcd: returns (s, t) with s*a + t*b = gcd(a, b).
std::pair<long, long> bezout(long a, long b) {
    long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        long q = a / b;
        long r = a - q * b;
        a = b;
        b = r;
        long s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        long t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    return {s0, t0};
}

const std::vector<long>& cyclotomic_poly(long n) {
    thread_local std::unordered_map<long, std::vector<long>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<long> div = cyclotomic_poly(d);
        long dd = static_cast<long>(div.size()) - 1;
        long deg = static_cast<long>(poly.size()) - 1;
        std::vector<long> quot(deg - dd + 1, 0);
        for (long i = deg; i >= dd; --i) {
            long c = poly[i];
            quot[i - dd] = c;
            if (c == 0) continue;
            for (long j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
        }
        poly = std::move(quot);
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

// Reduces a vector of exponent coefficients (length >= phi(n), indices < n)
// modulo Phi_n. Result has length phi(n).
void reduce_mod_phi(std::vector<mpz_class>& v, long n) {
    const std::vector<long>& phi_poly = cyclotomic_poly(n);
    long deg = static_cast<long>(phi_poly.size()) - 1;
    mpz_class t;
    for (long i = static_cast<long>(v.size()) - 1; i >= deg; --i) {
        if (sgn(v[i]) == 0) continue;
        t = v[i];
        for (long j = 0; j <= deg; ++j) {
            long c = phi_poly[j];
            if (c == 0) continue;
            if (c > 0)
                mpz_submul_ui(v[i - deg + j].get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(c));
            else
                mpz_addmul_ui(v[i - deg + j].get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(-c));
        }
    }
    v.resize(deg);
}

// Rewrites a full exponent vector over zeta_{2m} (m odd) over zeta_m,
// using zeta_{2m} = -zeta_m^{(m+1)/2}.
std::vector<mpz_class> fold_twice_odd(const std::vector<mpz_class>& v, long n) {
    long m = n / 2;
    std::vector<mpz_class> out(m);
    long half = (m + 1) / 2;
    for (long i = 0; i < static_cast<long>(v.size()); ++i) {
        if (sgn(v[i]) == 0) continue;
        long e = mod(i * half, m);
        if (i % 2 == 0)
            out[e] += v[i];
        else
            out[e] -= v[i];
    }
    return out;
}

bool all_zero(const std::vector<mpz_class>& v) {
    return std::all_of(v.begin(), v.end(), [](const mpz_class& z) { return sgn(z) == 0; });
}

// Attempts to rewrite a reduced vector over zeta_n as an element of a
// smaller cyclotomic field by removing one factor p of n.
bool try_descend(long& n, std::vector<mpz_class>& v, long p) {
    long m = n / p;
    if (m % p == 0) {
        // Power basis of Q(zeta_n) is zeta_m^j * zeta_n^r, r < p.
        for (long i = 0; i < static_cast<long>(v.size()); ++i)
            if (i % p != 0 && sgn(v[i]) != 0) return false;
        std::vector<mpz_class> w(v.size() / p);
        for (long j = 0; j < static_cast<long>(w.size()); ++j) w[j] = v[p * j];
        if (m % 4 == 2) {
            w.resize(m);
            w = fold_twice_odd(w, m);
            m /= 2;
            reduce_mod_phi(w, m);
        }
        n = m;
        v = std::move(w);
        return true;
    }
    // p exactly divides n and p is odd: split zeta_n = zeta_m^s zeta_p^t.
    auto [s, t] = bezout(p, m);  // s*p + t*m = 1
    std::vector<std::vector<mpz_class>> parts(p, std::vector<mpz_class>(m));
    for (long i = 0; i < static_cast<long>(v.size()); ++i) {
        if (sgn(v[i]) == 0) continue;
        parts[mod(t * i, p)][mod(s * i, m)] += v[i];
    }
    // v = sum_r A_r zeta_p^r = sum_{r>=1} (A_r - A_0) zeta_p^r; this lies in
    // Q(zeta_m) iff all differences agree, and then equals -(A_1 - A_0).
    std::vector<mpz_class> first;
    for (long r = 1; r < p; ++r) {
        std::vector<mpz_class> b(m);
        for (long e = 0; e < m; ++e) b[e] = parts[r][e] - parts[0][e];
        reduce_mod_phi(b, m);
        if (r == 1) {
            first = std::move(b);
        } else if (b != first) {
            return false;
        }
    }
    for (auto& z : first) z = -z;
    n = m;
    v = std::move(first);
    return true;
}

}  // namespace

Cyc Cyc::canonical(long n, std::vector<mpz_class> full, mpz_class den) {
    if (full.size() < static_cast<std::size_t>(n)) full.resize(n);
    if (n % 4 == 2) {
        full = fold_twice_odd(full, n);
        n /= 2;
    }
    reduce_mod_phi(full, n);
    bool progress = true;
    while (progress && n > 1) {
        progress = false;
        for (long p : prime_factors(n)) {
            if (try_descend(n, full, p)) {
                progress = true;
                break;
            }
        }
    }
    Cyc out;
    if (all_zero(full)) return out;
    mpz_class g = den;
    for (const auto& z : full) {
        if (sgn(z) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(den) < 0) g = -abs(g);
    if (g != 1) {
        for (auto& z : full) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    out.n_ = n;
    out.num_ = std::move(full);
    out.den_ = std::move(den);
    return out;
}

Cyc::Cyc() : num_{0} {}

Cyc::Cyc(long v) : num_{mpz_class(v)} {}

Cyc::Cyc(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    num_ = {c.get_num()};
    den_ = c.get_den();
}

Cyc Cyc::from_coeffs(long conductor, const std::vector<Rational>& coeffs) {
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    mpz_class den = 1;
    for (const auto& q : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> full(conductor);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        full[i % conductor] += coeffs[i].get_num() * (den / coeffs[i].get_den());
    }
    return canonical(conductor, std::move(full), den);
}

std::vector<Rational> Cyc::coeffs() const {
    std::vector<Rational> out(n_);
    for (std::size_t i = 0; i < num_.size(); ++i) {
        out[i] = Rational(num_[i], den_);
        out[i].canonicalize();
    }
    return out;
}

bool Cyc::is_zero() const { return n_ == 1 && sgn(num_[0]) == 0; }

Rational Cyc::rational_value() const {
    if (n_ != 1) throw std::domain_error("value is not rational: " + str());
    Rational q(num_[0], den_);
    q.canonicalize();
    return q;
}

bool Cyc::is_real() const { return conj() == *this; }

Cyc Cyc::operator-() const {
    Cyc out = *this;
    for (auto& z : out.num_) z = -z;
    return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long l = std::lcm(n_, o.n_);
    std::vector<mpz_class> full(l);
    long sa = l / n_, sb = l / o.n_;
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (sgn(num_[i]) != 0) full[i * sa] = num_[i] * o.den_;
    for (std::size_t j = 0; j < o.num_.size(); ++j)
        if (sgn(o.num_[j]) != 0) mpz_addmul(full[j * sb].get_mpz_t(), o.num_[j].get_mpz_t(), den_.get_mpz_t());
    *this = canonical(l, std::move(full), den_ * o.den_);
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc operator*(const Cyc& a, const Cyc& b) {
    if (a.is_zero() || b.is_zero()) return Cyc();
    if (b.n_ == 1) {
        Cyc out = a;
        for (auto& z : out.num_) z *= b.num_[0];
        return Cyc::canonical(out.n_, std::move(out.num_), out.den_ * b.den_);
    }
    if (a.n_ == 1) return b * a;
    long l = std::lcm(a.n_, b.n_);
    long sa = l / a.n_, sb = l / b.n_;
    std::vector<mpz_class> full(l);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (sgn(a.num_[i]) == 0) continue;
        long base = static_cast<long>(i) * sa;
        for (std::size_t j = 0; j < b.num_.size(); ++j) {
            if (sgn(b.num_[j]) == 0) continue;
            long idx = (base + static_cast<long>(j) * sb) % l;
            mpz_addmul(full[idx].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        }
    }
    return Cyc::canonical(l, std::move(full), a.den_ * b.den_);
}

Cyc& Cyc::operator*=(const Cyc& o) { return *this = *this * o; }

Cyc& Cyc::operator/=(const Cyc& o) { return *this = *this * o.inverse(); }

bool Cyc::operator==(const Cyc& o) const { return n_ == o.n_ && den_ == o.den_ && num_ == o.num_; }

bool Cyc::operator<(const Cyc& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (den_ != o.den_) return den_ < o.den_;
    return num_ < o.num_;
}

Cyc Cyc::galois(long k) const {
    if (n_ == 1) return *this;
    long kk = mod(k, n_);
    if (std::gcd(kk, n_) != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
    std::vector<mpz_class> full(n_);
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (sgn(num_[i]) != 0) full[(static_cast<long>(i) * kk) % n_] = num_[i];
    return canonical(n_, std::move(full), den_);
}

Cyc Cyc::conj() const { return galois(-1); }

Cyc Cyc::inverse() const {
    if (is_zero()) throw division_by_zero("division by zero in cyclotomic arithmetic");
    if (n_ == 1) {
        Rational r(den_, num_[0]);
        r.canonicalize();
        return Cyc(r);
    }
    Cyc prod(1);
    for (long k = 2; k < n_; ++k)
        if (std::gcd(k, n_) == 1) prod *= galois(k);
    Cyc norm = *this * prod;
    return prod * Cyc(1 / norm.rational_value());
}

std::complex<double> Cyc::approx() const {
    std::complex<double> acc = 0;
    double d = den_.get_d();
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (sgn(num_[i]) == 0) continue;
        double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_);
        acc += (num_[i].get_d() / d) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::size_t Cyc::hash() const {
    std::size_t h = std::hash<long>()(n_);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(mpz_get_ui(den_.get_mpz_t()));
    for (const auto& z : num_) mix(static_cast<std::size_t>(mpz_get_si(z.get_mpz_t())));
    return h;
}

Cyc cyc_arith(const Cyc& a, const Cyc& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

Cyc root_of_unity(long n, long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: N must be positive");
    std::vector<Rational> c(n);
    c[mod(k, n)] = 1;
    return Cyc::from_coeffs(n, c);
}

const Cyc& sqrt2() {
    static const Cyc value = root_of_unity(8, 1) + root_of_unity(8, 7);
    return value;
}

namespace {

int legendre(long a, long p) {
    long r = 1, base = mod(a, p), e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

Cyc sqrt_prime(long p) {
    if (p == 2) return sqrt2();
    Cyc g;
    for (long a = 1; a < p; ++a) g += Cyc(legendre(a, p)) * root_of_unity(p, a);
    // Quadratic Gauss sum: g = sqrt(p) for p = 1 mod 4, i*sqrt(p) otherwise.
    if (p % 4 == 1) return g;
    return -(root_of_unity(4, 1) * g);
}

}  // namespace

Cyc sqrt_rational(const Rational& q) {
    if (sgn(q) == 0) return Cyc();
    if (sgn(q) < 0) return root_of_unity(4, 1) * sqrt_rational(-q);
    mpz_class prod = q.get_num() * q.get_den();
    mpz_class square = 1;
    Cyc root(1);
    mpz_class rest = prod;
    for (unsigned long p = 2; mpz_class(p) * p <= rest; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square *= p;
        if (e % 2 == 1) root *= sqrt_prime(static_cast<long>(p));
    }
    if (rest > 1) {
        if (!rest.fits_slong_p()) throw std::domain_error("sqrt_rational: radicand too large");
        root *= sqrt_prime(rest.get_si());
    }
    return root * Cyc(Rational(square, q.get_den()));
}

Cyc pow(const Cyc& a, long e) {
    if (e < 0) return pow(a.inverse(), -e);
    Cyc result(1), base = a;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

std::optional<RootOfUnity> as_root_of_unity(const Cyc& a) {
    if (a.is_zero()) return std::nullopt;
    if (!(a * a.conj() == Cyc(1))) return std::nullopt;
    long n = a.conductor();
    long m = n % 2 == 0 ? n : 2 * n;
    auto z = a.approx();
    double ang = std::atan2(z.imag(), z.real());
    long k = mod(std::lround(ang / (2.0 * M_PI) * static_cast<double>(m)), m);
    if (!(root_of_unity(m, k) == a)) return std::nullopt;
    long g = std::gcd(k, m);
    if (k == 0) return RootOfUnity{1, 0};
    return RootOfUnity{m / g, k / g};
}

Cyc principal_sqrt_root_of_unity(const Cyc& a) {
    auto r = as_root_of_unity(a);
    if (!r) throw std::domain_error("principal_sqrt_root_of_unity: not a root of unity: " + a.str());
    long m = r->order, k = r->exponent;
    if (m == 1) return Cyc(1);
    // a = zeta_m^k with 0 <= k < m; arg(a) = 2 pi k / m.
    if (2 * k <= m) return root_of_unity(2 * m, k);
    return root_of_unity(2 * m, k + m);
}

ValueClass classify_value(const Cyc& a) {
    ValueClass out;
    out.is_rational = a.is_rational();
    out.is_real = a.is_real();
    if (out.is_rational) out.rational_value = a.rational_value();
    if (auto r = as_root_of_unity(a)) out.root_order = r->order;
    return out;
}

std::optional<std::pair<Rational, Rational>> as_quadratic_sqrt2(const Cyc& a) {
    if (a.is_rational()) return std::make_pair(a.rational_value(), Rational(0));
    if (a.conductor() != 8) return std::nullopt;
    auto c = a.coeffs();
    // sqrt2 = z8 - z8^3 in the power basis of Q(zeta_8).
    if (sgn(c[2]) != 0 || c[3] != -c[1]) return std::nullopt;
    return std::make_pair(c[0], c[1]);
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string root_str(const RootOfUnity& r) {
    if (r.order == 1) return "1";
    if (r.order == 2) return "-1";
    if (r.order == 4) return r.exponent == 1 ? "i" : "-i";
    std::string s = "z" + std::to_string(r.order);
    if (r.exponent != 1) s += "^" + std::to_string(r.exponent);
    return s;
}

// Formats q*atom, atom being a nonempty symbol, e.g. "sqrt2/2", "-3*sqrt2".
std::string scaled(const Rational& q, const std::string& atom) {
    std::string sign = sgn(q) < 0 ? "-" : "";
    mpz_class num = abs(q.get_num());
    std::string s = sign;
    if (num != 1) s += num.get_str() + "*";
    s += atom;
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

std::string join_signed(const std::vector<std::string>& terms) {
    std::string out;
    for (const auto& t : terms) {
        if (out.empty())
            out = t;
        else if (!t.empty() && t[0] == '-')
            out += t;
        else
            out += "+" + t;
    }
    return out;
}

}  // namespace

std::string Cyc::str() const {
    if (is_rational()) return rational_str(rational_value());
    if (auto r = as_root_of_unity(*this)) return root_str(*r);
    if (auto qs = as_quadratic_sqrt2(*this)) {
        std::vector<std::string> terms;
        if (sgn(qs->first) != 0) terms.push_back(rational_str(qs->first));
        terms.push_back(scaled(qs->second, "sqrt2"));
        return join_signed(terms);
    }
    Cyc square = *this * *this;
    if (square.is_rational() && sgn(square.rational_value()) > 0) {
        // Pure radical c*sqrt(d) with d squarefree.
        Rational r = square.rational_value();
        mpz_class rad = r.get_num() * r.get_den();
        mpz_class d = 1;
        for (unsigned long p = 2; mpz_class(p) * p <= rad; ++p) {
            int e = 0;
            while (mpz_divisible_ui_p(rad.get_mpz_t(), p)) {
                mpz_divexact_ui(rad.get_mpz_t(), rad.get_mpz_t(), p);
                ++e;
            }
            if (e % 2 == 1) d *= p;
        }
        d *= rad;
        Cyc c = *this / sqrt_rational(Rational(d));
        if (c.is_rational()) return scaled(c.rational_value(), "sqrt" + d.get_str());
    }
    Cyc norm = *this * conj();
    if (norm.is_rational()) {
        Rational nr = norm.rational_value();
        for (int with_sqrt2 = 0; with_sqrt2 < 2; ++with_sqrt2) {
            Rational target = with_sqrt2 ? nr / 2 : nr;
            mpz_class sn, sd;
            if (!mpz_perfect_square_p(target.get_num_mpz_t()) || !mpz_perfect_square_p(target.get_den_mpz_t()))
                continue;
            mpz_sqrt(sn.get_mpz_t(), target.get_num_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), target.get_den_mpz_t());
            Rational mag(sn, sd);
            Cyc scale = with_sqrt2 ? Cyc(mag) * sqrt2() : Cyc(mag);
            auto r = as_root_of_unity(*this / scale);
            if (!r) continue;
            std::string atom = with_sqrt2 ? "sqrt2" : "";
            std::string root = root_str(*r);
            bool neg = false;
            if (root == "-1") {
                neg = true;
                root.clear();
            } else if (root == "-i") {
                neg = true;
                root = "i";
            }
            if (!atom.empty() && !root.empty()) atom += "*" + root;
            else if (atom.empty()) atom = root;
            return scaled(neg ? Rational(-mag) : mag, atom);
        }
    }
    std::vector<std::string> terms;
    auto c = coeffs();
    for (long i = 0; i < n_; ++i) {
        if (sgn(c[i]) == 0) continue;
        if (i == 0) {
            terms.push_back(rational_str(c[i]));
            continue;
        }
        std::string atom = "z" + std::to_string(n_);
        if (i != 1) atom += "^" + std::to_string(i);
        terms.push_back(scaled(c[i], atom));
    }
    return join_signed(terms);
}

namespace {

Cyc parse_factor(const std::string& f) {
    if (f.empty()) throw std::invalid_argument("empty factor in cyclotomic literal");
    if (std::all_of(f.begin(), f.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return Cyc(Rational(mpz_class(f)));
    if (f == "i") return root_of_unity(4, 1);
    if (f.rfind("sqrt", 0) == 0) return sqrt_rational(Rational(mpz_class(f.substr(4))));
    if (f[0] == 'z') {
        auto caret = f.find('^');
        long n = std::stol(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        long k = caret == std::string::npos ? 1 : std::stol(f.substr(caret + 1));
        return root_of_unity(n, k);
    }
    throw std::invalid_argument("unrecognized factor '" + f + "' in cyclotomic literal");
}

Cyc parse_term(const std::string& t) {
    Cyc value(1);
    std::size_t start = 0;
    while (start <= t.size()) {
        std::size_t star = t.find('*', start);
        std::string part = t.substr(start, star == std::string::npos ? std::string::npos : star - start);
        auto slash = part.find('/');
        if (slash != std::string::npos) {
            value *= parse_factor(part.substr(0, slash));
            value /= Cyc(Rational(mpz_class(part.substr(slash + 1))));
        } else {
            value *= parse_factor(part);
        }
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return value;
}

}  // namespace

Cyc parse_cyc(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty cyclotomic literal");
    Cyc total;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') {
            if (s[j] == '^') ++j;  // exponent may carry its own sign
            ++j;
        }
        Cyc term = parse_term(s.substr(i, j - i));
        total += sign > 0 ? term : -term;
        i = j;
    }
    return total;
}

}  // namespace fuscat
