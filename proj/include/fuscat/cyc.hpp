#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuscat {

using Rational = mpq_class;

class division_by_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact element of a cyclotomic field Q(zeta_N).
///
/// Values are kept in a unique canonical form: the smallest conductor N
/// (never 2 mod 4) whose field contains the value, with coordinates in the
/// power basis 1, z, ..., z^(phi(N)-1). Numerators are integers sharing one
/// positive denominator.
class Cyc {
public:
    Cyc();
    Cyc(long v);  // NOLINT(google-explicit-constructor)
    Cyc(const Rational& q);  // NOLINT(google-explicit-constructor)

    /// Builds sum_i coeffs[i] * zeta_N^i. Any length is accepted; indices
    /// are read mod N.
    static Cyc from_coeffs(long conductor, const std::vector<Rational>& coeffs);

    long conductor() const { return n_; }
    /// Canonical coefficients, length conductor(), indexed by zeta_N^i.
    std::vector<Rational> coeffs() const;

    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    Rational rational_value() const;
    bool is_real() const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }
    /// Total order on canonical forms (not the real order).
    bool operator<(const Cyc& o) const;

    Cyc conj() const;
    /// Galois automorphism zeta -> zeta^k, gcd(k, conductor) = 1.
    Cyc galois(long k) const;
    Cyc inverse() const;

    std::complex<double> approx() const;
    std::size_t hash() const;

    /// Display string, e.g. "z16^5", "-1/2", "sqrt2/2", "4*sqrt2*z8".
    std::string str() const;

private:
    long n_ = 1;
    std::vector<mpz_class> num_;  // length phi(n_)
    mpz_class den_ = 1;

    static Cyc canonical(long n, std::vector<mpz_class> full, mpz_class den);
    friend struct CycAccess;
};

struct CycHash {
    std::size_t operator()(const Cyc& c) const { return c.hash(); }
};

enum class ArithOp { add, sub, mul, div };

Cyc cyc_arith(const Cyc& a, const Cyc& b, ArithOp op);

/// zeta_N^k with zeta_N = exp(2 pi i / N). Throws std::invalid_argument for N < 1.
Cyc root_of_unity(long n, long k = 1);

/// sqrt(2) = zeta_8 + zeta_8^-1.
const Cyc& sqrt2();

/// Principal square root of a rational: positive real for q > 0, i*sqrt(-q) for q < 0.
Cyc sqrt_rational(const Rational& q);

Cyc pow(const Cyc& a, long e);

struct RootOfUnity {
    long order;     // multiplicative order m
    long exponent;  // value is zeta_m^exponent, gcd(exponent, m) = 1
};

std::optional<RootOfUnity> as_root_of_unity(const Cyc& a);

/// Principal square root of a root of unity (argument in (-pi/2, pi/2]).
Cyc principal_sqrt_root_of_unity(const Cyc& a);

struct ValueClass {
    bool is_real = false;
    bool is_rational = false;
    std::optional<Rational> rational_value;
    std::optional<long> root_order;
};

ValueClass classify_value(const Cyc& a);

/// Writes a as p + q*sqrt2 with rational p, q when possible.
std::optional<std::pair<Rational, Rational>> as_quadratic_sqrt2(const Cyc& a);

/// Parses the display grammar produced by Cyc::str().
Cyc parse_cyc(const std::string& text);

std::string rational_str(const Rational& q);

long euler_phi(long n);
std::vector<long> prime_factors(long n);

}  // namespace fuscat
