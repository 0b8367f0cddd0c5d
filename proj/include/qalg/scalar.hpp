#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qalg/error.hpp"

namespace qalg {

using Integer  = mpz_class;
using Rational = mpq_class;

/// Euler totient.
unsigned euler_phi(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial Phi_n, ascending degree,
/// length phi(n)+1, monic. Results are memoized; safe for concurrent use.
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

/// Process-wide ceiling for cyclotomic orders produced by lcm merging.
/// Exceeding it raises qalg::Error instead of silently blowing up.
void     set_order_ceiling(unsigned ceiling);
unsigned order_ceiling();

/**
 * An element of the cyclotomic field Q(zeta_n), stored as a polynomial in
 * zeta_n reduced modulo Phi_n. The representation is canonical: the
 * coefficient vector always has length phi(n), so equality at a common order
 * is coefficientwise. Binary operations merge orders via lcm. Values are
 * immutable after construction; every operation is a pure function.
 */
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& q) : order_(1), coeffs_(1, q) {}
    explicit Cyclotomic(long v) : order_(1), coeffs_(1, Rational(v)) {}

    /// Builds from an arbitrary-degree coefficient vector (powers of zeta_order),
    /// reducing modulo Phi_order.
    Cyclotomic(unsigned order, std::vector<Rational> raw_coeffs);

    /// The generator zeta_n.
    static Cyclotomic zeta(unsigned order);

    /// zeta_order^power.
    static Cyclotomic root_power(unsigned order, long power);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in Q (all non-constant coefficients vanish).
    bool is_rational() const;
    /// The rational value; requires is_rational().
    Rational rational_value() const;
    /// True when the value is a rational integer.
    bool is_integer() const;

    /// Reinterprets in Q(zeta_m); requires order() | m.
    Cyclotomic embedded(unsigned m) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    /// Multiplicative inverse; requires a nonzero value.
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    /// Galois map zeta -> zeta^k for gcd(k, order) = 1.
    Cyclotomic galois(unsigned k) const;
    /// Complex conjugation zeta -> zeta^{-1}; an involutive field automorphism.
    Cyclotomic conjugate() const;

    bool operator==(const Cyclotomic& rhs) const;
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    /// Total order for canonical sorting (not a field order): compares the
    /// pair (order, coefficient vector) lexicographically.
    static int compare_key(const Cyclotomic& a, const Cyclotomic& b);

    /// Canonical text form: "0", "5/2", "1 - z + 2*z^3", ...
    /// parse(to_string(), order()) round-trips exactly.
    std::string to_string() const;

    /// Parses the polynomial syntax used by all file formats; powers of z are
    /// interpreted modulo `order` and the result is reduced mod Phi_order.
    static Cyclotomic parse(const std::string& text, unsigned order);

    /// Numeric approximation at zeta = exp(2*pi*i/order); display only.
    void approx(double& re, double& im) const;

private:
    unsigned order_;
    std::vector<Rational> coeffs_; // length euler_phi(order_), reduced mod Phi

    static void unify(Cyclotomic& a, Cyclotomic& b);
};

Cyclotomic operator*(const Rational& q, Cyclotomic c);

/// Parses "p/q" or "p"; throws qalg::Error on malformed input.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

} // namespace qalg
