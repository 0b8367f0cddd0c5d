#include "qalg/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qalg {

namespace {

std::atomic<unsigned> g_order_ceiling{2520};

using Poly = std::vector<Rational>; // ascending degree

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// Euclidean division over Q; returns remainder, stores quotient if requested.
Poly poly_rem(Poly a, const Poly& b, Poly* quot = nullptr) {
    trim(a);
    if (b.empty()) throw Error("polynomial division by zero");
    Poly q;
    if (quot) q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    const Rational lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / lead;
        size_t shift = a.size() - b.size();
        if (quot) q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    if (quot) {
        trim(q);
        *quot = std::move(q);
    }
    return a;
}

// Extended gcd over Q[z]: returns g and u with u*a + v*b = g (v discarded).
void poly_ext_gcd(Poly a, Poly b, Poly& g, Poly& u) {
    Poly u0{Rational(1)}, u1;
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly q;
        Poly r = poly_rem(a, b, &q);
        a = std::move(b);
        b = std::move(r);
        Poly nu = u0;
        Poly qu1 = poly_mul(q, u1);
        if (nu.size() < qu1.size()) nu.resize(qu1.size(), Rational(0));
        for (size_t i = 0; i < qu1.size(); ++i) nu[i] -= qu1[i];
        trim(nu);
        u0 = std::move(u1);
        u1 = std::move(nu);
    }
    g = std::move(a);
    u = std::move(u0);
}

std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

} // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
    for (unsigned d : divisors_of(n)) {
        if (cache.count(d)) continue;
        Poly num(d + 1, Rational(0));
        num[0] = -1;
        num[d] = 1;
        for (unsigned e : divisors_of(d)) {
            if (e == d) continue;
            Poly q;
            Poly r = poly_rem(num, cache.at(e), &q);
            if (!r.empty()) throw Error("cyclotomic polynomial division not exact");
            num = std::move(q);
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

void set_order_ceiling(unsigned ceiling) { g_order_ceiling.store(ceiling); }
unsigned order_ceiling() { return g_order_ceiling.load(); }

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> raw_coeffs) : order_(order) {
    if (order == 0) throw Error("cyclotomic order must be positive");
    const Poly& phi = cyclotomic_polynomial(order);
    Poly r = poly_rem(std::move(raw_coeffs), phi);
    r.resize(phi.size() - 1, Rational(0));
    coeffs_ = std::move(r);
}

Cyclotomic Cyclotomic::zeta(unsigned order) { return root_power(order, 1); }

Cyclotomic Cyclotomic::root_power(unsigned order, long power) {
    if (order == 0) throw Error("cyclotomic order must be positive");
    long k = power % static_cast<long>(order);
    if (k < 0) k += order;
    std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
    c[static_cast<size_t>(k)] = 1;
    return Cyclotomic(order, std::move(c));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& q) { return q == 0; });
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("cyclotomic value is not rational: " + to_string());
    return coeffs_[0];
}

bool Cyclotomic::is_integer() const {
    return is_rational() && coeffs_[0].get_den() == 1;
}

Cyclotomic Cyclotomic::embedded(unsigned m) const {
    if (m == order_) return *this;
    if (m % order_ != 0)
        throw Error("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                    std::to_string(m) + ")");
    unsigned stride = m / order_;
    std::vector<Rational> raw(static_cast<size_t>(coeffs_.size() - 1) * stride + 1, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) raw[k * stride] = coeffs_[k];
    return Cyclotomic(m, std::move(raw));
}

void Cyclotomic::unify(Cyclotomic& a, Cyclotomic& b) {
    if (a.order_ == b.order_) return;
    unsigned l = std::lcm(a.order_, b.order_);
    if (l > order_ceiling())
        throw Error("cyclotomic order " + std::to_string(l) + " exceeds ceiling " +
                    std::to_string(order_ceiling()));
    a = a.embedded(l);
    b = b.embedded(l);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    Cyclotomic b = rhs;
    unify(*this, b);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    Cyclotomic b = rhs;
    unify(*this, b);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    Cyclotomic b = rhs;
    unify(*this, b);
    Poly prod = poly_mul(coeffs_, b.coeffs_);
    *this = Cyclotomic(order_, std::move(prod));
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
    *this *= rhs.inverse();
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error("division by zero in Q(zeta_" + std::to_string(order_) + ")");
    if (is_rational()) return Cyclotomic(order_, {Rational(1) / coeffs_[0]});
    Poly g, u;
    poly_ext_gcd(coeffs_, cyclotomic_polynomial(order_), g, u);
    if (g.size() != 1) throw Error("inverse failed: gcd with Phi_n not constant");
    for (auto& c : u) c /= g[0];
    return Cyclotomic(order_, std::move(u));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this;
    Cyclotomic r(Rational(1));
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Cyclotomic Cyclotomic::galois(unsigned k) const {
    k %= order_;
    if (std::gcd(k, order_) != 1)
        throw Error("galois exponent " + std::to_string(k) + " not coprime to order " +
                    std::to_string(order_));
    std::vector<Rational> raw(order_, Rational(0));
    for (size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0) continue;
        raw[(t * k) % order_] += coeffs_[t];
    }
    return Cyclotomic(order_, std::move(raw));
}

Cyclotomic Cyclotomic::conjugate() const {
    if (order_ <= 2) return *this;
    return galois(order_ - 1);
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    if (order_ == rhs.order_) return coeffs_ == rhs.coeffs_;
    Cyclotomic a = *this, b = rhs;
    unify(a, b);
    return a.coeffs_ == b.coeffs_;
}

int Cyclotomic::compare_key(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_ ? -1 : 1;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error("empty rational literal");
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Integer num(s, 10);
            return Rational(num);
        }
        Integer num(s.substr(0, slash), 10);
        Integer den(s.substr(slash + 1), 10);
        if (den == 0) throw Error("rational with zero denominator: " + text);
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: " + text);
    }
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        bool neg = sgn(c) < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (k == 0) {
            os << rational_to_string(mag);
        } else {
            if (mag != 1) os << rational_to_string(mag) << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

struct ScalarScanner {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarScanner(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw Error("expected digits in scalar: " + s);
        return s.substr(start, pos - start);
    }
};

} // namespace

Cyclotomic Cyclotomic::parse(const std::string& text, unsigned order) {
    ScalarScanner sc(text);
    Cyclotomic total(order, {Rational(0)});
    bool any = false;
    int sign = 1;
    if (sc.eat('-')) sign = -1;
    else sc.eat('+');
    while (true) {
        // term: rational ['*' zpow] | zpow
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            std::string num = sc.number();
            if (sc.eat('/')) {
                std::string den = sc.number();
                coeff = parse_rational(num + "/" + den);
            } else {
                coeff = parse_rational(num);
            }
            have_coeff = true;
        }
        long power = 0;
        bool have_z = false;
        if (have_coeff) sc.eat('*');
        if (sc.peek() == 'z') {
            sc.eat('z');
            have_z = true;
            power = 1;
            if (sc.eat('^')) power = std::stol(sc.number());
        }
        if (!have_coeff && !have_z) throw Error("malformed scalar: " + text);
        Cyclotomic term = have_z ? Cyclotomic(root_power(order, power)) : Cyclotomic(order, {Rational(1)});
        Cyclotomic scaled = term;
        {
            std::vector<Rational> cs = scaled.coeffs();
            for (auto& c : cs) c *= coeff * sign;
            scaled = Cyclotomic(order, std::move(cs));
        }
        total += scaled;
        any = true;
        if (sc.done()) break;
        if (sc.eat('+')) sign = 1;
        else if (sc.eat('-')) sign = -1;
        else throw Error("unexpected character in scalar: " + text);
    }
    if (!any) throw Error("empty scalar: " + text);
    return total;
}

void Cyclotomic::approx(double& re, double& im) const {
    re = 0.0;
    im = 0.0;
    const double tau = 6.283185307179586476925287;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        double c = coeffs_[k].get_d();
        re += c * std::cos(tau * static_cast<double>(k) / order_);
        im += c * std::sin(tau * static_cast<double>(k) / order_);
    }
}

Cyclotomic operator*(const Rational& q, Cyclotomic c) {
    std::vector<Rational> cs = c.coeffs();
    for (auto& x : cs) x *= q;
    return Cyclotomic(c.order(), std::move(cs));
}

} // namespace qalg
