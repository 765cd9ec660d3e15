#pragma once

// Dense univariate polynomials over Q, plus Sturm-sequence root counting.
//
// The library needs only modest degrees (a quartic from the threshold
// analysis, denominator polynomials from the closed forms), so a dense
// coefficient vector in ascending powers is the right representation.
// The payoff of exact coefficients is the Sturm machinery at the bottom:
// counting real roots in an interval by sign variations is an exact
// integer answer, so "this quartic has exactly one root in (a, b]" becomes
// a provable statement rather than a numerically observed one.

#include "lestab/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lestab {

class UniPoly {
public:
    UniPoly() = default;
    // Coefficients in ascending powers: {c0, c1, ...} = c0 + c1 x + ...
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }
    UniPoly(std::initializer_list<Rational> coeffs)
        : UniPoly(std::vector<Rational>(coeffs)) {}

    static UniPoly from_ints(std::initializer_list<long long> coeffs) {
        std::vector<Rational> v;
        for (long long c : coeffs) v.emplace_back(c);
        return UniPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& operator[](size_t i) const { return c_.at(i); }
    const Rational& leading() const {
        if (c_.empty()) throw std::logic_error("UniPoly::leading: zero polynomial");
        return c_.back();
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(i);
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> s(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < a.c_.size(); ++i) s[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) s[i] += b.c_[i];
        return UniPoly(std::move(s));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        return a + (-b);
    }
    friend UniPoly operator-(const UniPoly& a) {
        std::vector<Rational> n(a.c_);
        for (auto& c : n) c = -c;
        return UniPoly(std::move(n));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> p(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                p[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(p));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) {
        std::vector<Rational> p(a.c_);
        for (auto& c : p) c *= s;
        return UniPoly(std::move(p));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.c_ == b.c_;
    }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero");
        std::vector<Rational> rem(c_), quot;
        int dd = d.degree();
        if (degree() >= dd) quot.assign(degree() - dd + 1, 0);
        for (int i = degree(); i >= dd; --i) {
            Rational f = rem[i] / d.c_.back();
            if (f == 0) continue;
            quot[i - dd] = f;
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
        }
        return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
    }
    UniPoly rem(const UniPoly& d) const { return divmod(d).second; }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i] == 0) continue;
            Rational a = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
            if (out.empty()) { if (c_[i] < 0) out += "-"; }
            else out += c_[i] < 0 ? " - " : " + ";
            if (i == 0 || a != 1) out += to_string(a);
            if (i > 0) {
                if (a != 1) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;  // ascending powers, no trailing zeros
};

// Canonical Sturm chain of p: p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i),
// stopping at 0.  If p has repeated roots the last nonzero entry is a
// nontrivial gcd; dividing the whole chain by it restores the Sturm
// property while preserving the set of distinct real roots.
inline std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    UniPoly d = p.derivative();
    if (!d.is_zero()) seq.push_back(d);
    while (seq.size() >= 2) {
        const UniPoly r = seq[seq.size() - 2].rem(seq.back());
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    if (seq.back().degree() > 0) {
        const UniPoly g = seq.back();
        for (auto& q : seq) {
            auto [quot, rem] = q.divmod(g);
            q = quot;  // exact: g divides every element of the chain
        }
    }
    return seq;
}

namespace detail {
inline int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }
}

// Number of sign alternations of the chain at x (zeros skipped).
inline int sign_variations(const std::vector<UniPoly>& seq, const Rational& x) {
    int count = 0, prev = 0;
    for (const auto& q : seq) {
        int s = detail::sgn(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Sign alternations at +inf / -inf from leading coefficients.
inline int sign_variations_at_infinity(const std::vector<UniPoly>& seq,
                                       bool positive) {
    int count = 0, prev = 0;
    for (const auto& q : seq) {
        if (q.is_zero()) continue;
        int s = detail::sgn(q.leading());
        if (!positive && q.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Distinct real roots of p in (a, b].  Requires a < b.  Exact.
inline int count_real_roots(const UniPoly& p, const Rational& a,
                            const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("count_real_roots: need a < b");
    auto seq = sturm_sequence(p);
    if (seq.empty()) throw std::domain_error("count_real_roots: zero polynomial");
    return sign_variations(seq, a) - sign_variations(seq, b);
}

// Distinct real roots of p on the whole line.
inline int count_real_roots(const UniPoly& p) {
    auto seq = sturm_sequence(p);
    if (seq.empty()) throw std::domain_error("count_real_roots: zero polynomial");
    return sign_variations_at_infinity(seq, false) -
           sign_variations_at_infinity(seq, true);
}

// Every real root of p lies in [-B, B] with B = 1 + max |c_i| / |c_lead|.
inline Rational cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("cauchy_root_bound: zero polynomial");
    Rational mx = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = p[i] < 0 ? Rational(-p[i]) : p[i];
        if (a > mx) mx = a;
    }
    Rational lead = p.leading() < 0 ? Rational(-p.leading()) : p.leading();
    return 1 + mx / lead;
}

}  // namespace lestab
