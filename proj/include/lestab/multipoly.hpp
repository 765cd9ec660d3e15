#pragma once

// Sparse multivariate polynomials over Q with named variables.
//
// This is the workhorse behind every algebraic identity check in the
// library: coefficient polynomials in (k, m), differential expressions in
// (lambda, f0..f5), bracket ansatz solving, and the closed-form residue
// checks.  The representation is canonical -- a term map from monomials to
// nonzero rational coefficients, monomials holding only positive exponents
// -- so structural equality of the maps *is* polynomial identity over Q.
// That is the whole point: two expressions are proven equal by normalizing
// their difference to the empty map, not by sampling floats.
//
// Degrees and variable counts stay tiny here (degree <= ~12, a handful of
// variables), so a std::map keyed by the exponent map is entirely adequate
// and keeps iteration order deterministic for printing.

#include "lestab/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lestab {

// var name -> exponent; exponents are always >= 1 in stored form.
using Monomial = std::map<std::string, int>;

class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const Rational& c) { if (c != 0) terms_[Monomial{}] = c; }
    MultiPoly(long long c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(const std::string& name) {
        MultiPoly p;
        p.terms_[Monomial{{name, 1}}] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant())
            throw std::logic_error("constant_value: polynomial is not constant");
        return terms_.begin()->second;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [mono, c] : terms_) {
            int t = 0;
            for (const auto& [v, e] : mono) t += e;
            if (t > d) d = t;
        }
        return d;
    }

    int degree(const std::string& var) const {
        int d = is_zero() ? -1 : 0;
        for (const auto& [mono, c] : terms_) {
            auto it = mono.find(var);
            if (it != mono.end() && it->second > d) d = it->second;
        }
        return d;
    }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (const auto& [mono, c] : terms_)
            for (const auto& [v, e] : mono) vs.insert(v);
        return vs;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r;
        for (const auto& [mono, c] : a.terms_) r.terms_[mono] = -c;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb) m[v] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
        return !(a == b);
    }

    MultiPoly pow(int e) const {
        if (e < 0) throw std::domain_error("MultiPoly::pow: negative exponent");
        MultiPoly acc = MultiPoly(1), b = *this;
        for (unsigned u = static_cast<unsigned>(e); u != 0; u >>= 1) {
            if (u & 1) acc *= b;
            if (u > 1) b *= b;
        }
        return acc;
    }

    // Partial derivative with respect to one variable.
    MultiPoly derivative(const std::string& var) const {
        MultiPoly r;
        for (const auto& [mono, c] : terms_) {
            auto it = mono.find(var);
            if (it == mono.end()) continue;
            Monomial m = mono;
            int e = it->second;
            if (e == 1) m.erase(var); else m[var] = e - 1;
            r.add_term(m, c * e);
        }
        return r;
    }

    // Substitute var := value (a polynomial), leaving other variables alone.
    MultiPoly subst(const std::string& var, const MultiPoly& value) const {
        MultiPoly r;
        for (const auto& [mono, c] : terms_) {
            Monomial rest = mono;
            int e = 0;
            auto it = rest.find(var);
            if (it != rest.end()) { e = it->second; rest.erase(it); }
            MultiPoly term;
            term.terms_[rest] = c;
            r += term * value.pow(e);
        }
        return r;
    }

    // Full evaluation; every variable present must be bound.
    Rational eval(const std::map<std::string, Rational>& point) const {
        Rational sum = 0;
        for (const auto& [mono, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : mono) {
                auto it = point.find(v);
                if (it == point.end())
                    throw std::invalid_argument("MultiPoly::eval: unbound variable " + v);
                t *= pow_int(it->second, e);
            }
            sum += t;
        }
        return sum;
    }

    // Deterministic rendering in graded-lex order,
    // e.g. "-10*k^2 + 10*k*m - m^2 + 12*m + 25".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(),
                                                           terms_.end());
        auto mono_degree = [](const Monomial& m) {
            int d = 0;
            for (const auto& [v, e] : m) d += e;
            return d;
        };
        std::sort(ordered.begin(), ordered.end(),
                  [&](const auto& a, const auto& b) {
                      int da = mono_degree(a.first), db = mono_degree(b.first);
                      if (da != db) return da > db;
                      auto ia = a.first.begin(), ib = b.first.begin();
                      while (ia != a.first.end() && ib != b.first.end()) {
                          if (ia->first != ib->first)
                              return ia->first < ib->first;
                          if (ia->second != ib->second)
                              return ia->second > ib->second;
                          ++ia, ++ib;
                      }
                      return false;
                  });
        std::string out;
        bool first = true;
        for (const auto& [mono, c] : ordered) {
            Rational ac = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string body;
            for (const auto& [v, e] : mono) {
                if (!body.empty()) body += "*";
                body += v;
                if (e > 1) body += "^" + std::to_string(e);
            }
            if (body.empty()) {
                out += to_string(ac);
            } else {
                if (ac != 1) out += to_string(ac) + "*";
                out += body;
            }
        }
        return out;
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

// Verb-style aliases; some call sites read better with these.
inline MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
inline MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
inline Rational poly_eval(const MultiPoly& p,
                          const std::map<std::string, Rational>& point) {
    return p.eval(point);
}
inline bool poly_equal(const MultiPoly& a, const MultiPoly& b) { return a == b; }

}  // namespace lestab
