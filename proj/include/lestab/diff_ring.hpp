#pragma once

// A tiny differential ring for one-variable calculus done symbolically.
//
// Expressions live in Q[params][lam, f0, ..., f5], where f_i stands for the
// i-th derivative of an arbitrary smooth function f(lam).  The total
// derivative D acts by
//
//     D = d/d lam + sum_i f_{i+1} * d/d f_i ,
//
// so an identity  "LHS = (bracket)' + remainder"  becomes the polynomial
// statement  LHS - D(bracket) - remainder == 0,  proven by normalization in
// MultiPoly.  Because f is arbitrary, a polynomial identity here *is* an
// identity of functions -- no sampling, no epsilons.
//
// The order cap is five: f5 may appear in an expression (fifth derivatives
// show up as integrands), but differentiating an expression that already
// contains f5 would require f6 and is rejected.
//
// solve_bracket() answers the converse question: given a target expression,
// can it be written as D of a combination of the homogeneous products
// lam^{i+j} f_i f_j?  All exact-divergence bookkeeping in the library
// reduces to that ansatz, with coefficients allowed to be polynomials in
// the symbolic parameters.

#include "lestab/multipoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lestab {

inline constexpr int kMaxDiffOrder = 5;

class DiffExpr {
public:
    DiffExpr() = default;
    DiffExpr(MultiPoly p) : p_(std::move(p)) {}
    DiffExpr(const Rational& c) : p_(c) {}
    DiffExpr(long long c) : p_(c) {}

    // The independent variable.
    static DiffExpr lam() { return DiffExpr(MultiPoly::variable("lam")); }

    // f^{(i)}(lam) as an indeterminate.
    static DiffExpr f(int i) {
        if (i < 0 || i > kMaxDiffOrder)
            throw std::domain_error("DiffExpr::f: derivative order out of range");
        return DiffExpr(MultiPoly::variable(f_name(i)));
    }

    // A symbolic scalar parameter (constant under D).
    static DiffExpr param(const std::string& name) {
        if (name == "lam" || is_f_name(name))
            throw std::invalid_argument("DiffExpr::param: reserved name " + name);
        return DiffExpr(MultiPoly::variable(name));
    }

    const MultiPoly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    std::string str() const { return p_.str(); }

    // Highest i such that f_i occurs; -1 if none do.
    int max_f_order() const {
        for (int i = kMaxDiffOrder; i >= 0; --i)
            if (p_.degree(f_name(i)) > 0) return i;
        return -1;
    }

    friend DiffExpr operator+(const DiffExpr& a, const DiffExpr& b) { return DiffExpr(a.p_ + b.p_); }
    friend DiffExpr operator-(const DiffExpr& a, const DiffExpr& b) { return DiffExpr(a.p_ - b.p_); }
    friend DiffExpr operator-(const DiffExpr& a) { return DiffExpr(-a.p_); }
    friend DiffExpr operator*(const DiffExpr& a, const DiffExpr& b) { return DiffExpr(a.p_ * b.p_); }
    DiffExpr pow(int e) const { return DiffExpr(p_.pow(e)); }

    friend bool operator==(const DiffExpr& a, const DiffExpr& b) { return a.p_ == b.p_; }
    friend bool operator!=(const DiffExpr& a, const DiffExpr& b) { return !(a == b); }

    static std::string f_name(int i) { return "f" + std::to_string(i); }

    static bool is_f_name(const std::string& s) {
        return s.size() == 2 && s[0] == 'f' && s[1] >= '0' && s[1] <= '5';
    }

private:
    MultiPoly p_;
};

// d/d lam with the chain rule on the f_i.  Throws if the input already
// holds f5 (the result would need a sixth derivative).
inline DiffExpr diff_total_derivative(const DiffExpr& e) {
    if (e.poly().degree(DiffExpr::f_name(kMaxDiffOrder)) > 0)
        throw std::domain_error(
            "diff_total_derivative: expression holds f5; derivative order cap exceeded");
    MultiPoly out = e.poly().derivative("lam");
    for (int i = 0; i < kMaxDiffOrder; ++i)
        out += e.poly().derivative(DiffExpr::f_name(i)) *
               MultiPoly::variable(DiffExpr::f_name(i + 1));
    return DiffExpr(out);
}

// Does lhs equal D(bracket) + remainder identically?
inline bool verify_diff_identity(const DiffExpr& lhs, const DiffExpr& bracket,
                                 const DiffExpr& remainder) {
    return (lhs - diff_total_derivative(bracket) - remainder).is_zero();
}

// lam^{i+j} f_i f_j -- the building block of every bracket we solve for.
inline DiffExpr bracket_basis_term(int i, int j) {
    return DiffExpr::lam().pow(i + j) * DiffExpr::f(i) * DiffExpr::f(j);
}

struct BracketSolution {
    bool ok = false;
    // e_{i,j} keyed by (i, j) with i >= j; coefficients may involve params.
    std::map<std::pair<int, int>, MultiPoly> coeff;
    // target - D(bracket); identically zero exactly when ok.
    DiffExpr residual;

    DiffExpr bracket() const {
        DiffExpr b;
        for (const auto& [ij, c] : coeff)
            b = b + DiffExpr(c) * bracket_basis_term(ij.first, ij.second);
        return b;
    }
};

// Decompose target as D( sum e_{i,j} lam^{i+j} f_i f_j ) if possible.
//
// The derivatives D(t_{i,j}) have plain integer coefficients, while the
// target's coefficients may involve symbolic parameters; splitting every
// term into its (lam, f)-part and its parameter-part turns the question
// into a linear system with a rational matrix and polynomial right-hand
// side, solved by Gauss-Jordan elimination.  Underdetermined directions are
// pinned to zero; inconsistency is reported with the exact residual.
inline BracketSolution solve_bracket(const DiffExpr& target, int max_order = 4) {
    if (max_order < 0 || max_order >= kMaxDiffOrder)
        throw std::domain_error("solve_bracket: max_order out of range");

    std::vector<std::pair<int, int>> basis;
    for (int i = 0; i <= max_order; ++i)
        for (int j = 0; j <= i; ++j) basis.emplace_back(i, j);

    // Split a polynomial into mu -> c_mu, where mu collects lam and the f_i
    // and c_mu is a polynomial in the remaining (parameter) variables.
    auto split = [](const MultiPoly& p) {
        std::map<Monomial, MultiPoly> parts;
        for (const auto& [mono, c] : p.terms()) {
            Monomial mu, par;
            for (const auto& [v, e] : mono) {
                if (v == "lam" || DiffExpr::is_f_name(v)) mu[v] = e;
                else par[v] = e;
            }
            MultiPoly piece;
            piece += MultiPoly(c) * [&] {
                MultiPoly m(1);
                for (const auto& [v, e] : par)
                    m *= MultiPoly::variable(v).pow(e);
                return m;
            }();
            auto [it, inserted] = parts.try_emplace(mu, piece);
            if (!inserted) it->second += piece;
        }
        return parts;
    };

    std::vector<std::map<Monomial, MultiPoly>> dcols;
    dcols.reserve(basis.size());
    for (auto [i, j] : basis)
        dcols.push_back(split(diff_total_derivative(bracket_basis_term(i, j)).poly()));
    auto rhs_parts = split(target.poly());

    // Row space: every (lam, f)-monomial seen in any column or the target.
    std::map<Monomial, size_t> row_of;
    auto note = [&](const Monomial& m) { row_of.try_emplace(m, row_of.size()); };
    for (const auto& col : dcols)
        for (const auto& [m, c] : col) note(m);
    for (const auto& [m, c] : rhs_parts) note(m);

    const size_t nrows = row_of.size(), ncols = basis.size();
    std::vector<std::vector<Rational>> A(nrows, std::vector<Rational>(ncols, 0));
    std::vector<MultiPoly> rhs(nrows);
    for (size_t u = 0; u < ncols; ++u)
        for (const auto& [m, c] : dcols[u])
            A[row_of[m]][u] = c.constant_value();
    for (const auto& [m, c] : rhs_parts) rhs[row_of[m]] = c;

    // Gauss-Jordan on A, mirroring row operations onto the polynomial rhs.
    std::vector<long> pivot_row(ncols, -1);
    std::vector<bool> used(nrows, false);
    for (size_t u = 0; u < ncols; ++u) {
        size_t piv = nrows;
        for (size_t r = 0; r < nrows; ++r)
            if (!used[r] && A[r][u] != 0) { piv = r; break; }
        if (piv == nrows) continue;  // free column; coefficient stays zero
        used[piv] = true;
        pivot_row[u] = static_cast<long>(piv);
        const Rational inv = 1 / A[piv][u];
        for (size_t c = 0; c < ncols; ++c) A[piv][c] *= inv;
        rhs[piv] *= MultiPoly(inv);
        for (size_t r = 0; r < nrows; ++r) {
            if (r == piv || A[r][u] == 0) continue;
            const Rational factor = A[r][u];
            for (size_t c = 0; c < ncols; ++c) A[r][c] -= factor * A[piv][c];
            rhs[r] -= MultiPoly(factor) * rhs[piv];
        }
    }

    BracketSolution sol;
    for (size_t u = 0; u < ncols; ++u)
        if (pivot_row[u] >= 0 && !rhs[pivot_row[u]].is_zero())
            sol.coeff[basis[u]] = rhs[pivot_row[u]];
    sol.residual = target - diff_total_derivative(sol.bracket());
    sol.ok = sol.residual.is_zero();
    return sol;
}

}  // namespace lestab
