#pragma once

/// Double supersymmetric functions in n pairs of variables x_i / y_i:
/// powersums, the double complete/elementary families h_k(x/y || s^s a) and
/// e_k(x/y || s^s a), double Schur functions via Jacobi-Trudi determinants
/// and via tableau enumeration, and the one-alphabet (bialternant)
/// specialization.

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"
#include "partition.hpp"
#include "poly.hpp"

namespace dschur {

/// Simultaneous truncation to x_1..x_n, y_1..y_n.
struct SuperContext {
    int n = 0;
};

enum class SymKind { h, e };

/// p_k(x/y) = sum_i x_i^k - (-y_i)^k.
inline Poly powersum_super(int k, SuperContext ctx) {
    if (k < 1) throw std::invalid_argument("powersum index must be >= 1");
    Poly p;
    for (int i = 1; i <= ctx.n; ++i) {
        p += Poly::x(i).pow(static_cast<unsigned>(k));
        const Poly yk = Poly::y(i).pow(static_cast<unsigned>(k));
        p += (k % 2 == 0) ? -yk : yk;
    }
    return p;
}

/// Classical supersymmetric h_k(x/y) = sum_{a+b=k} h_a(x) e_b(y), and the
/// dual e_k(x/y) = sum e_a(x) h_b(y).
inline Poly classical_super(SymKind kind, int k, SuperContext ctx) {
    if (k < 0) return Poly::zero();
    std::vector<SignedVar> xs, ys;
    for (int i = 1; i <= ctx.n; ++i) {
        xs.emplace_back(Var::x(i), 1);
        ys.emplace_back(Var::y(i), 1);
    }
    Poly r;
    for (int a = 0; a <= k; ++a) {
        const Poly xa = kind == SymKind::h ? homog_sym(xs, a) : elem_sym(xs, a);
        if (xa.is_zero()) continue;
        const Poly yb = kind == SymKind::h ? elem_sym(ys, k - a) : homog_sym(ys, k - a);
        if (yb.is_zero()) continue;
        r += xa * yb;
    }
    return r;
}

/// h_k(x/y || s^s a) = sum_{m=1..k} e_{k-m}(-a_{s+1},...,-a_{s+k-1}) h_m(x/y),
/// with h_0 = 1; zero for k < 0.
inline Poly double_h(int k, SuperContext ctx, int s) {
    if (k < 0) return Poly::zero();
    if (k == 0) return Poly::integer(1);
    const auto window = alpha_open(s, s + k, -1);
    Poly r;
    for (int m = 1; m <= k; ++m) {
        const Poly hm = classical_super(SymKind::h, m, ctx);
        if (hm.is_zero()) continue;
        const Poly em = elem_sym(window, k - m);
        if (em.is_zero()) continue;
        r += em * hm;
    }
    return r;
}

/// e_k(x/y || s^s a) = sum_{m=1..k} e_{k-m}(a_{s-k+2},...,a_{s}) e_m(x/y).
inline Poly double_e(int k, SuperContext ctx, int s) {
    if (k < 0) return Poly::zero();
    if (k == 0) return Poly::integer(1);
    const auto window = alpha_open(s - k + 1, s + 1, +1);
    Poly r;
    for (int m = 1; m <= k; ++m) {
        const Poly em = classical_super(SymKind::e, m, ctx);
        if (em.is_zero()) continue;
        const Poly cm = elem_sym(window, k - m);
        if (cm.is_zero()) continue;
        r += cm * em;
    }
    return r;
}

/// The defining summation over index chains, evaluated directly.  Cross-check
/// for double_h / double_e.
///
/// h-kind: sum over b+a=k, chains n >= i_1 >= ... >= i_b >= 1 and
/// 1 <= j_1 < ... < j_a <= n of
///   prod_t (y_{j_t} + a_{t-j_t}) * prod_t (x_{i_t} - a_{a+t-i_t}).
/// e-kind: chains i_1 > ... > i_b and j_1 <= ... <= j_a of
///   prod_t (y_{j_t} + a_{2-j_t-t}) * prod_t (x_{i_t} - a_{2-i_t-a-t}).
inline Poly double_combinatorial(SymKind kind, int k, SuperContext ctx, int s) {
    if (k < 0) return Poly::zero();
    if (k == 0) return Poly::integer(1);
    Poly total;
    const bool hkind = kind == SymKind::h;
    for (int a = 0; a <= k; ++a) {
        const int b = k - a;
        // enumerate y-chains j_1 .. j_a
        std::vector<int> js(static_cast<std::size_t>(a));
        std::vector<int> is(static_cast<std::size_t>(b));
        std::function<void(int, Poly)> rec_x = [&](int t, Poly acc) {
            if (t > b) {
                total += acc;
                return;
            }
            const int lo = 1;
            int hi;
            if (t == 1)
                hi = ctx.n;
            else
                hi = hkind ? is[static_cast<std::size_t>(t - 2)]
                           : is[static_cast<std::size_t>(t - 2)] - 1;
            for (int i = lo; i <= hi; ++i) {
                is[static_cast<std::size_t>(t - 1)] = i;
                const int idx = hkind ? a + t - i : 2 - i - a - t;
                rec_x(t + 1, acc * (Poly::x(i) - Poly::alpha(idx + s)));
            }
        };
        std::function<void(int, Poly)> rec_y = [&](int t, Poly acc) {
            if (t > a) {
                rec_x(1, std::move(acc));
                return;
            }
            int lo;
            if (t == 1)
                lo = 1;
            else
                lo = hkind ? js[static_cast<std::size_t>(t - 2)] + 1
                           : js[static_cast<std::size_t>(t - 2)];
            for (int j = lo; j <= ctx.n; ++j) {
                js[static_cast<std::size_t>(t - 1)] = j;
                const int idx = hkind ? t - j : 2 - j - t;
                rec_y(t + 1, acc * (Poly::y(j) + Poly::alpha(idx + s)));
            }
        };
        rec_y(1, Poly::integer(1));
    }
    return total;
}

namespace detail {

/// Determinant by Laplace expansion over column subsets with memoization;
/// zero entries prune branches.
inline Poly determinant(int n, const std::function<Poly(int, int)>& entry) {
    std::map<std::pair<int, unsigned>, Poly> memo;
    std::function<Poly(int, unsigned)> minor = [&](int row, unsigned cols) -> Poly {
        if (row == n) return Poly::integer(1);
        auto it = memo.find({row, cols});
        if (it != memo.end()) return it->second;
        Poly det;
        int sign = 1;
        for (int j = 0; j < n; ++j) {
            if (!(cols & (1u << j))) continue;
            Poly e = entry(row, j);
            if (!e.is_zero()) {
                Poly sub = minor(row + 1, cols & ~(1u << j));
                if (!sub.is_zero()) det += sign > 0 ? e * sub : -(e * sub);
            }
            sign = -sign;
        }
        memo[{row, cols}] = det;
        return det;
    };
    return minor(0, (1u << n) - 1u);
}

}  // namespace detail

/// Skew double Schur function by the Jacobi-Trudi determinant:
///   h-basis: det[ h_{l_i - m_j - i + j}(x/y || s^{m_j - j + 1} a) ],
///   e-basis: det[ e_{l'_i - m'_j - i + j}(x/y || s^{j - m'_j - 1} a) ],
/// of size ell x ell.
inline Poly schur_double_jt(const SkewShape& shape, SuperContext ctx, SymKind basis, int ell) {
    const Partition& lam = basis == SymKind::h ? shape.outer : shape.outer.conjugate();
    const Partition& mu = basis == SymKind::h ? shape.inner : shape.inner.conjugate();
    if (ell < lam.length()) throw std::invalid_argument("ell smaller than the shape length");
    if (ell > 30) throw std::invalid_argument("ell too large");
    auto entry = [&](int i0, int j0) {
        const int i = i0 + 1, j = j0 + 1;
        const int k = lam.part(i) - mu.part(j) - i + j;
        const int s = basis == SymKind::h ? mu.part(j) - j + 1 : j - mu.part(j) - 1;
        return basis == SymKind::h ? double_h(k, ctx, s) : double_e(k, ctx, s);
    };
    return detail::determinant(ell, entry);
}

/// Skew double Schur function by A-tableau enumeration: fillings in the
/// alphabet 1' < 1 < 2' < 2 < ... < n' < n, weakly increasing along rows and
/// columns, at most one primed i per row, at most one unprimed i per column.
/// A cell b with content c(b) = col - row contributes (x_T(b) - a_c(b)) when
/// unprimed and (y_T(b) + a_c(b)) when primed.
inline Poly schur_double_tableaux(const SkewShape& shape, SuperContext ctx) {
    const Partition& outer = shape.outer;
    const Partition& inner = shape.inner;
    const int rows = outer.length();
    // cells in row-major order
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int i = 1; i <= rows; ++i)
        for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) cells.push_back({i, j});
    // letter encoding: primed i -> 2i-1, unprimed i -> 2i
    std::vector<int> fill(cells.size());
    auto letter_at = [&](int row, int col) -> int {
        for (std::size_t t = 0; t < cells.size(); ++t)
            if (cells[t].row == row && cells[t].col == col) return fill[t];
        return 0;
    };
    Poly total;
    std::function<void(std::size_t, Poly)> rec = [&](std::size_t t, Poly acc) {
        if (t == cells.size()) {
            total += acc;
            return;
        }
        const auto [row, col] = cells[t];
        int lo = 1;
        if (col > inner.part(row) + 1) lo = std::max(lo, letter_at(row, col - 1));
        if (row > 1 && col > inner.part(row - 1) && col <= outer.part(row - 1))
            lo = std::max(lo, letter_at(row - 1, col));
        for (int v = lo; v <= 2 * ctx.n; ++v) {
            const bool primed = v % 2 == 1;
            const int sym = (v + 1) / 2;
            // at most one primed per row / unprimed per column
            if (primed && col > inner.part(row) + 1 && letter_at(row, col - 1) == v) continue;
            if (!primed && row > 1 && col > inner.part(row - 1) && col <= outer.part(row - 1) &&
                letter_at(row - 1, col) == v)
                continue;
            fill[t] = v;
            const int c = col - row;
            const Poly w = primed ? Poly::y(sym) + Poly::alpha(c) : Poly::x(sym) - Poly::alpha(c);
            rec(t + 1, acc * w);
            fill[t] = 0;
        }
    };
    rec(0, Poly::integer(1));
    return total;
}

/// Coefficients of the one-alphabet specialization series
/// F(z) = prod_{i=1..n} (1 - a_i z)/(1 - x_i z), computed exactly via series
/// inversion.  f[m] is the coefficient of z^m.
inline std::vector<Poly> one_alphabet_series(int n, int order) {
    LaurentSeries F = LaurentSeries::one(order);
    for (int i = 1; i <= n; ++i) {
        LaurentSeries num =
            LaurentSeries::one(order) + LaurentSeries::monomial(-Poly::alpha(i), 1, order);
        LaurentSeries den =
            LaurentSeries::one(order) + LaurentSeries::monomial(-Poly::x(i), 1, order);
        F = F * num * invert_unit(den, order);
    }
    std::vector<Poly> f(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) f[static_cast<std::size_t>(m)] = F.coefficient(m);
    return f;
}

/// h_k(x || s^s a) with one alphabet: the image of the double complete
/// function under the specialization y_i = -a_i with tail x_{n+i} = a_{n+i},
///   factorial_h(k, n, s) = delta_{k0}
///     + sum_{m=1..k} e_{k-m}(-a_{s+1},...,-a_{s+k-1}) [z^m] F(z).
inline Poly factorial_h(int k, int n, int s) {
    if (k < 0) return Poly::zero();
    if (k == 0) return Poly::integer(1);
    const auto f = one_alphabet_series(n, k);
    const auto window = alpha_open(s, s + k, -1);
    Poly r;
    for (int m = 1; m <= k; ++m) {
        if (f[static_cast<std::size_t>(m)].is_zero()) continue;
        const Poly em = elem_sym(window, k - m);
        if (em.is_zero()) continue;
        r += em * f[static_cast<std::size_t>(m)];
    }
    return r;
}

/// The variable-shifted power (x | s^t a)^m = prod_{u=1..m} (x - a_{t+u}).
inline Poly variable_shifted_power(Var x, int t, int m) {
    Poly r = Poly::integer(1);
    for (int u = 1; u <= m; ++u) r *= Poly::variable(x) - Poly::alpha(t + u);
    return r;
}

/// Exact division of p by the linear factor (a - b) for variables a, b;
/// throws if the division is not exact.
inline Poly exact_divide_linear(const Poly& p, Var a, Var b) {
    // view p as a polynomial in a with Poly coefficients
    std::map<int, Poly> by_deg;
    for (const auto& [mono, c] : p.terms()) {
        const int d = static_cast<int>(mono.exponent_of(a));
        by_deg[d] += Poly::monomial(mono.without(a), c);
    }
    if (by_deg.empty()) return Poly::zero();
    const int top = by_deg.rbegin()->first;
    const Poly pb = Poly::variable(b);
    const Poly pa = Poly::variable(a);
    Poly quotient;
    Poly carry;
    for (int d = top; d >= 1; --d) {
        Poly qd = by_deg.count(d) ? by_deg[d] : Poly::zero();
        qd += carry;
        quotient += qd * pa.pow(static_cast<unsigned>(d - 1));
        carry = qd * pb;
    }
    Poly rem = carry;
    if (by_deg.count(0)) rem += by_deg[0];
    if (!rem.is_zero()) throw std::logic_error("exact_divide_linear: division not exact");
    return quotient;
}

/// Bialternant form of the one-alphabet double Schur function:
///   s_lambda = A_{lambda+delta} / A_delta,  A_mu = det[(x_i | a)^{mu_j}],
/// an exact quotient in Z[a][x].  Equals the Jacobi-Trudi determinant
/// det[factorial_h(lambda_i - i + j, n, n+1-j)].
inline Poly bialternant(const Partition& lambda, int n) {
    if (lambda.length() > n) throw std::invalid_argument("partition longer than variable count");
    auto alternant = [&](const std::vector<int>& mu) {
        return detail::determinant(n, [&](int i0, int j0) {
            return variable_shifted_power(Var::x(i0 + 1), 0, mu[static_cast<std::size_t>(j0)]);
        });
    };
    std::vector<int> staircase(static_cast<std::size_t>(n));
    std::vector<int> shifted(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        staircase[static_cast<std::size_t>(j - 1)] = n - j;
        shifted[static_cast<std::size_t>(j - 1)] = lambda.part(j) + n - j;
    }
    Poly num = alternant(shifted);
    Poly den = alternant(staircase);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            num = exact_divide_linear(num, Var::x(i), Var::x(j));
            den = exact_divide_linear(den, Var::x(i), Var::x(j));
        }
    if (den != Poly::integer(1))
        throw std::logic_error("bialternant: staircase alternant is not the Vandermonde");
    return num;
}

}  // namespace dschur
