#pragma once

/// Boson-side expansion engines: Murnaghan-Nakayama products and derivatives
/// through the current operators, Pieri and skew-Pieri coefficients by closed
/// form and by formal residue, and the raising-operator expansion into
/// h-words.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "fock.hpp"
#include "laurent.hpp"
#include "partition.hpp"
#include "poly.hpp"
#include "symfunc.hpp"

namespace dschur {

/// Finite expansion over double Schur functions indexed by partitions.
using SchurExpansion = std::map<Partition, Poly>;

inline void expansion_add(SchurExpansion& e, const Partition& p, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = e.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

inline SchurExpansion expansion_from_fock(const FockVector& v) {
    SchurExpansion e;
    for (const auto& [key, c] : v) {
        if (key.charge != 0) throw std::logic_error("expected a charge-0 Fock vector");
        expansion_add(e, key.partition, c);
    }
    return e;
}

/// p_k * s_lambda as a double Schur expansion (the image of J_{-k}).
inline SchurExpansion mn_multiply(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return expansion_from_fock(apply_current(-k, fock_ket(lambda)));
}

/// k * d(s_lambda)/d(p_k) as a double Schur expansion (the image of J_k).
inline SchurExpansion mn_derivative(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return expansion_from_fock(apply_current(k, fock_ket(lambda)));
}

/// Expansion of p_{rho_1} ... p_{rho_r} in double Schur functions.
inline SchurExpansion powersum_schur_expansion(const std::vector<int>& rho) {
    FockVector v = fock_ket(Partition{});
    for (auto it = rho.rbegin(); it != rho.rend(); ++it) {
        if (*it < 1) throw std::invalid_argument("powersum indices must be >= 1");
        v = apply_current(-*it, v);
    }
    return expansion_from_fock(v);
}

enum class PieriMethod { closed, residue };

namespace detail {

/// sum_{s+t=d} h_s(A) e_t(-B) for alpha-index multisets A and B; depends only
/// on the multiset difference.  With cancel=true the common part is removed
/// first.
inline Poly super_he_sum(std::vector<int> A, std::vector<int> B, int d, bool cancel) {
    if (d < 0) return Poly::zero();
    if (cancel) {
        std::sort(A.begin(), A.end());
        std::sort(B.begin(), B.end());
        std::vector<int> ra, rb;
        std::size_t i = 0, j = 0;
        while (i < A.size() && j < B.size()) {
            if (A[i] == B[j])
                ++i, ++j;
            else if (A[i] < B[j])
                ra.push_back(A[i++]);
            else
                rb.push_back(B[j++]);
        }
        ra.insert(ra.end(), A.begin() + static_cast<std::ptrdiff_t>(i), A.end());
        rb.insert(rb.end(), B.begin() + static_cast<std::ptrdiff_t>(j), B.end());
        A = std::move(ra);
        B = std::move(rb);
    }
    std::vector<SignedVar> av, bv;
    for (int a : A) av.emplace_back(Var::alpha(a), 1);
    for (int b : B) bv.emplace_back(Var::alpha(b), -1);
    Poly r;
    for (int s = 0; s <= d; ++s) {
        const Poly hs = homog_sym(av, s);
        if (hs.is_zero()) continue;
        const Poly et = elem_sym(bv, d - s);
        if (et.is_zero()) continue;
        r += hs * et;
    }
    return r;
}

/// Multiply the series by (1 - a_idx z)^{-1}, keeping the order.
inline LaurentSeries divide_linear(const LaurentSeries& f, int idx, int order) {
    LaurentSeries unit =
        LaurentSeries::one(order) + LaurentSeries::monomial(-Poly::alpha(idx), 1, order);
    return f * invert_unit(unit, order);
}

inline LaurentSeries multiply_linear(const LaurentSeries& f, int idx, int order) {
    LaurentSeries unit =
        LaurentSeries::one(order) + LaurentSeries::monomial(-Poly::alpha(idx), 1, order);
    return (f * unit).truncated(order);
}

/// The single-variable skew function shat_{lambda/mu}(x_1 || a) at x = z:
///   prod_{j=1..ell} (1 - a_{j - lambda'_j} z)/(1 - a_j z)
///   * prod_{cells} z/(1 - a_{c} z),
/// as a Laurent series; requires lambda/mu to be a horizontal strip.
inline LaurentSeries skew_x_factor(const Partition& lambda, const Partition& mu, int order) {
    const Partition lc = lambda.conjugate();
    const int ell = std::max(lambda.part(1), 1);
    LaurentSeries f = LaurentSeries::one(order);
    for (int j = 1; j <= ell; ++j) {
        const int num = j - lc.part(j);
        if (num == j) continue;
        f = multiply_linear(f, num, order);
        f = divide_linear(f, j, order);
    }
    for (int c : SkewShape(lambda, mu).cell_contents()) f = divide_linear(f, c, order).shifted(1);
    return f.truncated(order);
}

/// The single-variable skew function shat_{nu/eta}(0/y_1 || a) at y = -z:
///   prod_{j=1..ell} (1 - a_{nu_j - j + 1} z)/(1 - a_{1-j} z)
///   * prod_{cells} (-z)/(1 - a_{c+1} z);
/// requires nu/eta to be a vertical strip.
inline LaurentSeries skew_y_factor(const Partition& nu, const Partition& eta, int order) {
    const int ell = nu.length();
    LaurentSeries f = LaurentSeries::one(order);
    for (int j = 1; j <= ell; ++j) {
        const int num = nu.part(j) - j + 1;
        if (num == 1 - j) continue;
        f = multiply_linear(f, num, order);
        f = divide_linear(f, 1 - j, order);
    }
    for (int c : SkewShape(nu, eta).cell_contents()) {
        f = divide_linear(f, c + 1, order).shifted(1);
        f = -f;
    }
    return f.truncated(order);
}

/// (z; a)^m as a series: prod_{i=1..m} (1 - a_i z) for m >= 0, and
/// prod_{i=m+1..0} (1 - a_i z)^{-1} for m < 0.
inline LaurentSeries pochhammer_alpha(int m, int order) {
    LaurentSeries f = LaurentSeries::one(order);
    if (m >= 0)
        for (int i = 1; i <= m; ++i) f = multiply_linear(f, i, order);
    else
        for (int i = m + 1; i <= 0; ++i) f = divide_linear(f, i, order);
    return f;
}

}  // namespace detail

/// Pieri coefficient of s_lambda in h_k * s_mu.  Zero unless lambda/mu is a
/// horizontal strip with |lambda/mu| <= k.  Both methods agree; `closed`
/// evaluates the h/e sum over content multisets, `residue` the formal contour
/// integral.  ell is floored internally at max(length(lambda), lambda_1),
/// below which the defining formulas are not stable.
inline Poly pieri_h_coeff(const Partition& mu, const Partition& lambda, int k, int ell,
                          PieriMethod method = PieriMethod::closed, bool cancel_common = true) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (!lambda.contains(mu)) return Poly::zero();
    if (!is_horizontal_strip(lambda, mu)) return Poly::zero();
    const int strip = lambda.size() - mu.size();
    if (strip > k) return Poly::zero();

    const int L = std::max({ell, lambda.length(), lambda.part(1), 1});
    const auto contents = SkewShape(lambda, mu).cell_contents();

    if (method == PieriMethod::residue) {
        const int order = k + 1;
        LaurentSeries f = detail::skew_x_factor(lambda, mu, order);
        f = f * detail::pochhammer_alpha(k - 1, order);
        return residue(f.shifted(-k - 1));
    }

    std::vector<int> A = contents, B;
    const Partition lc = lambda.conjugate();
    for (int j = 1; j <= L; ++j) {
        A.push_back(j);
        B.push_back(j - lc.part(j));
    }
    for (int i = 1; i <= k - 1; ++i) B.push_back(i);
    return detail::super_he_sum(std::move(A), std::move(B), k - strip, cancel_common);
}

/// Dual Pieri coefficient: e_k * s_mu = (-1)^k sum cbar * s_lambda, where
/// lambda/mu runs over vertical strips with |lambda/mu| <= k.
inline Poly pieri_e_coeff(const Partition& mu, const Partition& lambda, int k, int ell) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (!lambda.contains(mu)) return Poly::zero();
    if (!is_vertical_strip(lambda, mu)) return Poly::zero();
    const int strip = lambda.size() - mu.size();
    if (strip > k) return Poly::zero();

    const int L = std::max({ell, lambda.length(), 1});
    std::vector<int> A, B;
    for (int c : SkewShape(lambda, mu).cell_contents()) A.push_back(c + 1);
    for (int j = 1; j <= L; ++j) {
        A.push_back(1 - j);
        B.push_back(lambda.part(j) - j + 1);
    }
    for (int i = 2 - k; i <= 0; ++i) B.push_back(i);
    Poly r = detail::super_he_sum(std::move(A), std::move(B), k - strip, true);
    return strip % 2 == 0 ? r : -r;
}

/// Skew-Pieri coefficient c_{k, mu/nu}^{lambda/eta} (kind h):
///   h_k s_{mu/nu} = sum c s_{lambda/eta},  lambda/mu a horizontal strip and
///   nu/eta a vertical strip; computed as the residue of
///   shat_{nu/eta}(0/(-z)) shat_{lambda/mu}(z) (z;a)^{k-1} / z^{k+1}.
/// Kind e is the dual with the strip roles swapped and (z; iota a)^{k-1}.
inline Poly skew_pieri_coeff(const SkewShape& out, const SkewShape& in, int k, SymKind kind) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const Partition& lambda = out.outer;
    const Partition& eta = out.inner;
    const Partition& mu = in.outer;
    const Partition& nu = in.inner;
    if (!nu.contains(eta)) return Poly::zero();

    const int order = k + 1;
    if (kind == SymKind::h) {
        if (!is_horizontal_strip(lambda, mu) || !is_vertical_strip(nu, eta)) return Poly::zero();
        LaurentSeries f = detail::skew_x_factor(lambda, mu, order) *
                          detail::skew_y_factor(nu, eta, order);
        f = f * detail::pochhammer_alpha(k - 1, order);
        return residue(f.shifted(-k - 1));
    }
    if (!is_vertical_strip(lambda, mu) || !is_horizontal_strip(nu, eta)) return Poly::zero();
    // (z; iota a)^{k-1} has factors a_0, a_-1, ..., a_{2-k}
    LaurentSeries poch = LaurentSeries::one(order);
    for (int i = 1; i <= k - 1; ++i) poch = detail::multiply_linear(poch, 1 - i, order);
    if (k == 0) poch = detail::divide_linear(poch, 1, order);
    LaurentSeries f =
        detail::skew_x_factor(nu, eta, order) * detail::skew_y_factor(lambda, mu, order) * poch;
    return residue(f.shifted(-k - 1));
}

/// Full Pieri expansion h_k * s_mu (kind h) or e_k * s_mu (kind e), with the
/// (-1)^k prefactor of the dual rule folded in so the result is the literal
/// product expansion.
inline SchurExpansion pieri_expansion(const Partition& mu, int k, SymKind kind, int ell) {
    SchurExpansion e;
    for (int str = 0; str <= k; ++str) {
        const auto succ = kind == SymKind::h ? horizontal_strip_successors(mu, str)
                                             : vertical_strip_successors(mu, str);
        for (const Partition& lam : succ) {
            Poly c = kind == SymKind::h ? pieri_h_coeff(mu, lam, k, ell)
                                        : pieri_e_coeff(mu, lam, k, ell);
            if (kind == SymKind::e && k % 2 != 0) c = -c;
            expansion_add(e, lam, c);
        }
    }
    return e;
}

/// A signed product of shifted complete-homogeneous symbols h_{k,s}.
struct HWord {
    std::vector<std::pair<int, int>> factors;  // (k, s), k >= 1, canonically sorted
    Poly coeff;
};

/// Raising-operator expansion of s_lambda: expand prod_{i<j} (1 - R_ij)
/// applied to the initial word prod_i h_{lambda_i, 1-i}, where R_ij sends
/// (k_i, s_i) -> (k_i + 1, s_i - 1) and (k_j, s_j) -> (k_j - 1, s_j + 1).
/// Words acquiring a negative k vanish; h_0 factors are dropped; identical
/// words are merged (cancelling pairs disappear).
inline std::vector<HWord> raising_expansion(const Partition& lambda) {
    const int ell = lambda.length();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j) pairs.emplace_back(i, j);
    if (pairs.size() > 24)
        throw std::invalid_argument("raising_expansion: partition too long");

    std::map<std::vector<std::pair<int, int>>, Poly> words;
    const std::size_t subsets = std::size_t{1} << pairs.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<int> ks(static_cast<std::size_t>(ell)), ss(static_cast<std::size_t>(ell));
        for (int i = 1; i <= ell; ++i) {
            ks[static_cast<std::size_t>(i - 1)] = lambda.part(i);
            ss[static_cast<std::size_t>(i - 1)] = 1 - i;
        }
        int sign = 1;
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            if (!(mask & (std::size_t{1} << t))) continue;
            sign = -sign;
            const auto [i, j] = pairs[t];
            ks[static_cast<std::size_t>(i - 1)] += 1;
            ss[static_cast<std::size_t>(i - 1)] -= 1;
            ks[static_cast<std::size_t>(j - 1)] -= 1;
            ss[static_cast<std::size_t>(j - 1)] += 1;
        }
        bool dead = false;
        std::vector<std::pair<int, int>> word;
        for (int i = 0; i < ell; ++i) {
            const int k = ks[static_cast<std::size_t>(i)];
            if (k < 0) {
                dead = true;
                break;
            }
            if (k > 0) word.emplace_back(k, ss[static_cast<std::size_t>(i)]);
        }
        if (dead) continue;
        std::sort(word.begin(), word.end());
        words[word] += Poly::integer(sign);
    }

    std::vector<HWord> out;
    for (auto& [w, c] : words)
        if (!c.is_zero()) out.push_back(HWord{w, std::move(c)});
    return out;
}

/// Evaluate a list of h-words: sum coeff * prod double_h(k_i, ctx, s_i).
inline Poly hsymbol_evaluate(const std::vector<HWord>& words, SuperContext ctx) {
    Poly total;
    for (const auto& w : words) {
        Poly prod = w.coeff;
        for (const auto& [k, s] : w.factors) prod *= double_h(k, ctx, s);
        total += prod;
    }
    return total;
}

}  // namespace dschur
