#pragma once

/// Named identity suites, shared by the CLI `verify` subcommand and the
/// acceptance runner.  Every suite checks exact equalities over Z[a, x, y]
/// and reports the first counterexample (inputs and both sides).
///
/// The mn-soundness and raising suites verify their identities expanded over
/// the generators H_1..H_n of the supersymmetric ring in n = |lambda| + k
/// variable pairs (the evaluation map is an isomorphism in degrees <= n, so
/// this is the polynomial identity at that variable count); the generators
/// are encoded as the x-variables of Poly.

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "expand.hpp"
#include "fock.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "partition.hpp"
#include "poly.hpp"
#include "symfunc.hpp"

namespace dschur::verify {

struct Options {
    int order = 10;
    int window = 8;
    int max_size = 5;
    std::uint64_t seed = 20240815;
};

struct Result {
    std::string suite;
    bool pass = true;
    std::string counterexample;  // empty when pass
    double seconds = 0.0;
};

namespace detail {

inline std::string plain(const Poly& p) { return render(p, RenderStyle::plain); }

struct Reporter {
    Result* r;
    bool failed() const { return !r->pass; }
    void fail(const std::string& inputs, const Poly& lhs, const Poly& rhs) {
        if (!r->pass) return;
        r->pass = false;
        r->counterexample = inputs + ": lhs = " + plain(lhs) + ", rhs = " + plain(rhs);
    }
    void fail_msg(const std::string& msg) {
        if (!r->pass) return;
        r->pass = false;
        r->counterexample = msg;
    }
    void check(const std::string& inputs, const Poly& lhs, const Poly& rhs) {
        if (!r->pass || lhs == rhs) return;
        fail(inputs, lhs, rhs);
    }
};

// --- free-generator (H-basis) helpers ---------------------------------------

inline Poly hgen(int m) { return m == 0 ? Poly::integer(1) : Poly::x(m); }

/// h_k(x/y || s^s a) over the free generators H_m.
inline Poly double_h_gen(int k, int s) {
    if (k < 0) return Poly::zero();
    if (k == 0) return Poly::integer(1);
    const auto window = alpha_open(s, s + k, -1);
    Poly r;
    for (int m = 1; m <= k; ++m) {
        const Poly em = elem_sym(window, k - m);
        if (!em.is_zero()) r += em * hgen(m);
    }
    return r;
}

/// Straight-shape double Schur function over the free generators.
inline Poly schur_gen(const Partition& lam) {
    const int ell = std::max(lam.length(), 1);
    return dschur::detail::determinant(ell, [&](int i0, int j0) {
        return double_h_gen(lam.part(i0 + 1) - (i0 + 1) + (j0 + 1), 1 - (j0 + 1));
    });
}

/// p_k over the free generators, by the Newton recurrence
/// p_k = k H_k - sum_{i=1..k-1} H_i p_{k-i}.
inline Poly powersum_gen(int k) {
    std::vector<Poly> p(static_cast<std::size_t>(k) + 1);
    for (int m = 1; m <= k; ++m) {
        Poly s = Poly::integer(m) * hgen(m);
        for (int i = 1; i <= m - 1; ++i) s -= hgen(i) * p[static_cast<std::size_t>(m - i)];
        p[static_cast<std::size_t>(m)] = s;
    }
    return p[static_cast<std::size_t>(k)];
}

inline LaurentSeries linear_unit(const Poly& c, int order) {
    // 1 + c z
    return LaurentSeries::one(order) + LaurentSeries::monomial(c, 1, order);
}

}  // namespace detail

using Suite = std::function<void(const Options&, detail::Reporter&)>;

// ---------------------------------------------------------------------------

inline void suite_shifted_basis(const Options& opt, detail::Reporter& rep) {
    const int order = std::max(opt.order, 12);
    // four conversions of the change-of-basis proposition, m <= 6
    for (int m = 1; m <= 6 && !rep.failed(); ++m) {
        // z^-m in the shifted basis
        auto c1 = to_shifted_basis(LaurentSeries::monomial(Poly::integer(1), -m, order), 0, 0);
        for (int k = 0; k <= m; ++k) {
            Poly got = c1.count(k) ? c1[k] : Poly::zero();
            rep.check("z^-" + std::to_string(m) + " basis coefficient k=" + std::to_string(k), got,
                      homog_sym(alpha_closed(1, k + 1), m - k));
        }
        // (z^-1|a)^m as a Laurent polynomial
        auto sp = shifted_power(m, 0, 2);
        for (int k = 0; k <= m; ++k)
            rep.check("(z^-1|a)^" + std::to_string(m) + " coefficient z^-" + std::to_string(k),
                      sp.coefficient(-k), elem_sym(alpha_open(0, m + 1, -1), m - k));
        // z^m in the shifted basis (negative tail)
        auto c3 = to_shifted_basis(LaurentSeries::monomial(Poly::integer(1), m, order), 0, -order);
        for (int k = m; k <= order; ++k) {
            Poly got = c3.count(-k) ? c3[-k] : Poly::zero();
            rep.check("z^" + std::to_string(m) + " basis coefficient k=-" + std::to_string(k), got,
                      elem_sym(alpha_open(1 - k, 1, -1), k - m));
        }
        // (z^-1|a)^{-m} as a series
        auto spm = shifted_power(-m, 0, order);
        for (int k = m; k <= order; ++k)
            rep.check("(z^-1|a)^-" + std::to_string(m) + " coefficient z^" + std::to_string(k),
                      spm.coefficient(k), homog_sym(alpha_closed(1 - m, 0), k - m));
    }
    // round trips on random Laurent polynomials (the basis coefficients of a
    // random series deepen quickly, so the round-trip window stays at 8)
    const int rt_order = std::min(opt.order, 8);
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> aidx(-4, 4), coeff(-6, 6), val(-3, 2);
    for (int trial = 0; trial < 20 && !rep.failed(); ++trial) {
        const int v = val(rng);
        std::vector<Poly> cs;
        for (int k = v; k <= 4; ++k)
            cs.push_back(Poly::integer(coeff(rng)) + Poly::alpha(aidx(rng)) * coeff(rng));
        auto f = LaurentSeries::from_coeffs(v, cs, rt_order);
        auto basis = to_shifted_basis(f, 0, -rt_order);
        LaurentSeries back = LaurentSeries::zero(rt_order);
        for (const auto& [k, c] : basis) back = back + shifted_power(k, 0, rt_order) * c;
        if (!(back.truncated(4) == f.truncated(4)))
            rep.fail_msg("round trip failed for random series, trial " + std::to_string(trial));
    }
}

inline void suite_orthonormality(const Options& opt, detail::Reporter& rep) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> idx(-6, 6), nk(-4, 4), len(0, 5);
    for (int trial = 0; trial < 200 && !rep.failed(); ++trial) {
        // orthonormality: residue of (z^-1|s^k a)^{n-k-1} / z^2
        const int n = nk(rng), k = nk(rng);
        rep.check("orthonormality n=" + std::to_string(n) + " k=" + std::to_string(k),
                  residue(shifted_power(n - k - 1, k, 3).shifted(-2)),
                  n == k ? Poly::integer(1) : Poly::zero());

        // degree -2 products have zero residue
        const int kk = len(rng);
        LaurentSeries f = LaurentSeries::one(kk + 2);
        for (int t = 0; t < kk; ++t)
            f = f * (LaurentSeries::monomial(Poly::integer(1), -1, kk + 2) +
                     LaurentSeries::monomial(-Poly::alpha(idx(rng)), 0, kk + 2));
        rep.check("orthonormality_gen k=" + std::to_string(kk), residue(f.shifted(-2)),
                  Poly::zero());

        // ratio of binomial products: residue delta_{k,k'+1}
        const int kden = 1 + static_cast<int>(rng() % 5);
        const int knum = static_cast<int>(rng() % static_cast<unsigned>(kden));
        const int N = 3;
        LaurentSeries g = LaurentSeries::one(N + knum);
        for (int t = 0; t < knum; ++t)
            g = g * (LaurentSeries::monomial(Poly::integer(1), -1, N + knum) +
                     LaurentSeries::monomial(-Poly::alpha(idx(rng)), 0, N + knum));
        for (int t = 0; t < kden; ++t)
            g = (g * invert_unit(LaurentSeries::monomial(Poly::integer(1), -1, N) +
                                     LaurentSeries::monomial(-Poly::alpha(idx(rng)), 0, N),
                                 N));
        rep.check("orthonormality_gen2 k=" + std::to_string(kden) + " k'=" + std::to_string(knum),
                  residue(g.shifted(-2)), kden == knum + 1 ? Poly::integer(1) : Poly::zero());
    }
}

inline void suite_cocyclecase(const Options&, detail::Reporter& rep) {
    for (int k = 1; k <= 6; ++k)
        for (int l = k; l <= 6 && !rep.failed(); ++l) {
            Poly s;
            for (int j = 1; j <= l; ++j)
                for (int i = j - l; i <= std::min(0, j - k); ++i)
                    s += homog_sym(alpha_closed(i, j), i - j + l) *
                         elem_sym(alpha_open(i, j, -1), j - i - k);
            rep.check("cocyclecase k=" + std::to_string(k) + " l=" + std::to_string(l), s,
                      k == l ? Poly::integer(k) : Poly::zero());
        }
}

inline void suite_heidentity(const Options&, detail::Reporter& rep) {
    for (int i = -4; i <= 4; ++i)
        for (int j = i; j <= 4; ++j)
            for (int k = -2; k <= 6 && !rep.failed(); ++k) {
                Poly s;
                for (int t = i; t <= j; ++t)
                    s += homog_sym(alpha_closed(t - k, i), t - i) *
                         elem_sym(alpha_open(t - k, j, -1), j - t);
                rep.check("heidentity i=" + std::to_string(i) + " j=" + std::to_string(j) +
                              " k=" + std::to_string(k),
                          s, i == j ? Poly::integer(1) : Poly::zero());
            }
}

inline void suite_product_cob(const Options&, detail::Reporter& rep) {
    for (int m = 0; m <= 6; ++m)
        for (int j = 0; j <= m && !rep.failed(); ++j) {
            Poly s1, s2;
            for (int k = 0; k <= j; ++k) {
                s1 += homog_sym(alpha_closed(1, m - k + 1), k) *
                      elem_sym(alpha_open(0, m - k + 1, -1), j - k);
                s2 += elem_sym(alpha_open(0, m + 1, -1), k) *
                      homog_sym(alpha_closed(1, m - j + 1), j - k);
            }
            const Poly expect = j == 0 ? Poly::integer(1) : Poly::zero();
            rep.check("product_cob first sum m=" + std::to_string(m) + " j=" + std::to_string(j),
                      s1, expect);
            rep.check("product_cob second sum m=" + std::to_string(m) + " j=" + std::to_string(j),
                      s2, expect);
        }
}

inline void suite_current_algebra(const Options&, detail::Reporter& rep) {
    // composition law
    for (int p = -8; p <= 8; ++p)
        for (int q = -8; q <= 8 && !rep.failed(); ++q)
            for (int k = -4; k <= 4; ++k)
                for (int l = -4; l <= 4; ++l) {
                    const Poly got = compose_current_entry(p, q, k, l);
                    const Poly expect = current_entry(p, q, k + l);
                    if (!(got == expect)) {
                        rep.fail("compose p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                     " k=" + std::to_string(k) + " l=" + std::to_string(l),
                                 got, expect);
                        return;
                    }
                }
    // inverse identity
    for (int i = -6; i <= 6; ++i)
        for (int j = -6; j <= 6 && !rep.failed(); ++j)
            for (int k = 1; k <= 4; ++k)
                rep.check("akinvid i=" + std::to_string(i) + " j=" + std::to_string(j) +
                              " k=" + std::to_string(k),
                          compose_current_entry(i, j, -k, k),
                          i == j ? Poly::integer(1) : Poly::zero());
    // piecewise = residue
    for (int i = -6; i <= 6; ++i)
        for (int j = -6; j <= 6 && !rep.failed(); ++j)
            for (int k = -4; k <= 4; ++k)
                rep.check("entry residue i=" + std::to_string(i) + " j=" + std::to_string(j) +
                              " k=" + std::to_string(k),
                          current_entry(i, j, k), current_entry_residue(i, j, k));
    // window-splitting corollary of the composition law, e-form:
    // sum_{r+t=d} e_r(-a_(p,p+r+k)) e_t(-a_(p+r+k,q)) = e_d(-a_(p,q))
    // on the support regime q - p > d + k
    for (int k = 1; k <= 3; ++k)
        for (int p = -3; p <= 3 && !rep.failed(); ++p)
            for (int d = 0; d <= 3; ++d)
                for (int q = p + d + k + 1; q <= p + d + k + 4; ++q) {
                    Poly s;
                    for (int r = 0; r <= d; ++r)
                        s += elem_sym(alpha_open(p, p + r + k, -1), r) *
                             elem_sym(alpha_open(p + r + k, q, -1), d - r);
                    rep.check("window split p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                  " k=" + std::to_string(k) + " d=" + std::to_string(d),
                              s, elem_sym(alpha_open(p, q, -1), d));
                }
}

inline void suite_heisenberg(const Options& opt, detail::Reporter& rep) {
    const int max_size = std::min(opt.max_size + 1, 6);
    for (const Partition& lam : partitions_up_to(max_size)) {
        if (rep.failed()) return;
        const FockVector v = fock_ket(lam);
        for (int k = 1; k <= 4; ++k)
            for (int l = 1; l <= 4; ++l) {
                FockVector lhs = fock_sum(apply_current(k, apply_current(-l, v)),
                                          fock_scale(apply_current(-l, apply_current(k, v)),
                                                     Poly::integer(-1)));
                FockVector expect = k == l ? fock_scale(v, Poly::integer(k)) : FockVector{};
                if (!(lhs == expect)) {
                    rep.fail_msg("[J_" + std::to_string(k) + ", J_-" + std::to_string(l) +
                                 "] misfires on " + lam.to_string() + ": got " +
                                 render(lhs, RenderStyle::plain));
                    return;
                }
                // same-sign currents commute
                for (int sign : {1, -1}) {
                    FockVector ab = apply_current(sign * k, apply_current(sign * l, v));
                    FockVector ba = apply_current(sign * l, apply_current(sign * k, v));
                    if (!(ab == ba)) {
                        rep.fail_msg("[J, J] same-sign " + std::to_string(sign * k) + "," +
                                     std::to_string(sign * l) + " on " + lam.to_string());
                        return;
                    }
                }
            }
    }
    // cocycle table
    for (int k = -5; k <= 5; ++k)
        for (int l = -5; l <= 5 && !rep.failed(); ++l) {
            const int w = std::max({std::abs(k), std::abs(l), 1, opt.window});
            rep.check("cocycle k=" + std::to_string(k) + " l=" + std::to_string(l),
                      cocycle_currents(k, l, w), k == -l ? Poly::integer(k) : Poly::zero());
        }
}

inline void suite_vacuum_pairing(const Options&, detail::Reporter& rep) {
    auto t = vacuum_pairing_table(8);
    for (int b = 0; b <= 8; ++b)
        for (int q = 0; q <= 8 && !rep.failed(); ++q)
            rep.check("pairing b=" + std::to_string(b) + " q=" + std::to_string(q),
                      t[static_cast<std::size_t>(b)][static_cast<std::size_t>(q)],
                      b == q ? Poly::integer(1) : Poly::zero());
    auto d = dual_vacuum_pairing_table(6);
    for (int b = 1; b <= 6; ++b)
        for (int q = 1; q <= 6 && !rep.failed(); ++q)
            rep.check("dual pairing b=" + std::to_string(b) + " q=" + std::to_string(q),
                      d[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(q - 1)],
                      b == q ? Poly::integer(1) : Poly::zero());
}

inline void suite_generating_series(const Options& opt, detail::Reporter& rep) {
    const int N = std::min(opt.order, 8);
    for (int n = 1; n <= 3 && !rep.failed(); ++n) {
        // G(z) = prod (1 + y_i z)/(1 - x_i z) through series arithmetic
        LaurentSeries G = LaurentSeries::one(N);
        for (int i = 1; i <= n; ++i) {
            G = G * detail::linear_unit(Poly::y(i), N) *
                invert_unit(detail::linear_unit(-Poly::x(i), N), N);
        }
        // e-side generating function is z-adically summable and tested verbatim:
        // sum_k (-1)^k e_k(x/y||a) (z^-1|a)^{-k} = 1/G
        LaurentSeries esum = LaurentSeries::one(N);
        for (int k = 1; k <= N; ++k) {
            Poly c = double_e(k, {n}, 0);
            if (k % 2 != 0) c = -c;
            esum = esum + shifted_power(-k, 0, N) * c;
        }
        const LaurentSeries Ginv = invert_unit(G, N);
        for (int k = 0; k <= N; ++k)
            rep.check("e-gf n=" + std::to_string(n) + " z^" + std::to_string(k),
                      esum.coefficient(k), Ginv.coefficient(k));
        // h-side: triangular coefficient extraction of G recovers double_h
        for (int k = 0; k <= N; ++k) {
            Poly extracted = k == 0 ? Poly::integer(1) : Poly::zero();
            for (int m = 1; m <= k; ++m)
                extracted += elem_sym(alpha_open(0, k, -1), k - m) * G.coefficient(m);
            rep.check("h-gf n=" + std::to_string(n) + " k=" + std::to_string(k), extracted,
                      double_h(k, {n}, 0));
        }
    }
}

inline void suite_eh_roundtrip(const Options&, detail::Reporter& rep) {
    for (int n = 1; n <= 3 && !rep.failed(); ++n)
        for (int k = 1; k <= 6; ++k) {
            Poly hsum, esum;
            for (int m = 1; m <= k; ++m) {
                hsum += homog_sym(alpha_closed(1, m), k - m) * double_h(m, {n}, 0);
                esum += homog_sym(alpha_closed(1 - m, 0, -1), k - m) * double_e(m, {n}, 0);
            }
            rep.check("h round trip n=" + std::to_string(n) + " k=" + std::to_string(k), hsum,
                      classical_super(SymKind::h, k, {n}));
            rep.check("e round trip n=" + std::to_string(n) + " k=" + std::to_string(k), esum,
                      classical_super(SymKind::e, k, {n}));
        }
}

inline void suite_shift_eh(const Options&, detail::Reporter& rep) {
    const SuperContext ctx{2};
    for (int k = 1; k <= 6 && !rep.failed(); ++k) {
        Poly a1 = Poly::alpha(1), a0 = Poly::alpha(0);
        rep.check("shift e k=" + std::to_string(k), double_e(k, ctx, 1),
                  double_e(k, ctx, 0) + (a1 - Poly::alpha(2 - k)) * double_e(k - 1, ctx, 0));
        rep.check("shift h k=" + std::to_string(k), double_h(k, ctx, -1),
                  double_h(k, ctx, 0) + (Poly::alpha(k - 1) - a0) * double_h(k - 1, ctx, 0));
        rep.check("inverse recursion e k=" + std::to_string(k), double_e(k, ctx, -1),
                  double_e(k, ctx, 0) - (a0 - Poly::alpha(1 - k)) * double_e(k - 1, ctx, -1));
        rep.check("inverse recursion h k=" + std::to_string(k), double_h(k, ctx, 1),
                  double_h(k, ctx, 0) - (Poly::alpha(k) - a1) * double_h(k - 1, ctx, 1));
        Poly hsum, esum;
        for (int m = 0; m <= k - 1; ++m) {
            Poly ph = Poly::integer(1), pe = Poly::integer(1);
            for (int u = 1; u <= m; ++u) {
                ph *= a1 - Poly::alpha(k - m + u);
                pe *= a0 - Poly::alpha(u - k);
            }
            hsum += ph * double_h(k - m, ctx, 0);
            esum += (m % 2 == 0 ? pe : -pe) * double_e(k - m, ctx, 0);
        }
        rep.check("summation h k=" + std::to_string(k), double_h(k, ctx, 1), hsum);
        rep.check("summation e k=" + std::to_string(k), double_e(k, ctx, -1), esum);
    }
}

inline void suite_omega(const Options&, detail::Reporter& rep) {
    // omega h_k(x/y||a) = e_k(x/y||-iota a) at the level of expansion
    // coefficients: e_{k-m}(-a_(0,k)) equals the e-expansion coefficient of
    // e_k with a -> -iota a.
    for (int k = 1; k <= 6 && !rep.failed(); ++k)
        for (int m = 1; m <= k; ++m) {
            const Poly h_coeff = elem_sym(alpha_open(0, k, -1), k - m);
            Poly e_coeff = iota_alpha(elem_sym(alpha_open(-k + 1, 1, +1), k - m));
            if ((k - m) % 2 != 0) e_coeff = -e_coeff;
            rep.check("omega k=" + std::to_string(k) + " m=" + std::to_string(m), h_coeff,
                      e_coeff);
        }
}

inline void suite_schur_consistency(const Options& opt, detail::Reporter& rep) {
    const int max_size = opt.max_size;
    for (const Partition& lam : partitions_up_to(max_size)) {
        if (rep.failed()) return;
        for (const Partition& mu : sub_partitions(lam)) {
            const SkewShape sh(lam, mu);
            for (int n = 1; n <= 3; ++n) {
                const SuperContext ctx{n};
                const Poly jt_h = schur_double_jt(sh, ctx, SymKind::h, lam.length());
                const Poly jt_e = schur_double_jt(sh, ctx, SymKind::e, lam.conjugate().length());
                if (!(jt_h == jt_e)) {
                    rep.fail("JT h vs e, shape " + lam.to_string() + "/" + mu.to_string() +
                                 " n=" + std::to_string(n),
                             jt_h, jt_e);
                    return;
                }
                const Poly tab = schur_double_tableaux(sh, ctx);
                if (!(jt_h == tab)) {
                    rep.fail("JT vs tableaux, shape " + lam.to_string() + "/" + mu.to_string() +
                                 " n=" + std::to_string(n),
                             jt_h, tab);
                    return;
                }
            }
        }
        // ell stability spot check
        const SuperContext ctx{2};
        const Poly base = schur_double_jt(SkewShape(lam), ctx, SymKind::h,
                                          std::max(lam.length(), 1));
        rep.check("ell stability " + lam.to_string(),
                  schur_double_jt(SkewShape(lam), ctx, SymKind::h, lam.length() + 2), base);
    }
    // bialternant = Jacobi-Trudi over factorial_h with shifts n+1-j
    for (int n = 1; n <= 3 && !rep.failed(); ++n)
        for (const Partition& lam : partitions_up_to(std::min(max_size, 4))) {
            if (lam.length() > n) continue;
            const int ell = std::max(lam.length(), 1);
            const Poly jt = dschur::detail::determinant(ell, [&](int i0, int j0) {
                return factorial_h(lam.part(i0 + 1) - (i0 + 1) + (j0 + 1), n, n - j0);
            });
            rep.check("bialternant " + lam.to_string() + " n=" + std::to_string(n),
                      bialternant(lam, n), jt);
        }
}

inline void suite_mn_soundness(const Options& opt, detail::Reporter& rep) {
    for (const Partition& lam : partitions_up_to(opt.max_size)) {
        if (rep.failed()) return;
        for (int k = 1; k <= 4; ++k) {
            const Poly lhs = detail::powersum_gen(k) * detail::schur_gen(lam);
            Poly rhs;
            for (const auto& [mu, c] : mn_multiply(lam, k)) {
                // degree filtration along the way
                if (!c.is_homogeneous_in(VarKind::alpha, lam.size() + k - mu.size())) {
                    rep.fail_msg("degree filtration fails at lambda=" + lam.to_string() +
                                 " k=" + std::to_string(k) + " mu=" + mu.to_string() +
                                 ": coeff = " + detail::plain(c));
                    return;
                }
                rhs += c * detail::schur_gen(mu);
            }
            if (!(lhs == rhs)) {
                rep.fail("p_" + std::to_string(k) + " s_" + lam.to_string(), lhs, rhs);
                return;
            }
        }
    }
}

inline void suite_pieri(const Options& opt, detail::Reporter& rep) {
    // triple agreement: closed form, residue form, direct product at n = 3
    const SuperContext ctx{3};
    auto eval_schur = [&](const Partition& p) {
        return schur_double_jt(SkewShape(p), ctx, SymKind::h, std::max(p.length(), 1));
    };
    for (const Partition& mu : partitions_up_to(opt.max_size)) {
        if (rep.failed()) return;
        const Poly smu = eval_schur(mu);
        for (int k = 0; k <= 4; ++k) {
            Poly direct_sum;
            for (int str = 0; str <= k; ++str)
                for (const Partition& lam : horizontal_strip_successors(mu, str)) {
                    const Poly closed = pieri_h_coeff(mu, lam, k, lam.length());
                    const Poly res = pieri_h_coeff(mu, lam, k, lam.length(), PieriMethod::residue);
                    if (!(closed == res)) {
                        rep.fail("pieri closed vs residue mu=" + mu.to_string() +
                                     " lambda=" + lam.to_string() + " k=" + std::to_string(k),
                                 closed, res);
                        return;
                    }
                    if (!(closed == pieri_h_coeff(mu, lam, k, lam.length() + 2))) {
                        rep.fail_msg("pieri ell instability at mu=" + mu.to_string() +
                                     " lambda=" + lam.to_string());
                        return;
                    }
                    direct_sum += closed * eval_schur(lam);
                }
            const Poly lhs = double_h(k, ctx, 0) * smu;
            if (!(lhs == direct_sum)) {
                rep.fail("pieri direct mu=" + mu.to_string() + " k=" + std::to_string(k), lhs,
                         direct_sum);
                return;
            }
        }
        // dual rule, |mu| <= 4, k <= 3
        if (mu.size() > 4) continue;
        for (int k = 0; k <= 3; ++k) {
            Poly direct_sum;
            for (int str = 0; str <= k; ++str)
                for (const Partition& lam : vertical_strip_successors(mu, str)) {
                    Poly c = pieri_e_coeff(mu, lam, k, lam.length());
                    if (k % 2 != 0) c = -c;
                    direct_sum += c * eval_schur(lam);
                }
            const Poly lhs = double_e(k, ctx, 0) * smu;
            if (!(lhs == direct_sum)) {
                rep.fail("dual pieri direct mu=" + mu.to_string() + " k=" + std::to_string(k),
                         lhs, direct_sum);
                return;
            }
        }
    }
}

inline void suite_skew_pieri(const Options&, detail::Reporter& rep) {
    // nu = eta = 0 reduction to the straight Pieri coefficient
    for (const Partition& mu : partitions_up_to(4)) {
        if (rep.failed()) return;
        for (int k = 0; k <= 3; ++k)
            for (int str = 0; str <= k; ++str)
                for (const Partition& lam : horizontal_strip_successors(mu, str))
                    rep.check("skew reduction mu=" + mu.to_string() + " lambda=" + lam.to_string() +
                                  " k=" + std::to_string(k),
                              skew_pieri_coeff(SkewShape(lam), SkewShape(mu), k, SymKind::h),
                              pieri_h_coeff(mu, lam, k, lam.length()));
    }
    // direct check at n = 3, |mu| <= 4, k <= 2
    const SuperContext ctx{3};
    auto eval_skew = [&](const Partition& outer, const Partition& inner) {
        return schur_double_jt(SkewShape(outer, inner), ctx, SymKind::h,
                               std::max(outer.length(), 1));
    };
    for (const Partition& mu : partitions_up_to(4)) {
        if (rep.failed()) return;
        for (const Partition& nu : sub_partitions(mu)) {
            for (int k = 1; k <= 2; ++k) {
                const Poly lhs = double_h(k, ctx, 0) * eval_skew(mu, nu);
                Poly rhs;
                for (int ls = 0; ls <= k; ++ls)
                    for (const Partition& lam : horizontal_strip_successors(mu, ls))
                        for (const Partition& eta : sub_partitions(nu)) {
                            if (!is_vertical_strip(nu, eta)) continue;
                            if (nu.size() - eta.size() > k - ls) continue;
                            const Poly c = skew_pieri_coeff(SkewShape(lam, eta),
                                                            SkewShape(mu, nu), k, SymKind::h);
                            if (!c.is_zero()) rhs += c * eval_skew(lam, eta);
                        }
                if (!(lhs == rhs)) {
                    rep.fail("skew direct mu/nu=" + mu.to_string() + "/" + nu.to_string() +
                                 " k=" + std::to_string(k),
                             lhs, rhs);
                    return;
                }
            }
        }
    }
}

inline void suite_raising(const Options&, detail::Reporter& rep) {
    // raising-operator expansion evaluated over the free generators equals
    // the Jacobi-Trudi determinant
    for (const Partition& lam : partitions_up_to(6)) {
        if (lam.length() > 3 || rep.failed()) continue;
        Poly eval;
        for (const HWord& w : raising_expansion(lam)) {
            Poly prod = w.coeff;
            for (const auto& [k, s] : w.factors) prod *= detail::double_h_gen(k, s);
            eval += prod;
        }
        rep.check("raising " + lam.to_string(), eval, detail::schur_gen(lam));
    }
}

inline void suite_negative_controls(const Options&, detail::Reporter& rep) {
    // pieri_h_coeff vanishes off horizontal strips and when the strip exceeds k
    for (const Partition& mu : partitions_up_to(4)) {
        if (rep.failed()) return;
        for (const Partition& lam : partitions_up_to(6)) {
            if (!lam.contains(mu)) continue;
            const int str = lam.size() - mu.size();
            for (int k = 0; k <= 3; ++k) {
                if (is_horizontal_strip(lam, mu) && str <= k) continue;
                const Poly c = pieri_h_coeff(mu, lam, k, lam.length());
                if (!c.is_zero()) {
                    rep.fail_msg("pieri should vanish: mu=" + mu.to_string() +
                                 " lambda=" + lam.to_string() + " k=" + std::to_string(k) +
                                 " got " + detail::plain(c));
                    return;
                }
            }
        }
    }
    // apply_current(k > 0) support = ribbons of size >= k, signed by height
    for (const Partition& lam : partitions_up_to(8)) {
        if (rep.failed()) return;
        for (int k = 1; k <= 4; ++k) {
            SchurExpansion got = expansion_from_fock(apply_current(k, fock_ket(lam)));
            std::vector<Partition> expected;
            for (int r = k; r <= lam.size(); ++r)
                for (const Partition& mu : ribbon_predecessors(lam, r)) expected.push_back(mu);
            if (got.size() != expected.size()) {
                rep.fail_msg("ribbon support size mismatch lambda=" + lam.to_string() +
                             " k=" + std::to_string(k));
                return;
            }
            for (const Partition& mu : expected) {
                auto it = got.find(mu);
                if (it == got.end()) {
                    rep.fail_msg("missing ribbon target " + mu.to_string() + " from " +
                                 lam.to_string() + " k=" + std::to_string(k));
                    return;
                }
                // every monomial coefficient carries sign (-1)^{ht + size - k}
                const int expect_sign =
                    (ribbon_height(lam, mu) + lam.size() - mu.size() - k) % 2 == 0 ? 1 : -1;
                for (const auto& [mono, c] : it->second.terms()) {
                    if ((c > 0 ? 1 : -1) != expect_sign) {
                        rep.fail_msg("ribbon sign mismatch " + lam.to_string() + " -> " +
                                     mu.to_string() + " k=" + std::to_string(k) + ": " +
                                     detail::plain(it->second));
                        return;
                    }
                }
                if (lam.size() - mu.size() == k) {
                    const int ht = ribbon_height(lam, mu);
                    const Poly expect = Poly::integer(ht % 2 == 0 ? 1 : -1);
                    if (!(it->second == expect)) {
                        rep.fail("ribbon unit coefficient " + lam.to_string() + " -> " +
                                     mu.to_string(),
                                 it->second, expect);
                        return;
                    }
                }
            }
        }
    }
}

inline void suite_degree_filtration(const Options& opt, detail::Reporter& rep) {
    for (const Partition& lam : partitions_up_to(std::min(opt.max_size + 1, 6))) {
        if (rep.failed()) return;
        for (int k = 1; k <= 4; ++k)
            for (const auto& [mu, c] : mn_multiply(lam, k))
                if (!c.is_homogeneous_in(VarKind::alpha, lam.size() + k - mu.size())) {
                    rep.fail_msg("filtration fails lambda=" + lam.to_string() +
                                 " k=" + std::to_string(k) + " mu=" + mu.to_string() + ": " +
                                 detail::plain(c));
                    return;
                }
    }
}

inline void suite_golden_values(const Options&, detail::Reporter& rep);

inline const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> table = {
        {"golden-values", suite_golden_values},
        {"shifted-basis", suite_shifted_basis},
        {"orthonormality", suite_orthonormality},
        {"cocyclecase", suite_cocyclecase},
        {"heidentity", suite_heidentity},
        {"product-cob", suite_product_cob},
        {"current-algebra", suite_current_algebra},
        {"heisenberg", suite_heisenberg},
        {"vacuum-pairing", suite_vacuum_pairing},
        {"generating-series", suite_generating_series},
        {"eh-roundtrip", suite_eh_roundtrip},
        {"shift-eh", suite_shift_eh},
        {"omega", suite_omega},
        {"schur-consistency", suite_schur_consistency},
        {"mn-soundness", suite_mn_soundness},
        {"pieri", suite_pieri},
        {"skew-pieri", suite_skew_pieri},
        {"raising", suite_raising},
        {"negative-controls", suite_negative_controls},
        {"degree-filtration", suite_degree_filtration},
    };
    return table;
}

inline Result run_suite(const std::string& name, const Options& opt) {
    Result r;
    r.suite = name;
    for (const auto& [n, fn] : suites()) {
        if (n != name) continue;
        detail::Reporter rep{&r};
        const auto t0 = std::chrono::steady_clock::now();
        fn(opt, rep);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    r.pass = false;
    r.counterexample = "unknown suite: " + name;
    return r;
}

// ---------------------------------------------------------------------------
// golden values from the worked examples

inline void suite_golden_values(const Options&, detail::Reporter& rep) {
    const auto a = [](int i) { return Poly::alpha(i); };
    const Poly x1 = Poly::x(1), y1 = Poly::y(1), x2 = Poly::x(2), y2 = Poly::y(2);

    rep.check("h_2(x1/y1||a)", double_h(2, {1}, 0), x1 * x1 + x1 * y1 - a(1) * (x1 + y1));
    rep.check("h_2(x2/y2||a)", double_h(2, {2}, 0),
              (x2 - a(-1)) * (x2 - a(0)) + (x2 - a(-1)) * (x1 - a(1)) + (x1 - a(0)) * (x1 - a(1)) +
                  ((y1 + a(0)) + (y2 + a(-1))) * ((x2 - a(0)) + (x1 - a(1))) +
                  (y1 + a(0)) * (y2 + a(0)));
    rep.check("e_2(x1/y1||a)", double_e(2, {1}, 0), x1 * y1 + y1 * y1 + a(0) * (x1 + y1));
    rep.check("e_3(x1/y1||a)", double_e(3, {1}, 0),
              x1 * y1 * y1 + y1.pow(3) + (a(-1) + a(0)) * (x1 * y1 + y1 * y1) +
                  a(-1) * a(0) * (x1 + y1));

    // s_{22/1} in the classical basis and its one-variable factorization
    {
        const SuperContext ctx{3};
        const SkewShape s221(Partition{2, 2}, Partition{1});
        auto classical = [&](const Partition& p) {
            return kill_alpha(
                schur_double_jt(SkewShape(p), ctx, SymKind::h, std::max(p.length(), 1)));
        };
        rep.check("s_22/1 classical expansion", schur_double_jt(s221, ctx, SymKind::h, 2),
                  classical(Partition{2, 1}) + a(1) * classical(Partition{2}) -
                      a(0) * classical(Partition{1, 1}) - a(0) * a(1) * classical(Partition{1}));
        rep.check("s_22/1 one variable pair", schur_double_jt(s221, {1}, SymKind::h, 2),
                  (x1 + y1) * (x1 - a(0)) * (y1 + a(1)));
    }

    // J_3 and J_-3 on |(8,3,1)>
    {
        FockVector v3 = apply_current(3, fock_ket(Partition{8, 3, 1}));
        FockVector e3;
        fock_add(e3, KetKey{Partition{5, 3, 1}, 0}, current_entry(5, 8, 3));
        fock_add(e3, KetKey{Partition{4, 3, 1}, 0}, current_entry(4, 8, 3));
        fock_add(e3, KetKey{Partition{3, 3, 1}, 0}, current_entry(3, 8, 3));
        fock_add(e3, KetKey{Partition{2, 2, 1}, 0}, -current_entry(1, 8, 3));
        fock_add(e3, KetKey{Partition{2, 1, 1}, 0}, -current_entry(0, 8, 3));
        fock_add(e3, KetKey{Partition{2}, 0}, current_entry(-2, 8, 3));
        fock_add(e3, KetKey{Partition{8}, 0}, -current_entry(-2, 2, 3));
        if (!(v3 == e3)) rep.fail_msg("J_3 |(8,3,1)> term list mismatch");

        FockVector vm3 = apply_current(-3, fock_ket(Partition{8, 3, 1}));
        FockVector em3;
        fock_add(em3, KetKey{Partition{11, 3, 1}, 0}, current_entry(11, 8, -3));
        fock_add(em3, KetKey{Partition{10, 3, 1}, 0}, current_entry(10, 8, -3));
        fock_add(em3, KetKey{Partition{9, 3, 1}, 0}, current_entry(9, 8, -3));
        fock_add(em3, KetKey{Partition{8, 6, 1}, 0}, current_entry(5, 2, -3));
        fock_add(em3, KetKey{Partition{8, 5, 1}, 0}, current_entry(4, 2, -3));
        fock_add(em3, KetKey{Partition{8, 4, 1}, 0}, current_entry(3, 2, -3));
        fock_add(em3, KetKey{Partition{8, 3, 3}, 0}, current_entry(1, -1, -3));
        fock_add(em3, KetKey{Partition{8, 3, 2}, 0}, current_entry(0, -1, -3));
        fock_add(em3, KetKey{Partition{8, 3, 2, 2}, 0}, -current_entry(0, -3, -3));
        fock_add(em3, KetKey{Partition{8, 3, 1, 1}, 0}, current_entry(-2, -3, -3));
        fock_add(em3, KetKey{Partition{8, 3, 1, 1, 1}, 0}, -current_entry(-2, -4, -3));
        fock_add(em3, KetKey{Partition{8, 3, 1, 1, 1, 1}, 0}, current_entry(-2, -5, -3));
        fock_add(em3, KetKey{Partition{8, 3, 1}, 0},
                 a(8).pow(3) + a(2).pow(3) - a(0).pow(3) - a(-2).pow(3));
        if (!(vm3 == em3)) rep.fail_msg("J_-3 |(8,3,1)> term list mismatch");
    }

    // the Murnaghan-Nakayama product and derivative expansions, full term lists
    {
        SchurExpansion mul = mn_multiply(Partition{8, 3, 1}, 3);
        SchurExpansion mexp;
        expansion_add(mexp, Partition{11, 3, 1}, Poly::integer(1));
        expansion_add(mexp, Partition{10, 3, 1}, a(8) + a(9) + a(10));
        expansion_add(mexp, Partition{9, 3, 1}, homog_sym(alpha_closed(8, 9), 2));
        expansion_add(mexp, Partition{8, 6, 1}, Poly::integer(1));
        expansion_add(mexp, Partition{8, 5, 1}, a(2) + a(3) + a(4));
        expansion_add(mexp, Partition{8, 4, 1}, homog_sym(alpha_closed(2, 3), 2));
        expansion_add(mexp, Partition{8, 3, 3}, a(-1) + a(0) + a(1));
        expansion_add(mexp, Partition{8, 3, 2}, homog_sym(alpha_closed(-1, 0), 2));
        expansion_add(mexp, Partition{8, 3, 2, 2}, Poly::integer(-1));
        expansion_add(mexp, Partition{8, 3, 1, 1}, homog_sym(alpha_closed(-3, -2), 2));
        expansion_add(mexp, Partition{8, 3, 1, 1, 1}, -(a(-4) + a(-3) + a(-2)));
        expansion_add(mexp, Partition{8, 3, 1, 1, 1, 1}, Poly::integer(1));
        expansion_add(mexp, Partition{8, 3, 1},
                      a(8).pow(3) + a(2).pow(3) - a(0).pow(3) - a(-2).pow(3));
        if (!(mul == mexp)) rep.fail_msg("p_3 s_(8,3,1) 13-term expansion mismatch");

        SchurExpansion der = mn_derivative(Partition{8, 3, 1}, 3);
        SchurExpansion dexp;
        expansion_add(dexp, Partition{5, 3, 1}, Poly::integer(1));
        expansion_add(dexp, Partition{4, 3, 1}, elem_sym(alpha_open(4, 8, -1), 1));
        expansion_add(dexp, Partition{3, 3, 1}, elem_sym(alpha_open(3, 8, -1), 2));
        expansion_add(dexp, Partition{2, 2, 1}, -elem_sym(alpha_open(1, 8, -1), 4));
        expansion_add(dexp, Partition{2, 1, 1}, -elem_sym(alpha_open(0, 8, -1), 5));
        expansion_add(dexp, Partition{2}, elem_sym(alpha_open(-2, 8, -1), 7));
        expansion_add(dexp, Partition{8}, -elem_sym(alpha_open(-2, 2, -1), 1));
        if (!(der == dexp)) rep.fail_msg("3 d s_(8,3,1)/d p_3 7-term expansion mismatch");
    }

    // J_-2 on the vacuum
    {
        SchurExpansion e = mn_multiply(Partition{}, 2);
        rep.check("J_-2 vacuum @ (2)", e[Partition{2}], Poly::integer(1));
        rep.check("J_-2 vacuum @ (1,1)", e[Partition{1, 1}], Poly::integer(-1));
        rep.check("J_-2 vacuum @ (1)", e[Partition{1}], a(0) + a(1));
    }

    // h_2 s_522 expansion
    {
        SchurExpansion e = pieri_expansion(Partition{5, 2, 2}, 2, SymKind::h, 3);
        if (e.size() != 10) rep.fail_msg("h_2 s_522 should have 10 terms");
        rep.check("h_2 s_522 @ (6,2,2)", e[Partition{6, 2, 2}], a(5) + a(6) - a(-1) - a(-2));
        rep.check("h_2 s_522 @ (5,3,2)", e[Partition{5, 3, 2}], a(2) + a(5) - a(-1) - a(-2));
        rep.check("h_2 s_522 @ (5,2,2,1)", e[Partition{5, 2, 2, 1}], a(5) - a(-1));
        rep.check("h_2 s_522 @ (5,2,2)", e[Partition{5, 2, 2}],
                  (a(5) - a(-1)) * (a(5) - a(-2)));
        rep.check("h_2 s_522 @ (7,2,2)", e[Partition{7, 2, 2}], Poly::integer(1));
    }

    // the worked Pieri coefficient
    rep.check("c_{4,(4,3)}^{(4,4,1)}", pieri_h_coeff(Partition{4, 3}, Partition{4, 4, 1}, 4, 4),
              (a(4) - a(0)) * (a(4) - a(1)));
}

}  // namespace dschur::verify
