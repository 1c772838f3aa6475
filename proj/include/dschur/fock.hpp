#pragma once

/// Charged fermionic Fock space over Poly coefficients: partition/charge
/// basis kets, the particle (Maya) encoding, Clifford generators, the
/// deformed current operators J_k with their projective diagonal correction,
/// the current cocycle, and the truncated vacuum-pairing table.
///
/// Particle convention: the ket (lambda, m) occupies the sites
/// lambda_k - k + 1 + m for k >= 1, so the charge-m vacuum fills every site
/// <= m.

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"
#include "partition.hpp"
#include "poly.hpp"

namespace dschur {

struct KetKey {
    Partition partition;
    int charge = 0;

    friend bool operator==(const KetKey&, const KetKey&) = default;
    friend bool operator<(const KetKey& a, const KetKey& b) {
        if (a.charge != b.charge) return a.charge < b.charge;
        return a.partition < b.partition;
    }
};

/// Finite linear combination of kets; no zero coefficients stored.
using FockVector = std::map<KetKey, Poly>;

inline void fock_add(FockVector& v, const KetKey& key, const Poly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = v.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) v.erase(it);
    }
}

inline FockVector fock_ket(Partition lambda, int charge = 0) {
    FockVector v;
    v.emplace(KetKey{std::move(lambda), charge}, Poly::integer(1));
    return v;
}

inline FockVector fock_scale(const FockVector& v, const Poly& c) {
    FockVector r;
    for (const auto& [k, p] : v) fock_add(r, k, p * c);
    return r;
}

inline FockVector fock_sum(const FockVector& a, const FockVector& b) {
    FockVector r = a;
    for (const auto& [k, p] : b) fock_add(r, k, p);
    return r;
}

/// Particle position of the k-th particle (1-based).
inline int particle_position(const KetKey& key, int k) {
    return key.partition.part(k) - k + 1 + key.charge;
}

inline bool site_occupied(const KetKey& key, int site) {
    const int len = key.partition.length();
    if (site <= key.charge - len) return true;  // vacuum tail
    for (int k = 1; k <= len; ++k)
        if (particle_position(key, k) == site) return true;
    return false;
}

/// Number of particles strictly above the given site (always finite).
inline int particles_above(const KetKey& key, int site) {
    int count = 0;
    const int len = key.partition.length();
    for (int k = 1; k <= len; ++k)
        if (particle_position(key, k) > site) ++count;
    // tail particles sit at charge - len, charge - len - 1, ...
    const int tail_top = key.charge - len;
    if (tail_top > site) count += tail_top - site;
    return count;
}

/// Occupied sites within [window_lo, window_hi].  The window must cover every
/// position where the configuration differs from the charge-m vacuum.
inline std::set<int> maya_positions(const KetKey& key, int window_lo, int window_hi) {
    const int lo_need = key.charge - key.partition.length();
    const int hi_need = key.charge + key.partition.part(1);
    if (window_lo > lo_need || window_hi < hi_need)
        throw std::invalid_argument("maya window too small");
    std::set<int> occ;
    for (int s = window_lo; s <= window_hi; ++s)
        if (site_occupied(key, s)) occ.insert(s);
    return occ;
}

/// Rebuild (partition, charge) from a strictly decreasing position list that
/// is complete down to the vacuum tail (positions[i] = charge - i eventually).
inline KetKey ket_from_positions(const std::vector<int>& positions, int charge) {
    std::vector<int> parts;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        const int lam = positions[k] + static_cast<int>(k) - charge;
        if (lam < 0) throw std::logic_error("position list inconsistent with charge");
        parts.push_back(lam);
    }
    return KetKey{Partition{std::move(parts)}, charge};
}

namespace detail {

/// Explicit positions p_1 > p_2 > ... extended with the vacuum tail until
/// all positions <= floor are tail positions.
inline std::vector<int> positions_down_to(const KetKey& key, int floor) {
    std::vector<int> pos;
    int k = 1;
    while (true) {
        const int p = particle_position(key, k);
        pos.push_back(p);
        if (k > key.partition.length() && p < floor) break;
        ++k;
    }
    return pos;
}

}  // namespace detail

/// psi_i: wedge-insert a particle at site i (charge +1); kets already
/// occupied at i are annihilated.  Sign: (-1)^{#particles above i}.
inline FockVector psi_apply(int i, const FockVector& v) {
    FockVector r;
    for (const auto& [key, coeff] : v) {
        if (site_occupied(key, i)) continue;
        const int sign = particles_above(key, i) % 2 == 0 ? 1 : -1;
        auto pos = detail::positions_down_to(key, i - 1);
        pos.insert(std::upper_bound(pos.begin(), pos.end(), i, std::greater<int>()), i);
        fock_add(r, ket_from_positions(pos, key.charge + 1),
                 sign > 0 ? coeff : -coeff);
    }
    return r;
}

/// psi*_j: delete the particle at site j (charge -1); kets without a particle
/// at j are annihilated.
inline FockVector psi_star_apply(int j, const FockVector& v) {
    FockVector r;
    for (const auto& [key, coeff] : v) {
        if (!site_occupied(key, j)) continue;
        const int sign = particles_above(key, j) % 2 == 0 ? 1 : -1;
        auto pos = detail::positions_down_to(key, j - 1);
        pos.erase(std::find(pos.begin(), pos.end(), j));
        fock_add(r, ket_from_positions(pos, key.charge - 1),
                 sign > 0 ? coeff : -coeff);
    }
    return r;
}

/// Matrix entry A_ij^k of the deformed current operator J_k:
///   e_{j-i-k}(-a_(i,j))   if k > 0 and j >= i + k,
///   h_{j-i-k}(a_[j,i])    if k <= 0 and j <= i <= j - k,
///   0                     otherwise.
inline Poly current_entry(int i, int j, int k) {
    if (k == 0) return i == j ? Poly::integer(1) : Poly::zero();
    if (k > 0) {
        if (j < i + k) return Poly::zero();
        return elem_sym(alpha_open(i, j, -1), j - i - k);
    }
    if (j > i || i > j - k) return Poly::zero();
    return homog_sym(alpha_closed(j, i), j - i - k);
}

/// A_ij^k through the residue formula: the coefficient of z^{-1} in
/// z^{k-2} (z^-1 | s^i a)^{j-i-1}.
inline Poly current_entry_residue(int i, int j, int k) {
    const int order = std::max(1 - k, 0) + 1;
    LaurentSeries f = shifted_power(j - i - 1, i, order).shifted(k - 2);
    return residue(f);
}

/// J_k acting on a Fock vector.  k must be nonzero; the k < 0 action carries
/// the projective diagonal correction
///   sum_{occupied i > 0} a_i^{-k} - sum_{empty i <= 0} a_i^{-k}.
inline FockVector apply_current(int k, const FockVector& v) {
    if (k == 0) throw std::invalid_argument("J_0 not supported");
    FockVector r;
    const int hop = k > 0 ? k : -k;
    for (const auto& [key, coeff] : v) {
        const int m = key.charge;
        const int len = key.partition.length();
        const int lo = m - len - hop - 1;
        const int hi = m + key.partition.part(1) + hop + 1;
        std::vector<bool> occ(static_cast<std::size_t>(hi - lo + 1));
        for (int s = lo; s <= hi; ++s) occ[static_cast<std::size_t>(s - lo)] = site_occupied(key, s);
        auto occupied = [&](int s) { return s < lo || occ[static_cast<std::size_t>(s - lo)]; };

        // Off-diagonal moves: particle at source j -> empty destination i with
        // A_ij^k nonzero; sign counts particles strictly between them.
        for (int src = lo; src <= hi; ++src) {
            if (!occupied(src)) continue;
            // k > 0 moves down to any empty site <= src - k (all sites below
            // the window are occupied); k < 0 moves up by at most -k.
            const int dlo = k > 0 ? lo : src + 1;
            const int dhi = k > 0 ? src - k : src + hop;
            for (int dst = std::max(dlo, lo); dst <= std::min(dhi, hi); ++dst) {
                if (occupied(dst) || dst == src) continue;
                Poly a = current_entry(dst, src, k);
                if (a.is_zero()) continue;
                int between = 0;
                for (int s = std::min(src, dst) + 1; s < std::max(src, dst); ++s)
                    if (occupied(s)) ++between;
                if (between % 2 != 0) a = -a;
                auto pos = detail::positions_down_to(key, std::min(src, dst) - 1);
                *std::find(pos.begin(), pos.end(), src) = dst;
                std::sort(pos.begin(), pos.end(), std::greater<int>());
                fock_add(r, ket_from_positions(pos, m), a * coeff);
            }
        }

        if (k < 0) {
            Poly diag;
            for (int s = 1; s <= hi; ++s)
                if (occupied(s)) diag += Poly::alpha(s).pow(static_cast<unsigned>(hop));
            for (int s = lo; s <= 0; ++s)
                if (!occupied(s)) diag -= Poly::alpha(s).pow(static_cast<unsigned>(hop));
            fock_add(r, key, diag * coeff);
        }
    }
    return r;
}

/// sum_a A_{p,a}^k A_{a,q}^l over the (finite) support band.
inline Poly compose_current_entry(int p, int q, int k, int l) {
    const int lo = std::min(p, q) - std::abs(k) - std::abs(l);
    const int hi = std::max(p, q) + std::abs(k) + std::abs(l);
    Poly s;
    for (int a = lo; a <= hi; ++a) {
        Poly left = current_entry(p, a, k);
        if (left.is_zero()) continue;
        Poly right = current_entry(a, q, l);
        if (right.is_zero()) continue;
        s += left * right;
    }
    return s;
}

/// The current cocycle phi(J_k, J_l) evaluated over the support band:
/// sum_{i<=0<j} A_ij^k A_ji^l - sum_{j<=0<i} A_ij^k A_ji^l = k delta_{k,-l}.
inline Poly cocycle_currents(int k, int l, int window) {
    if (window < std::max(std::abs(k), std::abs(l)))
        throw std::invalid_argument("cocycle window too small");
    Poly s;
    for (int i = -window; i <= 0; ++i)
        for (int j = 1; j <= window; ++j) {
            Poly a = current_entry(i, j, k);
            if (!a.is_zero()) {
                Poly b = current_entry(j, i, l);
                if (!b.is_zero()) s += a * b;
            }
            Poly c = current_entry(j, i, k);
            if (!c.is_zero()) {
                Poly d = current_entry(i, j, l);
                if (!d.is_zero()) s -= c * d;
            }
        }
    return s;
}

/// Truncated vacuum pairing <0| psi(z|a) psi*(w|a) |0>: entry (b, q) is the
/// coefficient of w^b z^{-q} in sum_{a=0..N} w^-1 (w^-1|a)^{-a-1} / (z^-1|a)^{-a},
/// which must be the identity matrix.
inline std::vector<std::vector<Poly>> vacuum_pairing_table(int N) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    std::vector<std::vector<Poly>> table(static_cast<std::size_t>(N) + 1,
                                         std::vector<Poly>(static_cast<std::size_t>(N) + 1));
    for (int a = 0; a <= N; ++a) {
        // series in w, valuation a
        LaurentSeries wf = shifted_power(-a - 1, 0, N + 1).shifted(-1);
        // Laurent polynomial in z: 1/(z^-1|a)^{-a} = (z^-1 | s^{-a} a)^a
        LaurentSeries zf = shifted_power(a, -a, 1);
        for (int b = a; b <= N; ++b) {
            const Poly& wc = wf.coefficient(b);
            if (wc.is_zero()) continue;
            for (int q = 0; q <= a; ++q) {
                const Poly& zc = zf.coefficient(-q);
                if (zc.is_zero()) continue;
                table[static_cast<std::size_t>(b)][static_cast<std::size_t>(q)] += wc * zc;
            }
        }
    }
    return table;
}

/// Dual ordering <0| psi*(w|a) psi(z|a) |0>: entry (b, q) is the coefficient
/// of w^{-b} z^{q} for b, q in [1, N]; expanding z/(w-z) gives the identity.
inline std::vector<std::vector<Poly>> dual_vacuum_pairing_table(int N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    std::vector<std::vector<Poly>> table(static_cast<std::size_t>(N),
                                         std::vector<Poly>(static_cast<std::size_t>(N)));
    for (int a = 1; a <= N; ++a) {
        // Laurent polynomial in w with exponents -a .. -1
        LaurentSeries wf = shifted_power(a - 1, 0, 1).shifted(-1);
        // series in z, valuation a: 1/(z^-1|a)^a = (z^-1 | s^a a)^{-a}
        LaurentSeries zf = shifted_power(-a, a, N + 1);
        for (int b = 1; b <= a; ++b) {
            const Poly& wc = wf.coefficient(-b);
            if (wc.is_zero()) continue;
            for (int q = a; q <= N; ++q) {
                const Poly& zc = zf.coefficient(q);
                if (zc.is_zero()) continue;
                table[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(q - 1)] += wc * zc;
            }
        }
    }
    return table;
}

}  // namespace dschur
