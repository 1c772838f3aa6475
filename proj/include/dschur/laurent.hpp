#pragma once

/// Formal Laurent series in one variable z over Poly, with an explicit
/// inclusive truncation order.  Arithmetic never claims precision beyond what
/// the operands support.  On top of plain series arithmetic this header
/// provides the shifted-power basis (z^-1 | s^s a)^k, conversion into that
/// basis, and formal residue extraction.

#include <map>
#include <stdexcept>
#include <vector>

#include "poly.hpp"

namespace dschur {

class LaurentSeries {
public:
    /// The zero series known exactly up to (and including) z^order.
    static LaurentSeries zero(int order) {
        LaurentSeries f;
        f.val_ = order + 1;
        f.order_ = order;
        return f;
    }

    /// c * z^k, exact; the series order is max(k, order).
    static LaurentSeries monomial(Poly c, int k, int order) {
        LaurentSeries f = zero(std::max(k, order));
        if (!c.is_zero()) {
            f.val_ = k;
            f.c_.push_back(std::move(c));
            f.pad_to_order();
        }
        return f;
    }

    static LaurentSeries one(int order) { return monomial(Poly::integer(1), 0, order); }

    /// Build from explicit coefficients for z^v, z^{v+1}, ..., z^{v+n-1}.
    static LaurentSeries from_coeffs(int v, std::vector<Poly> coeffs, int order) {
        LaurentSeries f;
        f.val_ = v;
        f.c_ = std::move(coeffs);
        f.order_ = v + static_cast<int>(f.c_.size()) - 1;
        if (order > f.order_) {
            f.c_.resize(f.c_.size() + static_cast<std::size_t>(order - f.order_));
            f.order_ = order;
        }
        f.normalize();
        return f;
    }

    int valuation() const { return val_; }
    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of z^k.  Positions below the valuation are known zeros;
    /// positions above the truncation order are unknown and raise an error.
    const Poly& coefficient(int k) const {
        static const Poly kZero{};
        if (k > order_) throw std::invalid_argument("coefficient beyond truncation order");
        if (k < val_) return kZero;
        return c_[static_cast<std::size_t>(k - val_)];
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& p : r.c_) p = -p;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
        const int order = std::min(f.order_, g.order_);
        LaurentSeries r = zero(order);
        const int lo = std::min(f.val_, g.val_);
        if (lo > order) return r;
        r.val_ = lo;
        r.c_.assign(static_cast<std::size_t>(order - lo) + 1, Poly{});
        for (int k = lo; k <= order; ++k) {
            Poly s;
            if (k >= f.val_ && k <= f.order_) s += f.c_[static_cast<std::size_t>(k - f.val_)];
            if (k >= g.val_ && k <= g.order_) s += g.c_[static_cast<std::size_t>(k - g.val_)];
            r.c_[static_cast<std::size_t>(k - lo)] = std::move(s);
        }
        r.normalize();
        return r;
    }

    friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) {
        return f + (-g);
    }

    friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
        // Truncated Cauchy product; the result is exact up to
        // min(order_f + val_g, order_g + val_f).
        const int order = std::min(f.order_ + g.effective_valuation(),
                                   g.order_ + f.effective_valuation());
        if (f.is_zero() || g.is_zero()) return zero(order);
        LaurentSeries r = zero(order);
        const int lo = f.val_ + g.val_;
        if (lo > order) return r;
        r.val_ = lo;
        r.c_.assign(static_cast<std::size_t>(order - lo) + 1, Poly{});
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j) {
                const int k = f.val_ + static_cast<int>(i) + g.val_ + static_cast<int>(j);
                if (k > order) break;
                if (g.c_[j].is_zero()) continue;
                r.c_[static_cast<std::size_t>(k - lo)] += f.c_[i] * g.c_[j];
            }
        }
        r.normalize();
        return r;
    }

    friend LaurentSeries operator*(const LaurentSeries& f, const Poly& p) {
        LaurentSeries r = f;
        for (auto& c : r.c_) c *= p;
        r.normalize();
        return r;
    }

    /// Multiply by z^m (exact shift).
    LaurentSeries shifted(int m) const {
        LaurentSeries r = *this;
        r.val_ += m;
        r.order_ += m;
        return r;
    }

    /// Truncate to a lower order.
    LaurentSeries truncated(int order) const {
        if (order >= order_) return *this;
        LaurentSeries r;
        r.val_ = val_;
        r.order_ = order;
        if (r.val_ > order) {
            r.val_ = order + 1;
            return r;
        }
        r.c_.assign(c_.begin(), c_.begin() + (order - val_ + 1));
        r.normalize();
        return r;
    }

    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
    // Valuation used for precision bookkeeping: a zero series of order N is
    // O(z^{N+1}).
    int effective_valuation() const { return c_.empty() ? order_ + 1 : val_; }

    void pad_to_order() {
        if (!c_.empty())
            c_.resize(static_cast<std::size_t>(order_ - val_) + 1);
    }

    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            val_ = order_ + 1;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            val_ += static_cast<int>(lead);
        }
    }

    int val_ = 1;
    int order_ = 0;
    std::vector<Poly> c_;
};

/// Invert a series whose lowest-order coefficient is the integer +1 or -1.
/// The result g satisfies f*g = 1 + O(z^{order+1}).
inline LaurentSeries invert_unit(const LaurentSeries& f, int order) {
    if (f.is_zero()) throw std::invalid_argument("non-invertible leading coefficient");
    const int m = f.valuation();
    const Poly& lead = f.coefficient(m);
    if (!lead.is_integer() || (lead.constant_value() != 1 && lead.constant_value() != -1))
        throw std::invalid_argument("non-invertible leading coefficient");
    const Int u = lead.constant_value();  // 1/u == u

    const int n = order + m;  // number of correction coefficients: g has exponents -m .. -m+n
    std::vector<Poly> g;
    g.reserve(static_cast<std::size_t>(std::max(n + 1, 1)));
    g.push_back(Poly::integer(u));
    for (int k = 1; k <= n; ++k) {
        // g_k = -u * sum_{i=1..k} f_{m+i} g_{k-i}
        Poly s;
        for (int i = 1; i <= k; ++i) {
            if (m + i > f.order()) break;
            const Poly& fi = f.coefficient(m + i);
            if (fi.is_zero()) continue;
            s += fi * g[static_cast<std::size_t>(k - i)];
        }
        g.push_back((-s) * u);
    }
    return LaurentSeries::from_coeffs(-m, std::move(g), order);
}

/// The shifted power (z^-1 | s^s a)^k as a Laurent series:
///   k >= 0: the exact Laurent polynomial prod_{i=1..k} (z^-1 - a_{i+s}),
///   k <  0: the expansion of prod_{i=k+1..0} (z^-1 - a_{i+s})^{-1}, valuation -k.
inline LaurentSeries shifted_power(int k, int s, int order) {
    if (k >= 0) {
        // exact Laurent polynomial; pad the working order so the k factor
        // multiplications land on the requested order
        const int M = std::max(order, 0) + k;
        LaurentSeries r = LaurentSeries::one(M);
        for (int i = 1; i <= k; ++i) {
            LaurentSeries factor = LaurentSeries::monomial(Poly::integer(1), -1, M) +
                                   LaurentSeries::monomial(-Poly::alpha(i + s), 0, M);
            r = r * factor;
        }
        return r.truncated(std::max(order, 0));
    }
    // (z^-1 - a_i)^{-1} = z * (1 - a_i z)^{-1}, multiplied over i = k+1 .. 0.
    LaurentSeries r = LaurentSeries::one(order);
    for (int i = k + 1; i <= 0; ++i) {
        LaurentSeries unit = LaurentSeries::one(order) +
                             LaurentSeries::monomial(-Poly::alpha(i + s), 1, order);
        r = (r * invert_unit(unit, order)).shifted(1).truncated(order);
    }
    return r;
}

/// Formal residue: the coefficient of z^-1.
inline Poly residue(const LaurentSeries& f) {
    if (f.order() < -1) throw std::invalid_argument("insufficient precision for residue");
    return f.coefficient(-1);
}

/// Express f in the shifted power basis: f = sum_k c_k (z^-1 | s^s a)^k to
/// f's precision.  By triangularity c_k = 0 for k > -valuation(f); the
/// caller bounds the infinite negative tail with k_min.
inline std::map<int, Poly> to_shifted_basis(const LaurentSeries& f, int s, int k_min) {
    std::map<int, Poly> coeffs;
    LaurentSeries rem = f;
    int k = rem.is_zero() ? k_min - 1 : -rem.valuation();
    for (; k >= k_min && !rem.is_zero(); --k) {
        if (-k < rem.valuation()) continue;  // coefficient of z^{-k} already zero
        Poly c = rem.coefficient(-k);
        if (c.is_zero()) continue;
        coeffs[k] = c;
        rem = rem - shifted_power(k, s, rem.order()) * c;
    }
    return coeffs;
}

}  // namespace dschur
