#pragma once

/// Exact sparse multivariate polynomial arithmetic over Z in three tagged
/// variable families: deformation parameters a_i (i in Z) and indeterminates
/// x_i, y_i (i >= 1).  Every higher layer of the library uses Poly as its
/// coefficient object, so canonical form (sorted terms, no zero coefficients,
/// no zero exponents) is maintained by construction and equality is
/// structural.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dschur {

using Int = boost::multiprecision::cpp_int;

enum class VarKind : std::uint8_t { alpha = 0, x = 1, y = 2 };

/// A tagged variable.  Alpha indices may be any integer; x/y indices are >= 1.
struct Var {
    VarKind kind;
    std::int32_t index;

    static Var alpha(int i) { return Var{VarKind::alpha, i}; }
    static Var x(int i) {
        if (i < 1) throw std::invalid_argument("x index must be >= 1");
        return Var{VarKind::x, i};
    }
    static Var y(int i) {
        if (i < 1) throw std::invalid_argument("y index must be >= 1");
        return Var{VarKind::y, i};
    }

    friend bool operator==(const Var&, const Var&) = default;
};

namespace detail {

// Variables are packed into a single 32-bit code whose numeric order is the
// canonical variable order (kind, then index ascending).
inline constexpr std::int64_t kIndexBias = std::int64_t{1} << 27;

inline std::uint32_t encode_var(Var v) {
    const std::int64_t biased = std::int64_t{v.index} + kIndexBias;
    if (biased < 0 || biased >= (std::int64_t{1} << 28))
        throw std::invalid_argument("variable index out of supported range");
    return (static_cast<std::uint32_t>(v.kind) << 28) | static_cast<std::uint32_t>(biased);
}

inline Var decode_var(std::uint32_t code) {
    const auto kind = static_cast<VarKind>(code >> 28);
    const auto index = static_cast<std::int32_t>(std::int64_t{code & ((1u << 28) - 1)} - kIndexBias);
    return Var{kind, index};
}

}  // namespace detail

inline bool operator<(const Var& a, const Var& b) {
    return detail::encode_var(a) < detail::encode_var(b);
}

/// A power product of variables in canonical form: factors sorted by the
/// variable order, all exponents positive.  Stored packed as (code<<32)|exp.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial{}; }

    static Monomial variable(Var v, std::uint32_t exp = 1) {
        Monomial m;
        if (exp > 0) m.ents_.push_back(pack(detail::encode_var(v), exp));
        return m;
    }

    bool is_one() const { return ents_.empty(); }

    int degree() const {
        std::int64_t d = 0;
        for (auto e : ents_) d += static_cast<std::uint32_t>(e);
        return static_cast<int>(d);
    }

    int degree_in(VarKind kind) const {
        std::int64_t d = 0;
        for (auto e : ents_)
            if (static_cast<VarKind>(e >> 60) == kind) d += static_cast<std::uint32_t>(e);
        return static_cast<int>(d);
    }

    std::size_t factor_count() const { return ents_.size(); }

    std::pair<Var, std::uint32_t> factor(std::size_t i) const {
        return {detail::decode_var(static_cast<std::uint32_t>(ents_[i] >> 32)),
                static_cast<std::uint32_t>(ents_[i])};
    }

    std::uint32_t exponent_of(Var v) const {
        const std::uint64_t key = std::uint64_t{detail::encode_var(v)} << 32;
        for (auto e : ents_)
            if ((e & ~std::uint64_t{0xffffffff}) == key) return static_cast<std::uint32_t>(e);
        return 0;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.ents_.reserve(ents_.size() + o.ents_.size());
        std::size_t i = 0, j = 0;
        while (i < ents_.size() && j < o.ents_.size()) {
            const auto ca = ents_[i] >> 32, cb = o.ents_[j] >> 32;
            if (ca < cb) {
                r.ents_.push_back(ents_[i++]);
            } else if (cb < ca) {
                r.ents_.push_back(o.ents_[j++]);
            } else {
                const std::uint64_t exp = static_cast<std::uint32_t>(ents_[i]) +
                                          std::uint64_t{static_cast<std::uint32_t>(o.ents_[j])};
                r.ents_.push_back((ents_[i] & ~std::uint64_t{0xffffffff}) | exp);
                ++i, ++j;
            }
        }
        r.ents_.insert(r.ents_.end(), ents_.begin() + i, ents_.end());
        r.ents_.insert(r.ents_.end(), o.ents_.begin() + j, o.ents_.end());
        return r;
    }

    /// Erase the given variable entirely (used by substitution).
    Monomial without(Var v) const {
        const std::uint64_t key = std::uint64_t{detail::encode_var(v)} << 32;
        Monomial r;
        r.ents_.reserve(ents_.size());
        for (auto e : ents_)
            if ((e & ~std::uint64_t{0xffffffff}) != key) r.ents_.push_back(e);
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    const std::vector<std::uint64_t>& raw() const { return ents_; }

private:
    static std::uint64_t pack(std::uint32_t code, std::uint32_t exp) {
        return (std::uint64_t{code} << 32) | exp;
    }

    std::vector<std::uint64_t> ents_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto e : m.raw()) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Canonical term order: graded by x/y-degree then total degree (both
/// descending), ties broken lexicographically, where a positive exponent on
/// an earlier variable wins and, on the same variable, the larger exponent
/// wins.  So x1^2 precedes x1*y1 precedes y1^2 precedes the pure-alpha tail,
/// matching the usual display order.
inline bool term_precedes(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    const int xa = da - a.degree_in(VarKind::alpha), xb = db - b.degree_in(VarKind::alpha);
    if (xa != xb) return xa > xb;
    if (da != db) return da > db;
    const auto& ra = a.raw();
    const auto& rb = b.raw();
    const std::size_t n = std::min(ra.size(), rb.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto ca = ra[i] >> 32, cb = rb[i] >> 32;
        if (ca != cb) return ca < cb;
        const auto ea = static_cast<std::uint32_t>(ra[i]), eb = static_cast<std::uint32_t>(rb[i]);
        if (ea != eb) return ea > eb;
    }
    return ra.size() < rb.size();
}

/// Exact sparse polynomial, canonical form throughout.
class Poly {
public:
    using Term = std::pair<Monomial, Int>;

    Poly() = default;

    static Poly zero() { return Poly{}; }

    static Poly integer(Int c) {
        Poly p;
        if (c != 0) p.t_.emplace_back(Monomial::one(), std::move(c));
        return p;
    }

    static Poly variable(Var v) { return monomial(Monomial::variable(v), 1); }
    static Poly alpha(int i) { return variable(Var::alpha(i)); }
    static Poly x(int i) { return variable(Var::x(i)); }
    static Poly y(int i) { return variable(Var::y(i)); }

    static Poly monomial(Monomial m, Int c) {
        Poly p;
        if (c != 0) p.t_.emplace_back(std::move(m), std::move(c));
        return p;
    }

    bool is_zero() const { return t_.empty(); }

    bool is_integer() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }

    /// Constant term as an integer (the coefficient of the unit monomial).
    Int constant_value() const {
        for (const auto& [m, c] : t_)
            if (m.is_one()) return c;
        return 0;
    }

    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.degree());
        return d;
    }

    /// True when every term has the same degree in the given variable family.
    bool is_homogeneous_in(VarKind kind, int deg) const {
        for (const auto& [m, c] : t_)
            if (m.degree_in(kind) != deg) return false;
        return true;
    }

    Int coefficient(const Monomial& m) const {
        for (const auto& [mm, c] : t_)
            if (mm == m) return c;
        return 0;
    }

    std::vector<Var> variables() const {
        std::vector<std::uint32_t> codes;
        for (const auto& [m, c] : t_)
            for (auto e : m.raw()) codes.push_back(static_cast<std::uint32_t>(e >> 32));
        std::sort(codes.begin(), codes.end());
        codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        std::vector<Var> vs;
        vs.reserve(codes.size());
        for (auto c : codes) vs.push_back(detail::decode_var(c));
        return vs;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        if (b.t_.size() == 1) return a.times_term(b.t_[0].first, b.t_[0].second);
        if (a.t_.size() == 1) return b.times_term(a.t_[0].first, a.t_[0].second);
        std::unordered_map<Monomial, Int, MonomialHash> acc;
        acc.reserve(a.t_.size() * 2 + b.t_.size() * 2);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) acc[ma.times(mb)] += ca * cb;
        return from_map(std::move(acc));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& a, const Int& c) {
        if (c == 0) return Poly{};
        Poly r = a;
        for (auto& [m, cc] : r.t_) cc *= c;
        return r;
    }
    friend Poly operator*(const Int& c, const Poly& a) { return a * c; }
    friend Poly operator+(const Poly& a, const Int& c) { return a + Poly::integer(c); }
    friend Poly operator-(const Poly& a, const Int& c) { return a - Poly::integer(c); }

    Poly times_term(const Monomial& m, const Int& c) const {
        if (c == 0) return Poly{};
        Poly r;
        r.t_.reserve(t_.size());
        for (const auto& [mm, cc] : t_) r.t_.emplace_back(mm.times(m), cc * c);
        if (!m.is_one()) std::sort(r.t_.begin(), r.t_.end(), term_less);
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r = Poly::integer(1);
        Poly base = *this;
        while (e > 0) {
            if (e & 1u) r *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return r;
    }

    /// Assemble from an accumulation map, dropping zeros and sorting.
    static Poly from_map(std::unordered_map<Monomial, Int, MonomialHash> acc) {
        Poly r;
        r.t_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.t_.emplace_back(m, std::move(c));
        std::sort(r.t_.begin(), r.t_.end(), term_less);
        return r;
    }

private:
    static bool term_less(const Term& a, const Term& b) { return term_precedes(a.first, b.first); }

    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        Poly r;
        r.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() && j < b.t_.size()) {
            if (a.t_[i].first == b.t_[j].first) {
                Int c = subtract ? Int(a.t_[i].second - b.t_[j].second)
                                 : Int(a.t_[i].second + b.t_[j].second);
                if (c != 0) r.t_.emplace_back(a.t_[i].first, std::move(c));
                ++i, ++j;
            } else if (term_precedes(a.t_[i].first, b.t_[j].first)) {
                r.t_.push_back(a.t_[i++]);
            } else {
                r.t_.emplace_back(b.t_[j].first, subtract ? -b.t_[j].second : b.t_[j].second);
                ++j;
            }
        }
        for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
        for (; j < b.t_.size(); ++j)
            r.t_.emplace_back(b.t_[j].first, subtract ? -b.t_[j].second : b.t_[j].second);
        return r;
    }

    std::vector<Term> t_;
};

/// Ring homomorphism a_i -> a_{i+m}; x and y variables are fixed.
inline Poly shift_alpha(const Poly& p, int m) {
    if (m == 0) return p;
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    acc.reserve(p.term_count() * 2);
    for (const auto& [mono, c] : p.terms()) {
        Monomial shifted;
        for (std::size_t i = 0; i < mono.factor_count(); ++i) {
            auto [v, e] = mono.factor(i);
            if (v.kind == VarKind::alpha) v.index += m;
            shifted = shifted.times(Monomial::variable(v, e));
        }
        acc[shifted] += c;
    }
    return Poly::from_map(std::move(acc));
}

/// Ring involution a_i -> a_{1-i}; x and y variables are fixed.
inline Poly iota_alpha(const Poly& p) {
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    acc.reserve(p.term_count() * 2);
    for (const auto& [mono, c] : p.terms()) {
        Monomial im;
        for (std::size_t i = 0; i < mono.factor_count(); ++i) {
            auto [v, e] = mono.factor(i);
            if (v.kind == VarKind::alpha) v.index = 1 - v.index;
            im = im.times(Monomial::variable(v, e));
        }
        acc[im] += c;
    }
    return Poly::from_map(std::move(acc));
}

/// A variable together with a sign, the input format for the symmetric
/// polynomial builders.  Lists may contain repeats (multisets).
using SignedVar = std::pair<Var, int>;

namespace detail {

// Direct subset enumeration for e_k of distinct variables: when k is close
// to |vars| this walks k-subsets through their small complements, avoiding
// the 2^m intermediate growth of the recurrence.
inline Poly elem_sym_subsets(std::span<const SignedVar> vars, int k) {
    const int m = static_cast<int>(vars.size());
    const bool complement = k > m - k;
    const int s = complement ? m - k : k;
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    std::vector<int> pick(static_cast<std::size_t>(s));
    std::vector<char> in(static_cast<std::size_t>(m));
    auto emit = [&]() {
        Monomial mono;
        int sign = 1;
        for (int i = 0; i < m; ++i) {
            if (static_cast<bool>(in[static_cast<std::size_t>(i)]) == complement) continue;
            mono = mono.times(Monomial::variable(vars[static_cast<std::size_t>(i)].first));
            if (vars[static_cast<std::size_t>(i)].second < 0) sign = -sign;
        }
        acc[mono] += sign;
    };
    auto rec = [&](auto&& self, int start, int chosen) -> void {
        if (chosen == s) {
            emit();
            return;
        }
        for (int i = start; i <= m - (s - chosen); ++i) {
            in[static_cast<std::size_t>(i)] = 1;
            self(self, i + 1, chosen + 1);
            in[static_cast<std::size_t>(i)] = 0;
        }
    };
    rec(rec, 0, 0);
    return Poly::from_map(std::move(acc));
}

}  // namespace detail

/// e_k of a signed variable list; e_0 = 1 and e_k = 0 for k > |vars|.
inline Poly elem_sym(std::span<const SignedVar> vars, int k) {
    if (k < 0 || k > static_cast<int>(vars.size())) return Poly::zero();
    if (k == 0) return Poly::integer(1);
    // distinct variables admit the complement-subset shortcut
    if (std::min<int>(k, static_cast<int>(vars.size()) - k) <= 4) {
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < vars.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i].first == vars[j].first) {
                    distinct = false;
                    break;
                }
        if (distinct) return detail::elem_sym_subsets(vars, k);
    }
    std::vector<Poly> e(static_cast<std::size_t>(k) + 1);
    e[0] = Poly::integer(1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto& [v, s] = vars[i];
        const Poly sv = s >= 0 ? Poly::variable(v) : -Poly::variable(v);
        for (int j = std::min<int>(k, static_cast<int>(i) + 1); j >= 1; --j)
            e[j] += sv * e[j - 1];
    }
    return e[static_cast<std::size_t>(k)];
}

inline Poly elem_sym(const std::vector<SignedVar>& vars, int k) {
    return elem_sym(std::span<const SignedVar>(vars), k);
}

/// h_k of a signed variable list; h_0 = 1 and h_k of the empty list is 0 for k > 0.
inline Poly homog_sym(std::span<const SignedVar> vars, int k) {
    if (k < 0) return Poly::zero();
    std::vector<Poly> h(static_cast<std::size_t>(k) + 1);
    h[0] = Poly::integer(1);
    for (const auto& [v, s] : vars) {
        const Poly sv = s >= 0 ? Poly::variable(v) : -Poly::variable(v);
        for (int j = 1; j <= k; ++j) h[j] += sv * h[j - 1];
    }
    return h[static_cast<std::size_t>(k)];
}

inline Poly homog_sym(const std::vector<SignedVar>& vars, int k) {
    return homog_sym(std::span<const SignedVar>(vars), k);
}

/// The open-interval alpha window (i,j): a_{i+1}, ..., a_{j-1} with the given sign.
inline std::vector<SignedVar> alpha_open(int i, int j, int sign = 1) {
    std::vector<SignedVar> vs;
    for (int u = i + 1; u <= j - 1; ++u) vs.emplace_back(Var::alpha(u), sign);
    return vs;
}

/// The closed-interval alpha window [i,j]: a_i, ..., a_j (empty when i > j).
inline std::vector<SignedVar> alpha_closed(int i, int j, int sign = 1) {
    std::vector<SignedVar> vs;
    for (int u = i; u <= j; ++u) vs.emplace_back(Var::alpha(u), sign);
    return vs;
}

/// Simultaneous substitution.  Unassigned variables persist.  Assignment
/// values must not mention assigned variables.
inline Poly specialize(const Poly& p, const std::map<Var, Poly>& assignment) {
    for (const auto& [v, value] : assignment)
        for (const Var& w : value.variables())
            if (assignment.count(w))
                throw std::invalid_argument("cyclic substitution in specialize");

    Poly result;
    for (const auto& [mono, c] : p.terms()) {
        Poly term = Poly::integer(c);
        Monomial untouched = Monomial::one();
        for (std::size_t i = 0; i < mono.factor_count(); ++i) {
            auto [v, e] = mono.factor(i);
            auto it = assignment.find(v);
            if (it == assignment.end())
                untouched = untouched.times(Monomial::variable(v, e));
            else
                term *= it->second.pow(e);
        }
        result += term.times_term(untouched, 1);
    }
    return result;
}

/// Substitute 0 for every alpha variable (the classical specialization).
inline Poly kill_alpha(const Poly& p) {
    Poly r;
    for (const auto& [mono, c] : p.terms()) {
        if (mono.degree_in(VarKind::alpha) == 0) r += Poly::monomial(mono, c);
    }
    return r;
}

}  // namespace dschur
