#pragma once

/// Integer partitions, skew shapes, strips and ribbons.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace dschur {

/// Weakly decreasing list of positive integers; the empty list is the empty
/// partition.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                throw std::invalid_argument("parts must be weakly decreasing and positive");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part with 1-based index; zero beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    Partition conjugate() const {
        std::vector<int> c;
        if (parts_.empty()) return Partition{};
        c.resize(static_cast<std::size_t>(parts_[0]));
        for (std::size_t j = 0; j < c.size(); ++j) {
            int count = 0;
            for (int p : parts_)
                if (p > static_cast<int>(j)) ++count;
            c[j] = count;
        }
        return Partition{std::move(c)};
    }

    bool contains(const Partition& inner) const {
        for (int i = 1; i <= inner.length(); ++i)
            if (inner.part(i) > part(i)) return false;
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

/// outer/inner with inner contained in outer.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!outer.contains(inner))
            throw std::invalid_argument("inner partition not contained in outer");
    }

    explicit SkewShape(Partition out) : SkewShape(std::move(out), Partition{}) {}

    int size() const { return outer.size() - inner.size(); }

    /// Contents (column - row) of the skew cells, rows 1-based top to bottom.
    std::vector<int> cell_contents() const {
        std::vector<int> cs;
        for (int i = 1; i <= outer.length(); ++i)
            for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) cs.push_back(j - i);
        return cs;
    }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// At most one cell per column.
inline bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.part(i + 1) > inner.part(i)) return false;
    return true;
}

/// At most one cell per row.
inline bool is_vertical_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.part(i) - inner.part(i) > 1) return false;
    return true;
}

/// Connected skew shape with no 2x2 block.
inline bool is_ribbon(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner) || outer.size() == inner.size()) return false;
    int first_row = 0, last_row = 0;
    for (int i = 1; i <= outer.length(); ++i) {
        if (outer.part(i) > inner.part(i)) {
            if (first_row == 0) first_row = i;
            last_row = i;
        }
    }
    for (int i = first_row; i <= last_row; ++i) {
        if (outer.part(i) == inner.part(i)) return false;  // disconnected rows
        // no 2x2 block: row i and i+1 overlap in at most one column
        if (i < last_row && outer.part(i + 1) > inner.part(i) + 1) return false;
        // connectivity: consecutive rows must share at least one column edge
        if (i < last_row && outer.part(i + 1) <= inner.part(i)) return false;
    }
    return true;
}

/// Number of rows minus one.
inline int ribbon_height(const Partition& outer, const Partition& inner) {
    int rows = 0;
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.part(i) > inner.part(i)) ++rows;
    return rows - 1;
}

namespace detail {

inline void sub_partitions_rec(const Partition& outer, int row, std::vector<int>& cur,
                               std::vector<Partition>& out) {
    if (row > outer.length()) {
        out.emplace_back(std::vector<int>(cur.begin(), cur.end()));
        return;
    }
    const int hi = std::min(outer.part(row), row == 1 ? outer.part(1) : cur[row - 2]);
    for (int v = 0; v <= hi; ++v) {
        cur.push_back(v);
        sub_partitions_rec(outer, row + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// All partitions contained in outer.
inline std::vector<Partition> sub_partitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::sub_partitions_rec(outer, 1, cur, out);
    return out;
}

/// All partitions of n (weakly decreasing compositions), n >= 0.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(std::vector<int>(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// All partitions of size at most n.
inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int s = 0; s <= n; ++s) {
        auto ps = partitions_of(s);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

/// All mu contained in lambda with lambda/mu a ribbon of size exactly k.
inline std::vector<Partition> ribbon_predecessors(const Partition& lambda, int k) {
    std::vector<Partition> out;
    for (const Partition& mu : sub_partitions(lambda))
        if (lambda.size() - mu.size() == k && is_ribbon(lambda, mu)) out.push_back(mu);
    return out;
}

/// All lambda containing mu with lambda/mu a horizontal strip of size exactly k.
inline std::vector<Partition> horizontal_strip_successors(const Partition& mu, int k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    const int rows = mu.length() + 1;
    auto rec = [&](auto&& self, int row, int rest) -> void {
        if (row > rows) {
            if (rest == 0) {
                out.emplace_back(std::vector<int>(cur));
            }
            return;
        }
        // lambda_row ranges over [mu_row, min(mu_{row-1}, mu_row + rest)],
        // horizontal strip: lambda_{row} <= mu_{row-1}
        const int lo = mu.part(row);
        const int hi = row == 1 ? mu.part(1) + rest : std::min(mu.part(row - 1), mu.part(row) + rest);
        for (int v = lo; v <= hi; ++v) {
            cur.push_back(v);
            self(self, row + 1, rest - (v - lo));
            cur.pop_back();
        }
    };
    rec(rec, 1, k);
    return out;
}

/// All lambda containing mu with lambda/mu a vertical strip of size exactly k.
inline std::vector<Partition> vertical_strip_successors(const Partition& mu, int k) {
    std::vector<Partition> out;
    for (const Partition& cnu : horizontal_strip_successors(mu.conjugate(), k))
        out.push_back(cnu.conjugate());
    return out;
}

}  // namespace dschur
