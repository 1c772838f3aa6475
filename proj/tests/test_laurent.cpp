#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <dschur/laurent.hpp>

using namespace dschur;

namespace {

Poly a(int i) { return Poly::alpha(i); }

LaurentSeries random_laurent(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<int> val(-4, 2);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> aidx(-3, 3);
    const int v = val(rng);
    std::vector<Poly> cs;
    for (int k = v; k <= order; ++k) {
        Poly c = Poly::integer(coeff(rng));
        if (rng() % 2) c += a(aidx(rng)) * Poly::integer(coeff(rng));
        cs.push_back(c);
    }
    return LaurentSeries::from_coeffs(v, std::move(cs), order);
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    const int N = 8;
    auto zinv = LaurentSeries::monomial(Poly::integer(1), -1, N);
    auto z = LaurentSeries::monomial(Poly::integer(1), 1, N);
    CHECK((zinv * z).coefficient(0) == Poly::integer(1));
    CHECK((zinv * z).coefficient(3).is_zero());

    // (1 - a0 z) * sum_k a0^k z^k = 1 up to the truncation order
    auto unit = LaurentSeries::one(N) + LaurentSeries::monomial(-a(0), 1, N);
    std::vector<Poly> geo;
    for (int k = 0; k <= N; ++k) geo.push_back(a(0).pow(static_cast<unsigned>(k)));
    auto inv = LaurentSeries::from_coeffs(0, std::move(geo), N);
    auto prod = unit * inv;
    CHECK(prod.coefficient(0) == Poly::integer(1));
    for (int k = 1; k <= prod.order(); ++k) CHECK(prod.coefficient(k).is_zero());
}

TEST_CASE("random truncated products match a convolution oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const auto f = random_laurent(rng, 6);
        const auto g = random_laurent(rng, 6);
        const auto fg = f * g;
        for (int k = fg.valuation(); k <= fg.order(); ++k) {
            Poly expect;
            for (int i = f.valuation(); i <= f.order(); ++i) {
                const int j = k - i;
                if (j < g.valuation() || j > g.order()) continue;
                expect += f.coefficient(i) * g.coefficient(j);
            }
            CHECK(fg.coefficient(k) == expect);
        }
    }
}

TEST_CASE("invert_unit") {
    auto unit = LaurentSeries::one(3) + LaurentSeries::monomial(-a(0), 1, 3);
    auto inv = invert_unit(unit, 3);
    CHECK(inv.coefficient(0) == Poly::integer(1));
    CHECK(inv.coefficient(1) == a(0));
    CHECK(inv.coefficient(2) == a(0).pow(2));
    CHECK(inv.coefficient(3) == a(0).pow(3));

    // invert(z^-1 - a0) = z + a0 z^2 + a0^2 z^3 + ...
    auto f = LaurentSeries::monomial(Poly::integer(1), -1, 5) +
             LaurentSeries::monomial(-a(0), 0, 5);
    auto g = invert_unit(f, 5);
    CHECK(g.valuation() == 1);
    for (int k = 1; k <= 5; ++k) CHECK(g.coefficient(k) == a(0).pow(static_cast<unsigned>(k - 1)));

    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 15; ++trial) {
        auto h = random_laurent(rng, 6);
        if (h.is_zero()) continue;
        // force a unit leading coefficient
        h = h + LaurentSeries::monomial(Poly::integer(1) - h.coefficient(h.valuation()),
                                        h.valuation(), 6);
        const auto hi = invert_unit(h, 6);
        const auto prod = h * hi;
        CHECK(prod.coefficient(0) == Poly::integer(1));
        for (int k = 1; k <= prod.order(); ++k) CHECK(prod.coefficient(k).is_zero());
    }

    auto bad = LaurentSeries::monomial(a(1), 0, 4) + LaurentSeries::monomial(a(0), 1, 4);
    CHECK_THROWS_AS(invert_unit(bad, 4), std::invalid_argument);
    CHECK_THROWS_AS(invert_unit(LaurentSeries::monomial(Poly::integer(2), 0, 4), 4),
                    std::invalid_argument);
}

TEST_CASE("shifted powers") {
    // (z^-1|a)^2 = z^-2 - (a1+a2) z^-1 + a1 a2
    auto sp2 = shifted_power(2, 0, 4);
    CHECK(sp2.valuation() == -2);
    CHECK(sp2.coefficient(-2) == Poly::integer(1));
    CHECK(sp2.coefficient(-1) == -(a(1) + a(2)));
    CHECK(sp2.coefficient(0) == a(1) * a(2));
    CHECK(sp2.coefficient(1).is_zero());

    // (z^-1|a)^{-m} = sum_{k>=m} h_{k-m}(a_[1-m,0]) z^k
    for (int m = 1; m <= 4; ++m) {
        const int N = 10;
        auto spm = shifted_power(-m, 0, N);
        CHECK(spm.valuation() == m);
        for (int k = m; k <= N; ++k)
            CHECK(spm.coefficient(k) == homog_sym(alpha_closed(1 - m, 0), k - m));
    }

    // 1/(z^-1|a)^k = (z^-1|s^k a)^{-k}
    for (int k = 1; k <= 4; ++k) {
        auto prod = shifted_power(k, 0, 8) * shifted_power(-k, k, 8);
        CHECK(prod.coefficient(0) == Poly::integer(1));
        for (int j = 1; j <= prod.order(); ++j) CHECK(prod.coefficient(j).is_zero());
    }
}

TEST_CASE("to_shifted_basis") {
    // z^{-m} = sum_{k=0..m} h_{m-k}(a_[1,k+1]) (z^-1|a)^k
    for (int m = 0; m <= 5; ++m) {
        auto f = LaurentSeries::monomial(Poly::integer(1), -m, 6);
        auto coeffs = to_shifted_basis(f, 0, 0);
        for (int k = 0; k <= m; ++k) {
            const Poly expect = homog_sym(alpha_closed(1, k + 1), m - k);
            const auto it = coeffs.find(k);
            if (expect.is_zero())
                CHECK(it == coeffs.end());
            else {
                REQUIRE(it != coeffs.end());
                CHECK(it->second == expect);
            }
        }
        for (const auto& [k, c] : coeffs) CHECK((k >= 0 && k <= m));
    }

    // z^{m} = sum_{k>=m} e_{k-m}(-a_(1-k,1)) (z^-1|a)^{-k}
    const int N = 7;
    for (int m = 1; m <= 4; ++m) {
        auto f = LaurentSeries::monomial(Poly::integer(1), m, N);
        auto coeffs = to_shifted_basis(f, 0, -N);
        for (int k = m; k <= N; ++k) {
            const Poly expect = elem_sym(alpha_open(1 - k, 1, -1), k - m);
            const auto it = coeffs.find(-k);
            if (expect.is_zero())
                CHECK(it == coeffs.end());
            else {
                REQUIRE(it != coeffs.end());
                CHECK(it->second == expect);
            }
        }
    }

    // round trip on random Laurent polynomials
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 15; ++trial) {
        auto f = random_laurent(rng, 5);
        auto coeffs = to_shifted_basis(f, 1, -7);
        LaurentSeries sum = LaurentSeries::zero(f.order());
        for (const auto& [k, c] : coeffs) sum = sum + shifted_power(k, 1, f.order()) * c;
        CHECK(sum.truncated(f.order()) == f);
    }
}

TEST_CASE("residue and orthonormality") {
    CHECK(residue(LaurentSeries::monomial(Poly::integer(1), -1, 2)) == Poly::integer(1));
    CHECK_THROWS_AS(residue(LaurentSeries::monomial(Poly::integer(1), -3, -2)),
                    std::invalid_argument);

    // integral (z^-1 | s^k a)^{n-k-1} dz/(2 pi i z^2) = delta_{nk}
    for (int n = -4; n <= 4; ++n)
        for (int k = -4; k <= 4; ++k) {
            auto f = shifted_power(n - k - 1, k, 3).shifted(-2);
            CHECK(residue(f) == (n == k ? Poly::integer(1) : Poly::zero()));
        }

    // degree -2 Laurent polynomials have no residue
    std::mt19937_64 rng(1618);
    std::uniform_int_distribution<int> idx(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = static_cast<int>(rng() % 6);
        const int M = k + 2;
        LaurentSeries f = LaurentSeries::one(M);
        for (int t = 0; t < k; ++t) {
            f = f * (LaurentSeries::monomial(Poly::integer(1), -1, M) +
                     LaurentSeries::monomial(-a(idx(rng)), 0, M));
        }
        CHECK(residue(f.shifted(-2)).is_zero());
    }

    // orthonormality_gen2: k > k' >= 0 index tuples
    std::uniform_int_distribution<int> len(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = len(rng);
        std::uniform_int_distribution<int> lenp(0, k - 1);
        const int kp = lenp(rng);
        const int N = 3;
        LaurentSeries f = LaurentSeries::one(N);
        for (int t = 0; t < kp; ++t)
            f = (f * (LaurentSeries::monomial(Poly::integer(1), -1, N) +
                      LaurentSeries::monomial(-a(idx(rng)), 0, N)))
                    .truncated(N);
        for (int t = 0; t < k; ++t) {
            auto den = LaurentSeries::monomial(Poly::integer(1), -1, N) +
                       LaurentSeries::monomial(-a(idx(rng)), 0, N);
            f = (f * invert_unit(den, N)).truncated(N);
        }
        CHECK(residue(f.shifted(-2)) == (k == kp + 1 ? Poly::integer(1) : Poly::zero()));
    }
}

TEST_CASE("multiplication relations for shifted powers") {
    const int N = 6;
    for (int k = -4; k <= 4; ++k) {
        // z^-1 (z^-1|a)^k = (z^-1|a)^{k+1} + a_{k+1} (z^-1|a)^k
        auto lhs = shifted_power(k, 0, N).shifted(-1);
        auto rhs = shifted_power(k + 1, 0, N) + shifted_power(k, 0, N) * a(k + 1);
        CHECK(lhs.truncated(rhs.order()) == rhs.truncated(lhs.order()));

        // z (z^-1|a)^k = sum_m (-1)^m a_k ... a_{k-m+1} (z^-1|a)^{k-m-1}
        auto lhs2 = shifted_power(k, 0, N).shifted(1);
        LaurentSeries rhs2 = LaurentSeries::zero(N);
        Poly prefix = Poly::integer(1);
        for (int m = 0; k - m - 1 >= -N - 5; ++m) {
            rhs2 = rhs2 + shifted_power(k - m - 1, 0, N) * prefix;
            prefix = prefix * (-a(k - m));
        }
        CHECK(lhs2.truncated(N - 1) == rhs2.truncated(N - 1));
    }
}

TEST_CASE("shift action on shifted powers") {
    const int N = 8;
    for (int k = -5; k <= 5; ++k) {
        // (z^-1 | s^-1 a)^k = (z^-1|a)^k + (a_k - a_0)(z^-1|a)^{k-1}
        auto lhs = shifted_power(k, -1, N);
        auto rhs = shifted_power(k, 0, N) + shifted_power(k - 1, 0, N) * (a(k) - a(0));
        CHECK(lhs.truncated(rhs.order()) == rhs.truncated(lhs.order()));

        // 1/(z^-1 | s a)^k = 1/(z^-1|a)^k + (a_{k+1} - a_1)/(z^-1|a)^{k+1}
        auto inv_l = shifted_power(-k, k + 1, N);  // 1/(z^-1|sa)^k
        auto inv_r = shifted_power(-k, k, N) + shifted_power(-k - 1, k + 1, N) * (a(k + 1) - a(1));
        CHECK(inv_l.truncated(N - 1) == inv_r.truncated(N - 1));
    }
}

TEST_CASE("product change-of-basis identity") {
    // both displayed sums equal delta_{j0} for 0 <= j <= m <= 6
    for (int m = 0; m <= 6; ++m)
        for (int j = 0; j <= m; ++j) {
            Poly s1, s2;
            for (int k = 0; k <= j; ++k) {
                s1 += homog_sym(alpha_closed(1, m - k + 1), k) *
                      elem_sym(alpha_open(0, m - k + 1, -1), j - k);
                s2 += elem_sym(alpha_open(0, m + 1, -1), k) *
                      homog_sym(alpha_closed(1, m - j + 1), j - k);
            }
            const Poly expect = j == 0 ? Poly::integer(1) : Poly::zero();
            CHECK(s1 == expect);
            CHECK(s2 == expect);
        }
}

TEST_CASE("cocycle case identity") {
    // sum over 1<=j<=l, j-l <= i <= min(0, j-k) of
    //   h_{i-j+l}(a_[i,j]) e_{j-i-k}(-a_(i,j)) = k delta_{kl}
    for (int k = 1; k <= 6; ++k)
        for (int l = k; l <= 6; ++l) {
            Poly s;
            for (int j = 1; j <= l; ++j)
                for (int i = j - l; i <= std::min(0, j - k); ++i)
                    s += homog_sym(alpha_closed(i, j), i - j + l) *
                         elem_sym(alpha_open(i, j, -1), j - i - k);
            CHECK(s == (k == l ? Poly::integer(k) : Poly::zero()));
        }
}

TEST_CASE("he identity") {
    // sum_{t=i..j} h_{t-i}(a_[t-k,i]) e_{j-t}(-a_(t-k,j)) = delta_{ij}
    for (int i = -4; i <= 4; ++i)
        for (int j = i; j <= 4; ++j)
            for (int k = -2; k <= 6; ++k) {
                Poly s;
                for (int t = i; t <= j; ++t)
                    s += homog_sym(alpha_closed(t - k, i), t - i) *
                         elem_sym(alpha_open(t - k, j, -1), j - t);
                CHECK(s == (i == j ? Poly::integer(1) : Poly::zero()));
            }
}
