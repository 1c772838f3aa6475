// A tour of the library on small worked examples: double complete and
// elementary functions, a skew double Schur function computed three ways,
// the current-operator action on a Fock ket, and a Pieri expansion.

#include <iostream>

#include <dschur/expand.hpp>
#include <dschur/io.hpp>

using namespace dschur;

int main() {
    const SuperContext one{1};

    std::cout << "h_2(x1/y1||a) = " << render(double_h(2, one, 0), RenderStyle::plain) << "\n";
    std::cout << "e_2(x1/y1||a) = " << render(double_e(2, one, 0), RenderStyle::plain) << "\n\n";

    const SkewShape shape(Partition{2, 2}, Partition{1});
    const Poly by_h = schur_double_jt(shape, one, SymKind::h, 2);
    const Poly by_e = schur_double_jt(shape, one, SymKind::e, 2);
    const Poly by_tableaux = schur_double_tableaux(shape, one);
    std::cout << "s_{22/1}(x1/y1||a) via h-determinant:  " << render(by_h, RenderStyle::plain)
              << "\n";
    std::cout << "  e-determinant agrees: " << (by_h == by_e ? "yes" : "NO") << "\n";
    std::cout << "  tableau formula agrees: " << (by_h == by_tableaux ? "yes" : "NO") << "\n";
    // the same polynomial in factored form: (x+y)(x-a0)(y+a1)
    const Poly factored =
        (Poly::x(1) + Poly::y(1)) * (Poly::x(1) - Poly::alpha(0)) * (Poly::y(1) + Poly::alpha(1));
    std::cout << "  equals (x+y)(x-a0)(y+a1): " << (by_h == factored ? "yes" : "NO") << "\n\n";

    // a Laurent series and its shifted-power basis expansion
    const auto zm3 = LaurentSeries::monomial(Poly::integer(1), -3, 6);
    std::cout << "z^-3 = " << render(zm3, RenderStyle::plain) << "\n";
    std::cout << "     = " << render_shifted_basis(zm3, 0, 0, RenderStyle::plain) << "\n\n";

    std::cout << "J_{-2} |0> =\n"
              << render(apply_current(-2, fock_ket(Partition{})), RenderStyle::plain) << "\n\n";

    std::cout << "p_3 * s_(8,3,1) =\n"
              << render(mn_multiply(Partition{8, 3, 1}, 3), RenderStyle::plain) << "\n\n";

    std::cout << "h_2 * s_(5,2,2) =\n"
              << render(pieri_expansion(Partition{5, 2, 2}, 2, SymKind::h, 3), RenderStyle::plain)
              << "\n";
    return 0;
}
