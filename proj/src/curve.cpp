#include "ttower/curve.hpp"

#include <stdexcept>

namespace ttower {

Curve make_curve(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4, const Rat& a6,
                 const std::string& label) {
    Curve E;
    E.a1 = a1; E.a2 = a2; E.a3 = a3; E.a4 = a4; E.a6 = a6;
    E.label = label;
    E.b2 = a1 * a1 + 4 * a2;
    E.b4 = 2 * a4 + a1 * a3;
    E.b6 = a3 * a3 + 4 * a6;
    E.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    E.c4 = E.b2 * E.b2 - 24 * E.b4;
    E.c6 = -E.b2 * E.b2 * E.b2 + 36 * E.b2 * E.b4 - 216 * E.b6;
    E.disc = -E.b2 * E.b2 * E.b8 - 8 * E.b4 * E.b4 * E.b4 - 27 * E.b6 * E.b6 + 9 * E.b2 * E.b4 * E.b6;
    for (auto* r : {&E.b2, &E.b4, &E.b6, &E.b8, &E.c4, &E.c6, &E.disc}) r->canonicalize();
    if (E.disc == 0) throw std::invalid_argument("make_curve: singular curve (disc = 0)");
    E.j = E.c4 * E.c4 * E.c4 / E.disc;
    E.j.canonicalize();
    return E;
}

Curve make_short_curve(const Rat& A, const Rat& B, const std::string& label) {
    return make_curve(Rat(0), Rat(0), Rat(0), A, B, label);
}

Curve curve_from_j(const Rat& j) {
    if (j == 0) return make_short_curve(Rat(0), Rat(1));
    if (j == 1728) return make_short_curve(Rat(1), Rat(0));
    Rat t = Rat(1728) - j;
    Curve E = make_short_curve(3 * j * t, 2 * j * t * t);
    if (E.j != j) throw std::logic_error("curve_from_j: j mismatch");
    return E;
}

Curve quadratic_twist(const Curve& E, const Int& d) {
    if (d == 0) throw std::invalid_argument("quadratic_twist: d nonzero required");
    // complete the square: y^2 = x^3 + (b2/4) x^2 + (b4/2) x + b6/4, then twist
    Rat A2 = E.b2 / 4, A4 = E.b4 / 2, A6 = E.b6 / 4;
    Rat d1(d);
    Curve T = make_curve(Rat(0), A2 * d1, Rat(0), A4 * d1 * d1, A6 * d1 * d1 * d1);
    if (T.j != E.j) throw std::logic_error("quadratic_twist: j not preserved");
    return T;
}

ShortModel short_model(const Curve& E) {
    // y1^2 = x1^3 - (c4/48) x1 + (-c6/864) with x1 = x + b2/12; scale x1 by u^2
    Rat A1 = -E.c4 / 48, B1 = -E.c6 / 864;
    A1.canonicalize();
    B1.canonicalize();
    Int u(6);
    mpz_lcm(u.get_mpz_t(), u.get_mpz_t(), A1.get_den().get_mpz_t());
    mpz_lcm(u.get_mpz_t(), u.get_mpz_t(), B1.get_den().get_mpz_t());
    Rat A = A1 * Rat(pow_int(u, 4)), B = B1 * Rat(pow_int(u, 6));
    A.canonicalize();
    B.canonicalize();
    ShortModel M;
    M.A = A.get_num();
    M.B = B.get_num();
    M.sx = Rat(u * u);
    M.tx = Rat(u * u) * E.b2 / 12;
    M.tx.canonicalize();
    M.disc = -16 * (4 * M.A * M.A * M.A + 27 * M.B * M.B);
    if (M.disc == 0) throw std::logic_error("short_model: singular");
    return M;
}

bool good_reduction_short(const ShortModel& M, std::uint64_t q) {
    if (q < 5) return false;
    return int_mod(M.disc, q) != 0;
}

} // namespace ttower
