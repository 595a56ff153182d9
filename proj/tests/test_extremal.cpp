#include <doctest.h>

#include "dshift/extremal.hpp"
#include "dshift/fock.hpp"
#include "dshift/numerics.hpp"
#include "dshift/shift.hpp"

using namespace dshift;

TEST_CASE("ratio_growth") {
    CHECK(ratio_growth(1, 3).value == doctest::Approx(1.0));
    CHECK(ratio_growth(1, 17).value == doctest::Approx(1.0));
    CHECK(ratio_growth(2, 1).value == doctest::Approx(std::sqrt(2.0)));

    auto r100 = ratio_growth(2, 100);
    CHECK(r100.value > 4.0);
    CHECK(r100.value < 4.5);
    CHECK(r100.asymptote == doctest::Approx(std::pow(M_PI, 0.25) * std::pow(100.0, 0.25)));

    auto r200 = ratio_growth(2, 200);
    CHECK(r200.value / r200.asymptote > 0.98);
    CHECK(r200.value / r200.asymptote < 1.02);
}

TEST_CASE("ratio_growth agrees with exact rational arithmetic at small n") {
    for (int d = 2; d <= 3; ++d) {
        for (int n = 1; n <= 6; ++n) {
            // ||p^n||^2 = (n!)^d/(nd)!, the norm of the profile (n,...,n)
            Rational nsq = monomial_norm_sq(MultiIndex(static_cast<size_t>(d), n));
            BigInt dpow = 1;
            for (int i = 0; i < n * d; ++i) dpow *= d;
            double exact = std::sqrt(static_cast<double>(Rational(dpow, 1) * nsq));
            CHECK(ratio_growth(d, n).value == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("extremal series construction") {
    auto s = ExtremalSeries::powers_of_four(2, 6);
    CHECK(s.support.front() == 4);
    CHECK(s.support.back() == 4096);
    double total = 0.0;
    for (double c : s.c) total += c;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS(ExtremalSeries::powers_of_four(1, 4));
}

TEST_CASE("build_extremal_fN: bounded sup norm, growing Hilbert norm") {
    auto s = ExtremalSeries::powers_of_four(2, 8);
    auto f64 = build_extremal_fN(s, 64);
    CHECK(f64.poly.degree() == 128);

    // ||f_N||_inf <= sum |c_n| = 1
    CHECK(sphere_sup(f64.poly, 512).value <= 1.0 + 1e-6);

    // closed-form norm is nondecreasing in N
    double prev = 0.0;
    for (long n : s.support) {
        double cur = build_extremal_fN(s, n).norm_sq;
        CHECK(cur >= prev);
        prev = cur;
    }

    // empty cutoff
    CHECK(build_extremal_fN(s, 0).norm_sq == 0.0);
}

TEST_CASE("Hilbert norm of f_N on the truncation matches the closed form") {
    auto s = ExtremalSeries::powers_of_four(2, 3);
    auto f = build_extremal_fN(s, 16);
    auto basis = build_basis(2, 2 * 16);
    Vector e0 = Vector::Zero(basis->size());
    e0[0] = 1.0;
    double on_trunc = apply_multiplication(f.poly, basis, e0).squaredNorm();
    CHECK(on_trunc == doctest::Approx(f.norm_sq).epsilon(1e-9));
}

TEST_CASE("multiplier lower bound") {
    auto basis = build_basis(2, 4);
    CHECK(multiplier_lower_bound(Poly::monomial(2, {1, 0}), basis) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(multiplier_lower_bound(Poly::constant(2, 1.0), basis) == doctest::Approx(1.0));

    // f = 2 z_1 z_2 has H^2 norm sqrt(2); the multiplier norm dominates it
    Poly f = Poly::monomial(2, {1, 1}, 2.0);
    CHECK(multiplier_lower_bound(f, basis) >= std::sqrt(2.0) - 1e-9);
}

TEST_CASE("energy of the shift: three routes agree") {
    auto r = energy_shift(2, 3);
    CHECK(r.closed_form == doctest::Approx(4.0));
    CHECK(r.direct == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(r.binomial_bound == doctest::Approx(4.0));

    auto r3 = energy_shift(3, 2);
    CHECK(r3.closed_form == doctest::Approx(6.0));
    CHECK(r3.direct == doctest::Approx(6.0).epsilon(1e-10));

    for (int n = 1; n <= 4; ++n) CHECK(energy_shift(1, n).direct == doctest::Approx(1.0));
}

TEST_CASE("energy lower bounds") {
    // commuting unitaries scaled by 1/sqrt(d): energy exactly 1
    MatrixTuple u;
    u.d = 2;
    Matrix u1 = Matrix::Zero(2, 2), u2 = Matrix::Zero(2, 2);
    u1(0, 0) = std::polar(1.0, 0.3);
    u1(1, 1) = std::polar(1.0, -0.8);
    u2(0, 0) = std::polar(1.0, 0.5);
    u2(1, 1) = std::polar(1.0, 0.5);
    u.ops = {u1 / std::sqrt(2.0), u2 / std::sqrt(2.0)};
    for (int n = 1; n <= 4; ++n)
        CHECK(energy_lower_bound(u, n) == doctest::Approx(1.0).epsilon(1e-12));

    // nilpotent single operator: energy hits zero at the block size
    MatrixTuple nil;
    nil.d = 1;
    Matrix j = Matrix::Zero(3, 3);
    j(0, 1) = 1.0;
    j(1, 2) = 1.0;
    nil.ops = {j};
    CHECK(energy_lower_bound(nil, 3) == doctest::Approx(0.0));
    CHECK(energy_lower_bound(nil, 5) == doctest::Approx(0.0));

    // the truncated shift itself matches the closed form below the boundary
    MatrixTuple shift2;
    shift2.d = 2;
    auto basis = build_basis(2, 8);
    shift2.ops = {shift_matrix(1, basis).mat, shift_matrix(2, basis).mat};
    for (int n = 1; n <= 5; ++n)
        CHECK(energy_lower_bound(shift2, n) ==
              doctest::Approx(static_cast<double>(dim_symmetric(2, n))).epsilon(1e-9));
}

TEST_CASE("sampled commuting tuples respect the binomial bound") {
    for (int d = 1; d <= 3; ++d) {
        for (unsigned seed = 0; seed < 6; ++seed) {
            auto t = make_commuting_tuple(d, 6, 1000 * static_cast<unsigned>(d) + seed, 1.0);
            // tuple really commutes and has the requested row norm
            Matrix row = Matrix::Zero(6, 6);
            for (const auto& op : t.ops) row += op * op.adjoint();
            CHECK(operator_norm(row).value == doctest::Approx(1.0).epsilon(1e-9));
            for (int n = 1; n <= 4; ++n)
                CHECK(energy_lower_bound(t, n) <=
                      static_cast<double>(dim_symmetric(d, n)) + 1e-9);
        }
    }
}
