#include <doctest.h>

#include <random>

#include "dshift/fock.hpp"

using namespace dshift;

TEST_CASE("monomial_norm_sq closed form") {
    CHECK(monomial_norm_sq({0, 0}) == 1);
    CHECK(monomial_norm_sq({1, 1}) == Rational(1, 2));
    CHECK(monomial_norm_sq({1, 1, 1}) == Rational(1, 6));
    CHECK(monomial_norm_sq({3, 0}) == 1);
    CHECK(monomial_norm_sq({2, 2}) == Rational(4, 24));
}

TEST_CASE("symmetrization oracle basics") {
    CHECK(sym_project_oracle(2, {1}) == 1);
    CHECK(sym_project_oracle(2, {1, 2}) == Rational(1, 2));
    CHECK(sym_project_oracle(3, {1, 2, 3}) == Rational(1, 6));
    CHECK_THROWS(sym_project_oracle(2, std::vector<int>(9, 1)));
    CHECK_THROWS(sym_project_oracle(2, {1, 3}));
}

TEST_CASE("oracle agrees with the closed form for all profiles") {
    for (int d = 1; d <= 3; ++d) {
        for (int n = 0; n <= 6; ++n) {
            for (const auto& k : enumerate_degree(d, n)) {
                std::vector<int> word;
                for (int j = 0; j < d; ++j)
                    for (int rep = 0; rep < k[static_cast<size_t>(j)]; ++rep)
                        word.push_back(j + 1);
                CHECK(sym_project_oracle(d, word) == monomial_norm_sq(k));
            }
        }
    }
}

TEST_CASE("creation adjoint on monomial tensors") {
    // A^* by e_1 on e_1^{k_1} e_2^{k_2} scales by k_1/|k|
    SymTensor t;
    t.d = 2;
    t.degree = 5;
    t.coefficients[{3, 2}] = 1.0;
    std::vector<Complex> e1{1.0, 0.0}, e2{0.0, 1.0};

    auto r = creation_adjoint_apply(e1, t);
    CHECK(r.degree == 4);
    CHECK(r.coefficients.at({2, 2}).real() == doctest::Approx(3.0 / 5.0));

    // orthogonal direction annihilates a pure power
    SymTensor pure;
    pure.d = 2;
    pure.degree = 4;
    pure.coefficients[{4, 0}] = 1.0;
    auto z = creation_adjoint_apply(e2, pure);
    CHECK(z.coefficients.empty());

    // e_1 e_2 -> (1/2) e_2
    SymTensor mix;
    mix.d = 2;
    mix.degree = 2;
    mix.coefficients[{1, 1}] = 1.0;
    auto h = creation_adjoint_apply(e1, mix);
    CHECK(h.coefficients.at({0, 1}).real() == doctest::Approx(0.5));

    CHECK_THROWS(creation_adjoint_apply(e1, SymTensor{2, 0, {{{0, 0}, 1.0}}}));
}

TEST_CASE("creation operator and its adjoint are actually adjoint") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int d = 3;
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 3;
        SymTensor s, t;
        s.d = t.d = d;
        s.degree = n - 1;
        t.degree = n;
        for (const auto& k : enumerate_degree(d, n - 1))
            s.coefficients[k] = Complex(u(rng), u(rng));
        for (const auto& k : enumerate_degree(d, n))
            t.coefficients[k] = Complex(u(rng), u(rng));
        std::vector<Complex> a{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                               Complex(u(rng), u(rng))};
        Complex lhs = SymTensor::inner(creation_apply(a, s), t);
        Complex rhs = SymTensor::inner(s, creation_adjoint_apply(a, t));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("norm induction identity") {
    for (int d = 2; d <= 3; ++d) {
        for (int n = 1; n <= 6; ++n) {
            for (const auto& k : enumerate_degree(d, n)) {
                if (k[0] == 0) continue;
                MultiIndex prev = k;
                prev[0] -= 1;
                CHECK(monomial_norm_sq(k) ==
                      Rational(k[0], total_degree(k)) * monomial_norm_sq(prev));
            }
        }
    }
}
