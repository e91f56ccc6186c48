#include <doctest.h>

#include <random>
#include <set>

#include "qatlas/f2core.hpp"

using namespace qatlas::f2core;

namespace {

// Gaussian binomial [n choose k]_2, the number of k-subspaces of F2^n.
long long gaussian_binomial(int n, int k) {
    long long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (1LL << (n - i)) - 1;
        den *= (1LL << (k - i)) - 1;
    }
    return num / den;
}

// Totally isotropic k-subspaces of a 2n-dimensional symplectic space over
// F2: [n choose k]_2 * prod_{i=0}^{k-1} (2^{n-i} + 1).
long long isotropic_count(int n, int k) {
    long long count = gaussian_binomial(n, k);
    for (int i = 0; i < k; ++i) count *= (1LL << (n - i)) + 1;
    return count;
}

}  // namespace

TEST_CASE("pairing on the hyperbolic basis") {
    CHECK(pairing(basis_vector(1), basis_vector(4)) == 1);
    CHECK(pairing(basis_vector(2), basis_vector(5)) == 1);
    CHECK(pairing(basis_vector(3), basis_vector(6)) == 1);
    CHECK(pairing(basis_vector(1), basis_vector(2)) == 0);
    CHECK(pairing(basis_vector(1), basis_vector(5)) == 0);
}

TEST_CASE("pairing is alternating, symmetric, bilinear and nondegenerate") {
    for (unsigned a = 0; a < 64; ++a) {
        CHECK(pairing(Vec(a), Vec(a)) == 0);
        bool hits_one = false;
        for (unsigned b = 0; b < 64; ++b) {
            CHECK(pairing(Vec(a), Vec(b)) == pairing(Vec(b), Vec(a)));
            hits_one = hits_one || pairing(Vec(a), Vec(b)) == 1;
        }
        if (a != 0) CHECK(hits_one);  // nondegeneracy
    }
    for (unsigned a = 0; a < 64; ++a)
        for (unsigned b = 0; b < 64; ++b)
            for (unsigned c = 0; c < 64; ++c)
                CHECK(pairing(Vec(a) + Vec(b), Vec(c)) ==
                      (pairing(Vec(a), Vec(c)) ^ pairing(Vec(b), Vec(c))));
}

TEST_CASE("arf parity census") {
    CHECK(arf(Theta(Vec(0))) == 0);
    int odd = 0, even = 0;
    for (unsigned w = 0; w < 64; ++w) (arf(Theta(Vec(w))) ? odd : even)++;
    CHECK(odd == 28);
    CHECK(even == 36);
}

TEST_CASE("theta_eval agrees with the translation formula") {
    for (unsigned w = 0; w < 64; ++w) {
        Theta t{Vec(w)};
        CHECK(theta_eval(t, Vec(0)) == 0);
        for (unsigned v = 0; v < 64; ++v) {
            int by_translation = arf(theta_translate(t, Vec(v))) ^ arf(t);
            CHECK(theta_eval(t, Vec(v)) == by_translation);
        }
    }
}

TEST_CASE("every odd theta vanishes on exactly 27 nonzero vectors") {
    for (unsigned w = 0; w < 64; ++w) {
        Theta t{Vec(w)};
        if (!is_odd(t)) continue;
        int zeros = 0;
        for (unsigned v = 1; v < 64; ++v) zeros += theta_eval(t, Vec(v)) == 0;
        CHECK(zeros == 27);
    }
}

TEST_CASE("polarization identity holds exhaustively") {
    for (unsigned w = 0; w < 64; ++w) {
        Theta t{Vec(w)};
        for (unsigned u = 0; u < 64; ++u)
            for (unsigned v = 0; v < 64; ++v)
                CHECK((theta_eval(t, Vec(u) + Vec(v)) ^ theta_eval(t, Vec(u)) ^
                       theta_eval(t, Vec(v))) == pairing(Vec(u), Vec(v)));
    }
}

TEST_CASE("arf translation law") {
    for (unsigned w = 0; w < 64; ++w)
        for (unsigned v = 0; v < 64; ++v) {
            Theta t{Vec(w)};
            CHECK(arf(theta_translate(t, Vec(v))) == (arf(t) ^ theta_eval(t, Vec(v))));
        }
}

TEST_CASE("theta translation is an involution with a single 64-element orbit") {
    CHECK(theta_translate(Theta(Vec(0)), Vec(0)) == Theta(Vec(0)));
    for (unsigned w = 0; w < 64; ++w)
        for (unsigned v = 0; v < 64; ++v)
            CHECK(theta_translate(theta_translate(Theta(Vec(w)), Vec(v)), Vec(v)) ==
                  Theta(Vec(w)));
    std::set<unsigned> orbit;
    for (unsigned v = 0; v < 64; ++v) orbit.insert(theta_translate(Theta(Vec(0)), Vec(v)).code());
    CHECK(orbit.size() == 64);
}

TEST_CASE("theta_sum3 is the pointwise sum of the three forms") {
    CHECK(theta_sum3(Theta(Vec(5)), Theta(Vec(5)), Theta(Vec(5))) == Theta(Vec(5)));
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<unsigned> dist(0, 63);
    for (int trial = 0; trial < 100; ++trial) {
        Theta a{Vec(dist(rng))}, b{Vec(dist(rng))}, c{Vec(dist(rng))};
        Theta s = theta_sum3(a, b, c);
        for (unsigned v = 0; v < 64; ++v)
            CHECK(theta_eval(s, Vec(v)) ==
                  (theta_eval(a, Vec(v)) ^ theta_eval(b, Vec(v)) ^ theta_eval(c, Vec(v))));
    }
}

TEST_CASE("subspace counts match the Gaussian binomial oracle") {
    CHECK(gaussian_binomial(6, 1) == 63);
    CHECK(gaussian_binomial(6, 2) == 651);
    CHECK(gaussian_binomial(6, 3) == 1395);
    for (int k = 0; k <= 6; ++k) {
        const auto all = subspaces(k);
        CHECK(static_cast<long long>(all.size()) == gaussian_binomial(6, k));
        std::set<std::uint64_t> keys;
        for (const auto& s : all) {
            CHECK(s.dim() == k);
            keys.insert(s.key());
        }
        CHECK(keys.size() == all.size());  // duplicate-free
    }
}

TEST_CASE("isotropic subspace counts match the product-formula oracle") {
    CHECK(isotropic_count(3, 1) == 63);
    CHECK(isotropic_count(3, 2) == 315);
    CHECK(isotropic_count(3, 3) == 135);
    for (int k = 1; k <= 3; ++k) {
        const auto iso = subspaces(k, true);
        CHECK(static_cast<long long>(iso.size()) == isotropic_count(3, k));
        for (const auto& s : iso) CHECK(s.is_isotropic());
    }
    CHECK(subspaces(4, true).empty());  // beyond the maximal isotropic dimension
}

TEST_CASE("subspace span is canonical and order-independent") {
    Vec a(0b100001), b(0b000110);
    Subspace s1 = Subspace::span({a, b});
    Subspace s2 = Subspace::span({b, a + b, a});
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    CHECK(s1.contains(a + b));
    CHECK(!s1.contains(Vec(1)));
    CHECK(s1.elements().size() == 4);
    CHECK(s1.nonzero_elements().size() == 3);
}

TEST_CASE("degenerate and invalid dimensions") {
    const auto zero = subspaces(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].dim() == 0);
    CHECK(zero[0].contains(Vec(0)));
    CHECK_THROWS_AS(subspaces(7), std::domain_error);
    CHECK_THROWS_AS(subspaces(-1), std::domain_error);
    CHECK_THROWS_AS(Vec(64), std::invalid_argument);
}
