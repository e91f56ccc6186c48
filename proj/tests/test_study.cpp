#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "qatlas/study.hpp"

using namespace qatlas::study;

namespace {

long long binomial(int n, int k) {
    long long b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

}  // namespace

TEST_CASE("the quadric form equals C(weight,2) mod 2 on all words") {
    for (unsigned x = 0; x < 256; ++x) {
        const int w = std::popcount(x);
        CHECK(quadric_form(x) == ((w * (w - 1) / 2) % 2));
    }
}

TEST_CASE("point census: 135 on the quadric, 120 off, by weight") {
    CHECK(quadric_points().size() == 135);
    CHECK(off_quadric_points().size() == 120);

    std::map<int, int> weight_counts;
    for (StudyPoint p : quadric_points()) weight_counts[std::popcount(p.code())]++;
    CHECK(weight_counts == std::map<int, int>{{1, 8}, {4, 70}, {5, 56}, {8, 1}});
    for (const auto& [w, count] : weight_counts) CHECK(count == binomial(8, w));
}

TEST_CASE("polar form: symmetry, biadditivity, first chord") {
    CHECK(polar(StudyPoint(1), StudyPoint(2)) == 1);  // P1+P2 has weight 2, off the quadric
    for (unsigned p = 1; p < 256; ++p)
        for (unsigned q = p + 1; q < 256; ++q)
            CHECK(polar(StudyPoint(p), StudyPoint(q)) == polar(StudyPoint(q), StudyPoint(p)));

    std::mt19937 rng(650321);
    std::uniform_int_distribution<unsigned> word(0, 255);
    for (int i = 0; i < 1000; ++i) {
        const unsigned a = word(rng), b = word(rng), c = word(rng);
        CHECK(polar_form(a ^ b, c) == (polar_form(a, c) ^ polar_form(b, c)));
        CHECK(polar_form(c, a ^ b) == (polar_form(c, a) ^ polar_form(c, b)));
    }
    CHECK_THROWS_AS(polar(StudyPoint(5), StudyPoint(5)), std::domain_error);
}

TEST_CASE("line classification through every off-quadric point is (28, 63, 36)") {
    for (StudyPoint p : off_quadric_points()) {
        const LineClassCounts counts = classify_lines_through(p);
        CHECK(counts.n0 == 28);
        CHECK(counts.n1 == 63);
        CHECK(counts.n2 == 36);
        CHECK(counts.n0 + counts.n1 + counts.n2 == 127);
    }
    CHECK_THROWS_AS(classify_lines_through(StudyPoint(1)), std::domain_error);
}

TEST_CASE("on the quadric, non-conjugacy equals chord-off-quadric") {
    const auto on = quadric_points();
    for (StudyPoint p : on)
        for (StudyPoint q : on) {
            if (p == q) continue;
            CHECK(quadric_form(p.code() ^ q.code()) == polar(p, q));
        }
}

TEST_CASE("the non-conjugacy graph on the quadric is 64-regular") {
    const auto on = quadric_points();
    for (StudyPoint p : on) {
        int degree = 0;
        for (StudyPoint q : on) degree += (p != q) && polar(p, q) == 1;
        CHECK(degree == 64);  // 135 = 1 + 70 conjugate + 64 non-conjugate
    }
}

TEST_CASE("enneads: 960 maximal cliques containing the standard one") {
    const auto all = enneads();
    REQUIRE(all.size() == 960);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::find(all.begin(), all.end(), standard_ennead()) != all.end());
    for (const Ennead& e : all) {
        CHECK(is_maximal_clique(e));
        for (int i = 0; i < 9; ++i)
            for (int j = i + 1; j < 9; ++j) {
                CHECK(quadric_value(e.points[i]) == 0);
                CHECK(polar(e.points[i], e.points[j]) == 1);
            }
    }
}

TEST_CASE("every chord of the standard ennead leaves the quadric") {
    const Ennead e = standard_ennead();
    int chords = 0;
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j) {
            const unsigned third = e.points[i].code() ^ e.points[j].code();
            CHECK(quadric_form(third) == 1);
            ++chords;
        }
    CHECK(chords == 36);
}

TEST_CASE("the coordinate group has order 9! and preserves the quadric") {
    const LinearGroup8 group = s9_linear_group();
    CHECK(group.order() == 362'880);
    CHECK(group.all_elements_preserve_quadric());
    CHECK(induced_point_permutation_count(group) == 362'880);  // faithful, full S9
}

TEST_CASE("the coordinate group maps enneads to enneads") {
    const auto all = enneads();
    std::set<std::array<unsigned, 9>> known;
    for (const Ennead& e : all) {
        std::array<unsigned, 9> codes;
        for (int i = 0; i < 9; ++i) codes[i] = e.points[i].code();
        known.insert(codes);
    }
    const LinearGroup8 group = s9_linear_group();
    std::mt19937_64 rng(90125);
    std::uniform_int_distribution<std::size_t> pick(0, group.elements().size() - 1);
    const Ennead base = standard_ennead();
    for (int i = 0; i < 100; ++i) {
        const LinearMap8& m = group.elements()[pick(rng)];
        std::array<unsigned, 9> image;
        for (int j = 0; j < 9; ++j) image[j] = m.apply(base.points[j].code());
        std::sort(image.begin(), image.end());
        CHECK(known.count(image));
    }
}

TEST_CASE("the projective semilinear group of the 9-point line") {
    const ProjectiveSemilinearGroup g = pgammal_2_8();
    CHECK(g.order() == 1512);
    CHECK(362'880 % g.order() == 0);
    CHECK(960ull * g.order() == 1'451'520ull);
    CHECK(g.transitivity_degree() == 3);  // sharply 3-transitive subgroup, order < 9*8*7*6

    // Closure under composition: the permutation set is a group.
    std::set<std::array<std::uint8_t, 9>> set(g.perms.begin(), g.perms.end());
    std::mt19937 rng(1512);
    std::uniform_int_distribution<std::size_t> pick(0, g.perms.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const auto& a = g.perms[pick(rng)];
        const auto& b = g.perms[pick(rng)];
        std::array<std::uint8_t, 9> c;
        for (int j = 0; j < 9; ++j) c[j] = a[b[j]];
        CHECK(set.count(c));
    }
}

TEST_CASE("study point validation") {
    CHECK_THROWS_AS(StudyPoint(0), std::invalid_argument);
    CHECK_THROWS_AS(StudyPoint(256), std::invalid_argument);
}
