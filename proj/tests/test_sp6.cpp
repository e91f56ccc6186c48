#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qatlas/sp6.hpp"

using namespace qatlas::sp6;
using qatlas::f2core::basis_vector;
using qatlas::f2core::pairing;
using qatlas::f2core::theta_eval;
using qatlas::structures::steiner_complex;

namespace {

const Group& closed_group() {
    static const Group group = group_closure();
    return group;
}

}  // namespace

TEST_CASE("transvections on the basis") {
    const SymplecticMap t = transvection(basis_vector(1));
    CHECK(t.apply(basis_vector(1)) == basis_vector(1));              // pairing(e1,e1)=0
    CHECK(t.apply(basis_vector(4)) == basis_vector(4) + basis_vector(1));
    CHECK_THROWS_AS(transvection(Vec(0)), std::domain_error);
}

TEST_CASE("all 63 transvections are pairing-preserving involutions") {
    for (const SymplecticMap& t : transvection_generators()) {
        CHECK((t * t).is_identity());
        for (unsigned u = 0; u < 64; ++u)
            for (unsigned v = 0; v < 64; ++v)
                CHECK(pairing(t.apply(Vec(u)), t.apply(Vec(v))) == pairing(Vec(u), Vec(v)));
    }
}

TEST_CASE("group closure has order 1451520 = 2^9 3^4 5 7") {
    const Group& group = closed_group();
    CHECK(group.order() == 1'451'520);
    std::uint64_t n = group.order();
    int two = 0, three = 0;
    while (n % 2 == 0) { n /= 2; ++two; }
    while (n % 3 == 0) { n /= 3; ++three; }
    CHECK(two == 9);
    CHECK(three == 4);
    CHECK(n == 35);  // 5 * 7

    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::size_t> pick(0, group.elements().size() - 1);
    for (int i = 0; i < 1000; ++i) CHECK(group.elements()[pick(rng)].preserves_pairing());
}

TEST_CASE("closure budget produces a resource error") {
    CHECK_THROWS_AS(group_closure(1000), ResourceError);
}

TEST_CASE("the theta action transports evaluation") {
    for (const SymplecticMap& g : transvection_generators())
        for (unsigned w = 0; w < 64; ++w) {
            const Theta image = act(g, Theta(Vec(w)));
            for (unsigned v = 0; v < 64; ++v)
                CHECK(theta_eval(image, g.apply(Vec(v))) == theta_eval(Theta(Vec(w)), Vec(v)));
        }

    // The same defining property for arbitrary group elements.
    const Group& group = closed_group();
    std::mt19937_64 rng(555001);
    std::uniform_int_distribution<std::size_t> pick(0, group.elements().size() - 1);
    for (int i = 0; i < 100; ++i) {
        const SymplecticMap g = group.elements()[pick(rng)];
        for (unsigned w = 0; w < 64; ++w) {
            const Theta image = act(g, Theta(Vec(w)));
            for (unsigned v = 0; v < 64; ++v)
                CHECK(theta_eval(image, g.apply(Vec(v))) == theta_eval(Theta(Vec(w)), Vec(v)));
        }
    }
}

TEST_CASE("actions are homomorphisms fixing parity") {
    const Group& group = closed_group();
    std::mt19937_64 rng(783151);
    std::uniform_int_distribution<std::size_t> pick(0, group.elements().size() - 1);
    std::uniform_int_distribution<unsigned> code(0, 63);

    const SymplecticMap id;
    CHECK(act(id, Theta(Vec(17))) == Theta(Vec(17)));
    CHECK(act(id, Vec(33)) == Vec(33));

    for (int i = 0; i < 200; ++i) {
        const SymplecticMap g = group.elements()[pick(rng)];
        const SymplecticMap h = group.elements()[pick(rng)];
        const Theta t{Vec(code(rng))};
        CHECK(act(g * h, t) == act(g, act(h, t)));
        CHECK(qatlas::f2core::arf(act(g, t)) == qatlas::f2core::arf(t));
        const Vec v{code(rng)};
        CHECK(act(g * h, v) == act(g, act(h, v)));
    }
}

TEST_CASE("the identity fixes every structure kind and images stay valid") {
    const SymplecticMap id;
    const SymplecticMap g = transvection_generators()[17];

    const auto tetrad = qatlas::structures::syzygetic_tetrads().front();
    CHECK(act(id, tetrad).members == tetrad.members);
    const auto tetrad_img = act(g, tetrad);
    CHECK(std::find_if(qatlas::structures::syzygetic_tetrads().begin(),
                       qatlas::structures::syzygetic_tetrads().end(),
                       [&](const auto& t) { return t.members == tetrad_img.members; }) !=
          qatlas::structures::syzygetic_tetrads().end());

    const auto heptad = qatlas::structures::aronhold_heptads().front();
    CHECK(act(id, heptad).members == heptad.members);
    const auto heptad_img = act(g, heptad);
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c)
                CHECK(qatlas::f2core::arf(qatlas::f2core::theta_sum3(
                          heptad_img.members[a], heptad_img.members[b], heptad_img.members[c])) ==
                      0);

    const auto gopel = qatlas::structures::gopel_subsets().front();
    CHECK(act(id, gopel).points == gopel.points);
    CHECK(act(g, gopel).subspace.is_isotropic());

    const auto azy = qatlas::structures::azygetic_triads().front();
    CHECK(act(id, azy).keys == azy.keys);
    CHECK(!act(g, azy).plane.is_isotropic());

    const auto plane = qatlas::f2core::subspaces(2, true).front();
    CHECK(act(id, plane) == plane);
    CHECK(act(g, plane).is_isotropic());
}

TEST_CASE("steiner complexes move with their keys") {
    for (const SymplecticMap& g : transvection_generators())
        for (unsigned v = 1; v < 64; ++v) {
            const auto moved = act(g, steiner_complex(Vec(v)));
            CHECK(moved.key == g.apply(Vec(v)));
            std::set<unsigned> images;
            for (auto t : steiner_complex(Vec(v)).members) images.insert(act(g, t).code());
            std::set<unsigned> members;
            for (auto t : moved.members) members.insert(t.code());
            CHECK(images == members);
        }
}

TEST_CASE("orbit and stabilizer orders reproduce the summary table") {
    const std::uint64_t order = closed_group().order();
    struct Row {
        ActionKind kind;
        std::uint64_t orbit, stabilizer;
    };
    const Row rows[] = {
        {ActionKind::vector, 63, 23040},
        {ActionKind::odd_theta, 28, 51840},
        {ActionKind::even_theta, 36, 40320},
        {ActionKind::steiner, 63, 23040},
        {ActionKind::gopel, 135, 10752},
        {ActionKind::isotropic_plane, 315, 4608},
        {ActionKind::nonisotropic_plane, 336, 4320},
        {ActionKind::tetrad, 315, 4608},
        {ActionKind::heptad, 288, 5040},
    };
    for (const Row& row : rows) {
        const OrbitReport report = orbit_and_stabilizer_order(row.kind, order);
        CHECK(report.orbit_size == row.orbit);
        CHECK(report.stabilizer_order == row.stabilizer);
        CHECK(report.transitive);
        CHECK(report.enumerated_count == row.orbit);
    }
}

TEST_CASE("pair ranks match the constituent counts") {
    CHECK(pair_rank(ActionKind::odd_theta) == 2);
    CHECK(pair_rank(ActionKind::even_theta) == 2);
    CHECK(pair_rank(ActionKind::vector) == 3);
    CHECK(pair_rank(ActionKind::steiner) == 3);
    CHECK(pair_rank(ActionKind::gopel) == 4);
    CHECK(pair_rank(ActionKind::heptad) == 5);
    CHECK(pair_rank(ActionKind::tetrad) == 5);
    CHECK(pair_rank(ActionKind::isotropic_plane) == 5);
    CHECK(pair_rank(ActionKind::nonisotropic_plane) == 5);
}
