#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singlet/builder.hpp"
#include "singlet/cg.hpp"
#include "support.hpp"

using namespace singlet;
using test_support::make_amps;
using test_support::rs;

namespace {

HalfInt h(int twice) { return HalfInt(twice); }

BigInt catalan(int k) {
    return factorial(2 * k) / (factorial(k) * factorial(k + 1));
}

}  // namespace

TEST_CASE("count_states reproduces marquee table entries") {
    CHECK(count_states(h(0), 20, kSpinHalf) == BigInt(16796));
    CHECK(count_states(h(0), 18, kSpinOne) == BigInt(1730787));
    CHECK(count_states(h(10), 10, kSpinHalf) == BigInt(1));  // stretched
    CHECK(count_states(h(0), 3, kSpinHalf) == BigInt(0));    // parity-forbidden
    CHECK(count_states(h(2), 4, kSpinHalf) == BigInt(3));
    CHECK(count_states(h(2), 3, kSpinOne) == BigInt(3));
}

TEST_CASE("count_states Catalan cross-check") {
    for (int k = 1; k <= 10; ++k) {
        REQUIRE(count_states(h(0), 2 * k, kSpinHalf) == catalan(k));
    }
}

TEST_CASE("count_states completeness sums") {
    for (int n = 1; n <= 20; ++n) {
        BigInt total = 0;
        for (int tj = n % 2; tj <= n; tj += 2) {
            total += count_states(h(tj), n, kSpinHalf) * (tj + 1);
        }
        REQUIRE(total == boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n)));
    }
    for (int n = 1; n <= 18; ++n) {
        BigInt total = 0;
        for (int tj = 0; tj <= 2 * n; tj += 2) {
            total += count_states(h(tj), n, kSpinOne) * (tj + 1);
        }
        REQUIRE(total == boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(n)));
    }
}

TEST_CASE("single coupling steps") {
    BuildOptions opts;
    opts.prune_for_singlets = false;

    const std::vector<Layer> half_layers = build_layers(2, kSpinHalf, opts);
    const Layer& first = half_layers[0];

    SUBCASE("stretched raise gives |++> with amplitude 1") {
        const CoupledState s = couple_up(first, kSpinHalf, 1, kSpinHalf, h(2));
        CHECK(s.j == h(2));
        CHECK(s.amps == make_amps(kSpinHalf, {{"++", 1, 1, 1}}));
    }

    SUBCASE("lowering 1/2 -> 0 gives the Bell singlet") {
        const CoupledState s = couple_down(first, kSpinHalf, 1, kSpinHalf, h(0));
        CHECK(s.amps == make_amps(kSpinHalf, {{"+-", 1, 2, 2}, {"-+", -1, 2, 2}}));
    }

    SUBCASE("lowering below j = 0 is rejected") {
        const Layer& bell_layer = half_layers[1];
        CHECK_THROWS_AS(couple_down(bell_layer, h(0), 1, kSpinHalf, h(1)), std::domain_error);
    }

    const std::vector<Layer> one_layers = build_layers(2, kSpinOne, opts);
    const Layer& first_one = one_layers[0];

    SUBCASE("spin-1 raise to (h=2, j=2, m=0)") {
        const CoupledState s = couple_up(first_one, kSpinOne, 1, kSpinOne, h(0));
        // direct CG evaluation <1,m1,1,m2|2,0>: 1/sqrt(6), sqrt(2/3), 1/sqrt(6)
        CHECK(s.amps == make_amps(kSpinOne, {{"1,-1", 1, 6, 6}, {"0,0", 1, 3, 6}, {"-1,1", 1, 6, 6}}));
        for (const auto& [word, amp] : s.amps) {
            const RadicalSum direct = clebsch_gordan(h(2), word.letter(0), h(2), word.letter(1), h(4), h(0));
            REQUIRE(amp == direct);
        }
    }

    SUBCASE("spin-1 lowering gives the published two-particle singlet") {
        const CoupledState s = couple_down(first_one, kSpinOne, 1, kSpinOne, h(0));
        CHECK(s.amps ==
              make_amps(kSpinOne, {{"0,0", -1, 3, 3}, {"-1,1", 1, 3, 3}, {"1,-1", 1, 3, 3}}));
    }

    SUBCASE("spin-1 horizontal step at (h=2, j=1, m=1)") {
        const CoupledState s = couple_level(first_one, kSpinOne, 1, kSpinOne, h(2));
        CHECK(s.amps == make_amps(kSpinOne, {{"1,0", 1, 2, 2}, {"0,1", -1, 2, 2}}));
    }

    SUBCASE("horizontal step restrictions") {
        CHECK_THROWS_AS(couple_level(first, kSpinHalf, 1, kSpinHalf, h(1)), std::domain_error);
        const Layer& two = one_layers[1];
        (void)two;
        // j_prev = 0 has no horizontal continuation
        CHECK_THROWS_AS(couple_level(one_layers[1], h(0), 1, kSpinOne, h(0)), std::domain_error);
    }

    SUBCASE("missing source state raises a construction error") {
        CHECK_THROWS_AS(couple_step(first, h(3), 1, kSpinHalf, h(2), h(0)), ConstructionError);
    }
}

TEST_CASE("layer cell sizes match the count recurrence") {
    BuildOptions opts;
    opts.prune_for_singlets = false;

    const std::vector<Layer> half_layers = build_layers(8, kSpinHalf, opts);
    for (const Layer& layer : half_layers) {
        for (const auto& [key, states] : layer.cells) {
            const auto& [j, m] = key;
            REQUIRE(BigInt(states.size()) == count_states(j, layer.particles, kSpinHalf));
            for (std::size_t i = 0; i < states.size(); ++i) {
                REQUIRE(states[i].index == static_cast<int>(i) + 1);
                REQUIRE(states[i].j == j);
                REQUIRE(states[i].m == m);
            }
        }
    }

    const std::vector<Layer> one_layers = build_layers(6, kSpinOne, opts);
    for (const Layer& layer : one_layers) {
        for (const auto& [key, states] : layer.cells) {
            REQUIRE(BigInt(states.size()) == count_states(key.first, layer.particles, kSpinOne));
        }
    }

    // n = 4 spin-1/2 layer: 2 singlets, 3 j=1 states per m, 1 j=2 state per m
    const Layer& last = half_layers[3];
    CHECK(last.cell(h(0), h(0))->size() == 2);
    CHECK(last.cell(h(2), h(2))->size() == 3);
    CHECK(last.cell(h(4), h(0))->size() == 1);
}

TEST_CASE("m-sector consistency and exact normalization") {
    BuildOptions opts;
    opts.prune_for_singlets = false;
    for (const Layer& layer : build_layers(6, kSpinHalf, opts)) {
        for (const auto& [key, states] : layer.cells) {
            for (const CoupledState& s : states) {
                REQUIRE(norm_squared(s.amps) == RadicalSum(1));
                for (const auto& [word, amp] : s.amps) REQUIRE(word.letter_sum() == s.m);
            }
        }
    }
}

TEST_CASE("degenerate n = 1") {
    const std::vector<Layer> layers = build_layers(1, kSpinOne, {});
    REQUIRE(layers.size() == 1);
    CHECK(layers[0].cells.size() == 3);
    CHECK(singlet_basis(1, kSpinOne).size() == 0);
}

TEST_CASE("singlet bases match the published small cases") {
    SUBCASE("four spin-1/2 particles") {
        const SingletBasis basis = singlet_basis(4, kSpinHalf);
        REQUIRE(basis.size() == 2);
        CHECK(basis.states[0].amps ==
              make_amps(kSpinHalf, {{"-+-+", -1, 6, 3},
                                    {"-++-", -1, 6, 3},
                                    {"+--+", -1, 6, 3},
                                    {"+-+-", -1, 6, 3},
                                    {"--++", 1, 3, 3},
                                    {"++--", 1, 3, 3}}));
        CHECK(basis.states[1].amps == make_amps(kSpinHalf, {{"+-+-", 1, 2, 1},
                                                            {"+--+", -1, 2, 1},
                                                            {"-++-", -1, 2, 1},
                                                            {"-+-+", 1, 2, 1}}));
    }

    SUBCASE("three spin-1/2 particles have no singlet") {
        CHECK(singlet_basis(3, kSpinHalf).size() == 0);
    }

    SUBCASE("five spin-1 particles") {
        const SingletBasis basis = singlet_basis(5, kSpinOne);
        REQUIRE(basis.size() == 6);
        const BasisWord word = word_from_string("-1,-1,0,1,1", kSpinOne);
        REQUIRE(basis.states[0].amps.count(word) == 1);
        CHECK(basis.states[0].amps.at(word) == rs(-1, 15, 30));  // -sqrt(2/15)
    }
}

TEST_CASE("pruned and unpruned builds agree on kept cells") {
    BuildOptions pruned;
    BuildOptions full;
    full.prune_for_singlets = false;
    for (const HalfInt spin : {kSpinHalf, kSpinOne}) {
        for (int n = 2; n <= 5; ++n) {
            if ((n * spin.twice) % 2 != 0) continue;
            const auto a = build_layers(n, spin, pruned);
            const auto b = build_layers(n, spin, full);
            const auto* cell_a = a.back().cell(h(0), h(0));
            const auto* cell_b = b.back().cell(h(0), h(0));
            REQUIRE(cell_a != nullptr);
            REQUIRE(cell_b != nullptr);
            REQUIRE(cell_a->size() == cell_b->size());
            for (std::size_t i = 0; i < cell_a->size(); ++i) {
                REQUIRE((*cell_a)[i].amps == (*cell_b)[i].amps);
            }
        }
    }
}

TEST_CASE("total raising and lowering") {
    const SingletBasis bell = singlet_basis(2, kSpinHalf);
    REQUIRE(bell.size() == 1);
    CHECK(apply_total_raising(bell.states[0]).empty());
    CHECK(apply_total_lowering(bell.states[0]).empty());

    BuildOptions opts;
    opts.prune_for_singlets = false;
    const std::vector<Layer> layers = build_layers(2, kSpinHalf, opts);

    const CoupledState& stretched = layers[1].cell(h(2), h(2))->front();
    CHECK(apply_total_raising(stretched).empty());

    // J+ on the m = 0 triplet: sqrt(j(j+1) - m(m+1)) = sqrt(2) on |++>
    const CoupledState& triplet = layers[1].cell(h(2), h(0))->front();
    const AmplitudeMap raised = apply_total_raising(triplet);
    REQUIRE(raised.size() == 1);
    CHECK(raised.at(word_from_string("++", kSpinHalf)) == rs(1, 1, 2));

    // every singlet in range is annihilated
    for (int n : {4, 6}) {
        for (const CoupledState& s : singlet_basis(n, kSpinHalf).states) {
            REQUIRE(apply_total_raising(s).empty());
            REQUIRE(apply_total_lowering(s).empty());
        }
    }
    for (int n : {2, 3, 4, 5}) {
        for (const CoupledState& s : singlet_basis(n, kSpinOne).states) {
            REQUIRE(apply_total_raising(s).empty());
            REQUIRE(apply_total_lowering(s).empty());
        }
    }
}

TEST_CASE("zigzag product states") {
    SUBCASE("two Bell blocks equal singlet #2 of four spin-1/2 particles") {
        const CoupledState z = zigzag_state(kSpinHalf, {2, 2});
        const SingletBasis basis = singlet_basis(4, kSpinHalf);
        CHECK(z.amps == basis.states[1].amps);
    }

    SUBCASE("three Bell blocks equal singlet #5 of six") {
        const CoupledState z = zigzag_state(kSpinHalf, {2, 2, 2});
        const SingletBasis basis = singlet_basis(6, kSpinHalf);
        REQUIRE(basis.size() == 5);
        CHECK(z.amps == basis.states[4].amps);
    }

    SUBCASE("spin-1 (2,2) blocks equal singlet #3 of four") {
        const CoupledState z = zigzag_state(kSpinOne, {2, 2});
        const SingletBasis basis = singlet_basis(4, kSpinOne);
        REQUIRE(basis.size() == 3);
        CHECK(z.amps == basis.states[2].amps);
    }

    SUBCASE("invalid block sizes") {
        CHECK_THROWS_AS(zigzag_state(kSpinHalf, {3}), std::domain_error);
        CHECK_THROWS_AS(zigzag_state(kSpinOne, {4}), std::domain_error);
    }

    SUBCASE("zigzag states lie in the exact span of the singlet basis") {
        for (const auto& [spin, blocks] :
             std::vector<std::pair<HalfInt, std::vector<int>>>{{kSpinHalf, {2, 2, 2}},
                                                               {kSpinOne, {2, 3}},
                                                               {kSpinOne, {3, 2}}}) {
            const CoupledState z = zigzag_state(spin, blocks);
            const SingletBasis basis = singlet_basis(z.particles, spin);
            AmplitudeMap residual = z.amps;
            for (const CoupledState& b : basis.states) {
                accumulate_scaled(residual, b.amps, -inner_product(b.amps, z.amps));
            }
            REQUIRE(residual.empty());
        }
    }
}

TEST_CASE("generic coupling kernel handles spin-3/2 and spin-2") {
    const HalfInt spin32(3);
    BuildOptions opts;
    opts.prune_for_singlets = false;

    const std::vector<Layer> layers = build_layers(4, spin32, opts);
    for (const Layer& layer : layers) {
        for (const auto& [key, states] : layer.cells) {
            REQUIRE(BigInt(states.size()) == count_states(key.first, layer.particles, spin32));
            for (std::size_t a = 0; a < states.size(); ++a) {
                for (std::size_t b = a; b < states.size(); ++b) {
                    REQUIRE(inner_product(states[a].amps, states[b].amps) ==
                            (a == b ? RadicalSum(1) : RadicalSum()));
                }
            }
        }
    }
    BigInt total = 0;
    for (int tj = 0; tj <= 4 * 3; tj += 2) total += count_states(h(tj), 4, spin32) * (tj + 1);
    CHECK(total == BigInt(256));  // 4^4 product states

    const SingletBasis basis = singlet_basis(4, spin32);
    REQUIRE(basis.size() == 4);
    for (const CoupledState& s : basis.states) {
        REQUIRE(apply_total_raising(s).empty());
        REQUIRE(apply_total_lowering(s).empty());
        REQUIRE(norm_squared(s.amps) == RadicalSum(1));
    }

    // integer spin 2 admits the horizontal step
    const HalfInt spin2(4);
    const std::vector<Layer> two = build_layers(2, spin2, opts);
    const CoupledState level = couple_level(two[0], spin2, 1, spin2, HalfInt(2));
    CHECK(level.j == spin2);
    CHECK(norm_squared(level.amps) == RadicalSum(1));
}

TEST_CASE("construction scales past the published table range") {
    const SingletBasis half10 = singlet_basis(10, kSpinHalf);
    REQUIRE(half10.size() == 42);  // Catalan C_5
    for (std::size_t i = 0; i < half10.size(); ++i) {
        REQUIRE(apply_total_raising(half10.states[i]).empty());
        for (std::size_t j = i; j < half10.size(); ++j) {
            REQUIRE(inner_product(half10.states[i].amps, half10.states[j].amps) ==
                    (i == j ? RadicalSum(1) : RadicalSum()));
        }
    }

    const SingletBasis one8 = singlet_basis(8, kSpinOne);
    REQUIRE(one8.size() == 91);
    for (const std::size_t i : {std::size_t{0}, std::size_t{45}, std::size_t{90}}) {
        REQUIRE(apply_total_raising(one8.states[i]).empty());
        REQUIRE(apply_total_lowering(one8.states[i]).empty());
        REQUIRE(norm_squared(one8.states[i].amps) == RadicalSum(1));
    }
}

TEST_CASE("capacity guard") {
    BuildOptions tiny;
    tiny.amplitude_budget = 10;
    CHECK_THROWS_AS(build_layers(6, kSpinHalf, tiny), CapacityError);
    CHECK_THROWS_AS(singlet_basis(200, kSpinHalf), CapacityError);
    CHECK(predicted_amplitude_count(200, kSpinHalf, true, 10'000'000) > 10'000'000);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(build_layers(0, kSpinHalf, {}), std::domain_error);
    CHECK_THROWS_AS(build_layers(2, h(0), {}), std::domain_error);
    CHECK_THROWS_AS(count_states(h(0), 0, kSpinHalf), std::domain_error);
}
