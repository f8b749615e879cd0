#include "mbi/generators.hpp"
#include "mbi/monad_laws.hpp"
#include "mbi/uncertainty.hpp"

#include <doctest.h>

using namespace mbi;

TEST_CASE("nondet join concatenates in order") {
    auto inner1 = MStruct<Number>::nondet({1, 2});
    auto inner2 = MStruct<Number>::nondet({3});
    auto outer = MStruct<MStruct<Number>>::nondet({inner1, inner2});
    CHECK(join(outer) == MStruct<Number>::nondet({1, 2, 3}));
}

TEST_CASE("stoch join multiplies weights") {
    auto a = MStruct<Number>::stoch({{1, Number::ratio(1, 2)}, {2, Number::ratio(1, 2)}});
    auto b = MStruct<Number>::stoch({{3, Number(1)}});
    auto outer = MStruct<MStruct<Number>>::stoch({{a, Number::ratio(1, 4)}, {b, Number::ratio(3, 4)}});
    auto j = join(outer);
    REQUIRE(j.size() == 3);
    CHECK(j.outcomes()[0].weight == Number::ratio(1, 8));
    CHECK(j.outcomes()[2].weight == Number::ratio(3, 4));
    CHECK(j.total_weight() == Number(1));
}

TEST_CASE("identity holds exactly one value") {
    CHECK(MStruct<Number>::identity(5).size() == 1);
    CHECK_THROWS_AS(MStruct<Number>(Kind::Identity, {}), StructureError);
}

TEST_CASE("stoch factory rejects bad weights") {
    CHECK_THROWS_AS(MStruct<Number>::stoch({{1, Number::ratio(1, 2)}}), StructureError);
    CHECK_THROWS_AS(MStruct<Number>::stoch({{1, Number(2)}, {2, Number(-1)}}), StructureError);
}

TEST_CASE("map keeps weights, bind matches join of map") {
    auto m = MStruct<Number>::stoch({{1, Number::ratio(1, 4)}, {2, Number::ratio(3, 4)}});
    auto doubled = map([](const Number& x) { return x * Number(2); }, m);
    CHECK(doubled.outcomes()[1].value == Number(4));
    CHECK(doubled.outcomes()[1].weight == Number::ratio(3, 4));
    auto k = [](const Number& x) { return MStruct<Number>::stoch({{x, Number::ratio(1, 2)}, {x + Number(1), Number::ratio(1, 2)}}); };
    CHECK(bind(m, k) == join(map(k, m)));
}

TEST_CASE("join rejects mixed kinds") {
    auto outer = MStruct<MStruct<Number>>::nondet({MStruct<Number>::identity(1)});
    CHECK_THROWS_AS(join(outer), StructureError);
}

TEST_CASE("generator enumerates compositions and sizes") {
    auto w = weight_vectors(WeightScheme{}, 2);
    CHECK(w.size() == 3);  // 1/4+3/4, 2/4+2/4, 3/4+1/4
    auto g = value_structures(Kind::NonDet, int_grid(0, 3), 3, false);
    CHECK(g.count() == 4 + 16 + 64);
    auto s = value_structures(Kind::Stoch, int_grid(0, 1), 2, false);
    CHECK(s.count() == 2 * 1 + 4 * 3);
    for (std::uint64_t i = 0; i < s.count(); ++i) CHECK(s.at(i).total_weight() == Number(1));
}

TEST_CASE("monad laws hold for all three instances") {
    for (Kind kind : {Kind::Identity, Kind::NonDet, Kind::Stoch}) {
        CAPTURE(to_string(kind));
        // Stoch nests grow with the weight compositions; size 2 keeps them exhaustive.
        auto gen = value_structures(kind, int_grid(0, 2), kind == Kind::Stoch ? 2 : 3, kind == Kind::NonDet);
        auto laws = check_monad_laws(kind, gen, 1'000'000, 1);
        CHECK(laws.laws.size() == 8);
        CHECK(laws.passed());
        for (const auto& l : laws.laws) CHECK_MESSAGE(l.exhaustive, l.name);
        auto ne = check_nonempty_preservation(kind, gen, 1'000'000, 1);
        CHECK(ne.laws.size() == 3);
        CHECK(ne.passed());
    }
}
