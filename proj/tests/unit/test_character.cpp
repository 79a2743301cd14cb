#include <doctest.h>

#include <algorithm>
#include <random>

#include "cohomlab/character_table.hpp"

using namespace cohomlab;

namespace {

ClassFunction irr(int m, std::vector<int> parts) {
    return CharacterTable::get(m).irreducible(Partition(std::move(parts)));
}

bool decomposes_as(const ClassFunction& f,
                   std::vector<std::pair<std::vector<int>, int>> expected) {
    auto got = decompose(f);
    if (got.size() != expected.size()) return false;
    std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
        return Partition(a.first) < Partition(b.first);
    });
    for (size_t i = 0; i < got.size(); ++i)
        if (!(got[i].lambda == Partition(expected[i].first)) ||
            got[i].multiplicity != expected[i].second)
            return false;
    return true;
}

}  // namespace

TEST_CASE("small character tables against independent oracles") {
    // trivial row is all ones
    for (const auto& mu : partitions_of(5)) CHECK(irr(5, {5}).at(mu) == 1);
    // sign of S_3 on (1,1,1),(2,1),(3)
    ClassFunction sgn = irr(3, {1, 1, 1});
    CHECK(sgn.at(Partition({1, 1, 1})) == 1);
    CHECK(sgn.at(Partition({2, 1})) == -1);
    CHECK(sgn.at(Partition({3})) == 1);
    // chi^{(2,1)} equals the fixed-point character minus one
    ClassFunction std3 = irr(3, {2, 1});
    for (const auto& mu : partitions_of(3)) CHECK(std3.at(mu) == mu.multiplicity(1) - 1);
    CHECK(std3.at(Partition({1, 1, 1})) == 2);
    CHECK(std3.at(Partition({2, 1})) == 0);
    CHECK(std3.at(Partition({3})) == -1);
}

TEST_CASE("identity column equals hook length dimensions") {
    for (int m = 1; m <= 8; ++m)
        for (const auto& lam : partitions_of(m))
            CHECK(irr(m, lam.parts()).dimension() == Rational(irreducible_dimension(lam)));
}

TEST_CASE("orthonormality up to S_6") {
    for (int m = 1; m <= 6; ++m) {
        const auto& classes = partitions_of(m);
        for (size_t a = 0; a < classes.size(); ++a)
            for (size_t b = a; b < classes.size(); ++b) {
                Rational ip = inner_product(irr(m, classes[a].parts()), irr(m, classes[b].parts()));
                CHECK(ip == (a == b ? 1 : 0));
            }
    }
}

TEST_CASE("resource guard on the table size") {
    CHECK_THROWS_AS(CharacterTable::get(10), ResourceLimitError);
    CHECK_NOTHROW(CharacterTable::get(9));
}

TEST_CASE("inner products") {
    CHECK(inner_product(named_character(4, NamedRep::regular), named_character(4, NamedRep::trivial)) == 1);
    CHECK(inner_product(induce_trivial_from_transposition(4), irr(4, {3, 1})) == 2);
    ClassFunction f(3), g(4);
    CHECK_THROWS_AS(inner_product(f, g), std::domain_error);
}

TEST_CASE("decompose") {
    CHECK(decomposes_as(irr(3, {2, 1}), {{{2, 1}, 1}}));
    CHECK(decomposes_as(induce_trivial_from_transposition(4),
                        {{{4}, 1}, {{3, 1}, 2}, {{2, 2}, 1}, {{2, 1, 1}, 1}}));
    // reconstruction is exact
    auto parts = decompose(induce_trivial_from_transposition(5));
    CHECK(reconstruct(5, parts) == induce_trivial_from_transposition(5));
}

TEST_CASE("decompose then reconstruct fixes random nonnegative combinations") {
    std::mt19937_64 rng(83);
    for (int m = 2; m <= 6; ++m)
        for (int trial = 0; trial < 5; ++trial) {
            ClassFunction f(m);
            for (const auto& lam : partitions_of(m)) {
                int mult = static_cast<int>(rng() % 4);
                if (mult == 0) continue;
                ClassFunction chi = irr(m, lam.parts());
                chi *= Rational(mult);
                f += chi;
            }
            CHECK(reconstruct(m, decompose(f)) == f);
        }
}

TEST_CASE("non-genuine characters are reported with the offender") {
    ClassFunction f = irr(3, {3}) - irr(3, {1, 1, 1});
    auto r = try_decompose(f);
    CHECK(!r.genuine);
    CHECK(r.offender == Partition({1, 1, 1}));
    CHECK_THROWS_AS(decompose(f), NotGenuineCharacterError);

    ClassFunction half(3);
    half.at(Partition({3})) = Rational(1, 2);
    CHECK(!try_decompose(half).genuine);
}

TEST_CASE("restriction") {
    CHECK(restrict_character(irr(4, {2, 2})) == irr(3, {2, 1}));
    CHECK(restrict_character(named_character(5, NamedRep::trivial)) ==
          named_character(4, NamedRep::trivial));
    // Res of the standard of S_{n+1} is trivial + standard of S_n
    ClassFunction res = restrict_character(irr(5, {4, 1}));
    CHECK(res == named_character(4, NamedRep::trivial) + irr(4, {3, 1}));
}

TEST_CASE("induction") {
    CHECK(decomposes_as(induce_character(named_character(3, NamedRep::trivial)),
                        {{{4}, 1}, {{3, 1}, 1}}));
    CHECK(induce_character(named_character(3, NamedRep::regular)) ==
          named_character(4, NamedRep::regular));
    CHECK(induce_character(named_character(3, NamedRep::trivial)).dimension() == 4);
}

TEST_CASE("Ind_{S_2} of the trivial through the transposition subgroup") {
    CHECK(induce_trivial_from_transposition(2) == named_character(2, NamedRep::trivial));
    CHECK(decomposes_as(induce_trivial_from_transposition(3), {{{3}, 1}, {{2, 1}, 1}}));
    CHECK(induce_trivial_from_transposition(3).dimension() == 3);
    CHECK(induce_trivial_from_transposition(4).dimension() == 12);
    // agrees with iterated point-stabilizer induction from S_2
    ClassFunction cur = named_character(2, NamedRep::trivial);
    for (int m = 3; m <= 7; ++m) {
        cur = induce_character(cur);
        CHECK(cur == induce_trivial_from_transposition(m));
    }
}

TEST_CASE("tensor products") {
    ClassFunction std4 = irr(4, {3, 1});
    CHECK(tensor(std4, named_character(4, NamedRep::trivial)) == std4);
    CHECK(decomposes_as(tensor(std4, std4), {{{4}, 1}, {{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}}));
    // the two product identities the degree-two arguments rely on, at n = 7
    CHECK(decomposes_as(tensor(irr(7, {5, 2}), irr(7, {6, 1})),
                        {{{4, 2, 1}, 1}, {{4, 3}, 1}, {{5, 1, 1}, 1}, {{5, 2}, 1}, {{6, 1}, 1}}));
    CHECK(decomposes_as(tensor(irr(7, {5, 1, 1}), irr(7, {6, 1})),
                        {{{5, 1, 1}, 1}, {{4, 2, 1}, 1}, {{4, 1, 1, 1}, 1}, {{6, 1}, 1}, {{5, 2}, 1}}));
}

TEST_CASE("named characters") {
    ClassFunction std4 = named_character(4, NamedRep::standard);
    CHECK(std4.at(Partition({1, 1, 1, 1})) == 3);
    CHECK(std4.at(Partition({2, 1, 1})) == 1);
    CHECK(std4.at(Partition({2, 2})) == -1);
    CHECK(std4.at(Partition({3, 1})) == 0);
    CHECK(std4.at(Partition({4})) == -1);
    CHECK(std4 == irr(4, {3, 1}));

    CHECK(named_character(5, NamedRep::sign).at(Partition({1, 1, 1, 1, 1})) == 1);
    ClassFunction reg = named_character(4, NamedRep::regular);
    CHECK(reg.at(Partition({1, 1, 1, 1})) == 24);
    CHECK(reg.at(Partition({2, 1, 1})) == 0);
    CHECK_THROWS_AS(named_character(1, NamedRep::standard), std::domain_error);
    CHECK_THROWS_AS(named_rep_from_string("bogus"), std::domain_error);
}

TEST_CASE("frobenius reciprocity") {
    for (int m = 3; m <= 6; ++m)
        for (const auto& lam : partitions_of(m - 1))
            for (const auto& nu : partitions_of(m))
                CHECK(inner_product(induce_character(irr(m - 1, lam.parts())), irr(m, nu.parts())) ==
                      inner_product(irr(m - 1, lam.parts()), restrict_character(irr(m, nu.parts()))));
}

TEST_CASE("branching boxes agree with induce and restrict") {
    for (int m = 2; m <= 6; ++m)
        for (const auto& lam : partitions_of(m)) {
            auto up = decompose(induce_character(irr(m, lam.parts())));
            auto boxes_up = add_one_box(lam);
            REQUIRE(up.size() == boxes_up.size());
            for (size_t i = 0; i < up.size(); ++i) {
                CHECK(up[i].lambda == boxes_up[i]);
                CHECK(up[i].multiplicity == 1);
            }
            auto down = decompose(restrict_character(irr(m, lam.parts())));
            auto boxes_down = remove_one_box(lam);
            REQUIRE(down.size() == boxes_down.size());
            for (size_t i = 0; i < down.size(); ++i) {
                CHECK(down[i].lambda == boxes_down[i]);
                CHECK(down[i].multiplicity == 1);
            }
        }
}
