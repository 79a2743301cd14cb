#include <doctest.h>

#include <random>

#include "cohomlab/permutation.hpp"

using namespace cohomlab;

TEST_CASE("partition enumeration is reverse lexicographic and complete") {
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(1)[0] == Partition({1}));
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(7).size() == 15);
    CHECK_THROWS_AS(partitions_of(0), std::domain_error);
    CHECK_THROWS_AS(partitions_of(-3), std::domain_error);

    const auto& p4 = partitions_of(4);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));
}

TEST_CASE("partition invariants are enforced") {
    CHECK_THROWS_AS(Partition({1, 2}), std::domain_error);
    CHECK_THROWS_AS(Partition({2, 0}), std::domain_error);
    CHECK(Partition({3, 1, 1}).to_string() == "[3,1,1]");
    CHECK(Partition::parse("[3,1,1]") == Partition({3, 1, 1}));
    CHECK(Partition({2, 1}).with_fixed_point() == Partition({2, 1, 1}));
    CHECK(Partition({2, 1, 1}).without_fixed_point() == Partition({2, 1}));
}

TEST_CASE("class sizes") {
    CHECK(class_size(Partition({1, 1, 1, 1})) == 1);
    CHECK(class_size(Partition({2, 1, 1})) == 6);
    CHECK(class_size(Partition({4})) == 6);
    for (int m = 1; m <= 8; ++m) {
        Integer total = 0;
        for (const auto& mu : partitions_of(m)) total += class_size(mu);
        CHECK(total == factorial(m));
    }
}

TEST_CASE("hook length dimensions") {
    CHECK(irreducible_dimension(Partition({6})) == 1);
    CHECK(irreducible_dimension(Partition({2, 2})) == 2);
    CHECK(irreducible_dimension(Partition({2, 1})) == 2);
    for (int m = 1; m <= 8; ++m) {
        Integer total = 0;
        for (const auto& lam : partitions_of(m)) {
            Integer d = irreducible_dimension(lam);
            total += d * d;
        }
        CHECK(total == factorial(m));
    }
}

TEST_CASE("one-box moves") {
    auto up = add_one_box(Partition({2, 1}));
    REQUIRE(up.size() == 3);
    CHECK(up[0] == Partition({3, 1}));
    CHECK(up[1] == Partition({2, 2}));
    CHECK(up[2] == Partition({2, 1, 1}));
    auto down = remove_one_box(Partition({2, 2}));
    REQUIRE(down.size() == 1);
    CHECK(down[0] == Partition({2, 1}));
    auto down2 = remove_one_box(Partition({5, 1}));
    REQUIRE(down2.size() == 2);
    CHECK(down2[0] == Partition({5}));
    CHECK(down2[1] == Partition({4, 1}));
}

TEST_CASE("cycle types") {
    CHECK(cycle_type(Permutation::identity(1, 4)) == Partition({1, 1, 1, 1}));
    CHECK(cycle_type(Permutation::transposition(1, 4, 1, 2)) == Partition({2, 1, 1}));
    CHECK(cycle_type(Permutation::from_cycles(1, 5, {{1, 2, 3}, {4, 5}})) == Partition({3, 2}));
    CHECK(cycle_type(class_representative(0, Partition({3, 2}))) == Partition({3, 2}));
}

TEST_CASE("cycle type is conjugation invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Permutation p = Permutation::random(1, 7, rng);
        Permutation q = Permutation::random(1, 7, rng);
        CHECK(cycle_type(q.compose(p).compose(q.inverse())) == cycle_type(p));
    }
}

TEST_CASE("coxeter words compose back to the permutation") {
    CHECK(coxeter_word(Permutation::identity(1, 4)).empty());
    CHECK(coxeter_word(Permutation::transposition(1, 4, 1, 2)) == std::vector<int>{1});

    std::mt19937_64 rng(11);
    for (int lo : {0, 1}) {
        for (int trial = 0; trial < 60; ++trial) {
            Permutation p = Permutation::random(lo, lo + 6, rng);
            Permutation acc = Permutation::identity(lo, lo + 6);
            for (int j : coxeter_word(p))
                acc = acc.compose(Permutation::transposition(lo, lo + 6, j, j + 1));
            CHECK(acc == p);
        }
    }
}
