#include <catch2/catch_amalgamated.hpp>

#include <dschur/partition.hpp>

using namespace dschur;

TEST_CASE("partition basics") {
    Partition p{8, 3, 1};
    CHECK(p.size() == 12);
    CHECK(p.length() == 3);
    CHECK(p.part(1) == 8);
    CHECK(p.part(4) == 0);
    CHECK(Partition{std::vector<int>{3, 2, 0, 0}} == Partition({3, 2}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugation is an involution preserving size") {
    for (const Partition& p : partitions_up_to(8)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().size() == p.size());
    }
    CHECK(Partition({4, 4, 1}).conjugate() == Partition({3, 2, 2, 2}));
}

TEST_CASE("containment and skew shapes") {
    CHECK(Partition({4, 3}).contains(Partition({3, 3})));
    CHECK(!Partition({4, 3}).contains(Partition({3, 4 - 1, 1})));
    SkewShape s(Partition({4, 4, 1}), Partition({4, 3}));
    CHECK(s.size() == 2);
    CHECK(s.cell_contents() == std::vector<int>{2, -2});
    CHECK_THROWS_AS(SkewShape(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("strips") {
    CHECK(is_horizontal_strip(Partition({4, 2}), Partition({3, 1})));
    CHECK(is_horizontal_strip(Partition({3, 3}), Partition({3, 1})));
    CHECK(!is_horizontal_strip(Partition({2, 2}), Partition({1})));
    CHECK(is_vertical_strip(Partition({3, 3}), Partition({3, 2})));
    CHECK(is_vertical_strip(Partition({2, 1, 1}), Partition({1, 1})));
    CHECK(!is_vertical_strip(Partition({3, 1}), Partition({1, 1})));

    for (const Partition& mu : partitions_up_to(4))
        for (int k = 0; k <= 3; ++k) {
            for (const Partition& lam : horizontal_strip_successors(mu, k)) {
                CHECK(lam.size() == mu.size() + k);
                CHECK(is_horizontal_strip(lam, mu));
            }
            for (const Partition& lam : vertical_strip_successors(mu, k)) {
                CHECK(lam.size() == mu.size() + k);
                CHECK(is_vertical_strip(lam, mu));
            }
        }

    // cross-check the generator against brute-force enumeration
    const Partition mu{2, 1};
    auto hs = horizontal_strip_successors(mu, 2);
    int count = 0;
    for (const Partition& lam : partitions_of(mu.size() + 2))
        if (is_horizontal_strip(lam, mu)) ++count;
    CHECK(static_cast<int>(hs.size()) == count);
    CHECK(count == 4);  // (4,1), (3,2), (3,1,1), (2,2,1)
}

TEST_CASE("ribbons") {
    // (8,3,1)/mu ribbons of size >= 3: the seven targets of the current action
    const Partition lam{8, 3, 1};
    std::vector<Partition> mus;
    for (int r = 3; r <= lam.size(); ++r)
        for (const Partition& m : ribbon_predecessors(lam, r)) mus.push_back(m);
    const std::vector<Partition> expect = {{5, 3, 1}, {4, 3, 1}, {3, 3, 1}, {2, 2, 1},
                                           {2, 1, 1}, {2},       {8}};
    for (const auto& m : expect) {
        CAPTURE(m.to_string());
        CHECK(std::find(mus.begin(), mus.end(), m) != mus.end());
    }
    CHECK(mus.size() == 7);

    CHECK(is_ribbon(Partition({2, 2}), Partition({1})));
    CHECK(!is_ribbon(Partition({2, 2}), Partition({})));      // 2x2 block
    CHECK(!is_ribbon(Partition({2, 1, 1}), Partition({1})));  // rows 1 and 2 share no column
    CHECK(ribbon_height(Partition({2, 2}), Partition({1})) == 1);
    CHECK(ribbon_height(Partition({3}), Partition({})) == 0);
}

TEST_CASE("enumerations") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_up_to(6).size() == 1 + 1 + 2 + 3 + 5 + 7 + 11);
    CHECK(sub_partitions(Partition({2, 1})).size() == 5);  // {}, (1), (2), (1,1), (2,1)
}
