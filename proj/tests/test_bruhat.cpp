#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "totpos/bruhat.hpp"
#include "totpos/configuration.hpp"

#include "oracles.hpp"

using namespace totpos;

namespace {

orthogonal_cycle section2_cycle() {
    return orthogonal_cycle(4, 4,
                            {{1, 2}, {1, 4}, {2, 4}, {2, 3}, {4, 3}, {4, 1}, {3, 1}, {3, 2}, {1, 2}});
}

std::vector<permutation> all_permutations(std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i + 1;
    std::vector<permutation> out;
    do out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace

TEST_CASE("permutation parsing and matrices") {
    permutation id = permutation::parse("123");
    CHECK(permutation_matrix(id) == [] {
        binary_config m(3, 3);
        for (std::size_t i = 0; i < 3; ++i) m.set(i, i, true);
        return m;
    }());

    permutation p = permutation::parse("3412");
    binary_config m = permutation_matrix(p);
    CHECK(m.get(0, 2));
    CHECK(m.get(1, 3));
    CHECK(m.get(2, 0));
    CHECK(m.get(3, 1));
    CHECK(m.weight() == 4);

    CHECK_THROWS_AS(permutation::parse("122"), input_error);
}

TEST_CASE("bruhat_leq_perm reproduces the worked chain") {
    CHECK(bruhat_leq_perm(permutation::parse("1324"), permutation::parse("3412")));
    CHECK_FALSE(bruhat_leq_perm(permutation::parse("3412"), permutation::parse("1324")));
    permutation p = permutation::parse("2143");
    CHECK(bruhat_leq_perm(p, p));
    CHECK_THROWS_AS(bruhat_leq_perm(permutation::parse("12"), permutation::parse("123")),
                    input_error);
}

TEST_CASE("bruhat order is a partial order for n <= 4") {
    for (std::size_t n = 2; n <= 4; ++n) {
        auto perms = all_permutations(n);
        for (const auto& p : perms) CHECK(bruhat_leq_perm(p, p));
        for (const auto& p : perms)
            for (const auto& q : perms)
                if (bruhat_leq_perm(p, q) && bruhat_leq_perm(q, p)) CHECK(p == q);
        if (n == 4) {
            for (const auto& p : perms)
                for (const auto& q : perms) {
                    if (!bruhat_leq_perm(p, q)) continue;
                    for (const auto& r : perms)
                        if (bruhat_leq_perm(q, r)) CHECK(bruhat_leq_perm(p, r));
                }
        }
    }
}

TEST_CASE("bruhat order transitivity sampled at n = 5") {
    auto perms = all_permutations(5);
    splitmix64 rng(606);
    for (int trial = 0; trial < 4000; ++trial) {
        const auto& p = perms[rng.below(perms.size())];
        const auto& q = perms[rng.below(perms.size())];
        const auto& r = perms[rng.below(perms.size())];
        if (bruhat_leq_perm(p, q) && bruhat_leq_perm(q, r)) CHECK(bruhat_leq_perm(p, r));
    }
}

TEST_CASE("cycle_to_permutation_pair splits the worked cycle") {
    auto [pi, sigma] = cycle_to_permutation_pair(section2_cycle());
    // even positions (1,2),(2,4),(4,3),(3,1); odd (1,4),(2,3),(4,1),(3,2)
    CHECK(pi == permutation({2, 4, 1, 3}));
    CHECK(sigma == permutation({4, 3, 2, 1}));

    // the two permutation matrices sum to the cycle's support
    binary_config sum(4, 4);
    binary_config mp = permutation_matrix(pi), ms = permutation_matrix(sigma);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK_FALSE((mp.get(i, j) && ms.get(i, j)));
            sum.set(i, j, mp.get(i, j) || ms.get(i, j));
        }
    CHECK(sum == section2_cycle().support());
}

TEST_CASE("cycle_to_permutation_pair on the smallest frame") {
    orthogonal_cycle c(2, 2, {{1, 1}, {1, 2}, {2, 2}, {2, 1}, {1, 1}});
    auto [pi, sigma] = cycle_to_permutation_pair(c);
    CHECK(pi == permutation({1, 2}));
    CHECK(sigma == permutation({2, 1}));
}

TEST_CASE("cycle_to_permutation_pair rejects non-two-regular cycles") {
    orthogonal_cycle c(3, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 1}, {1, 1}});
    CHECK_THROWS_AS(cycle_to_permutation_pair(c), input_error);
}

TEST_CASE("positivity equals Bruhat comparability on the worked cycle") {
    auto rep = cycle_positive_iff_bruhat(section2_cycle());
    CHECK(rep.is_positive);
    CHECK(rep.pi_leq_sigma);
    auto rev = cycle_positive_iff_bruhat(section2_cycle().reversed());
    CHECK_FALSE(rev.is_positive);
    CHECK_FALSE(rev.pi_leq_sigma);
    CHECK(rev.pi == permutation({4, 3, 2, 1}));
    CHECK(rev.sigma == permutation({2, 4, 1, 3}));
}

TEST_CASE("positivity equals Bruhat comparability on all 3x3 two-regular cycles") {
    binary_config full(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) full.set(i, j, true);
    int count = 0;
    for (const auto& c : oracles::simple_cycles(full)) {
        if (!c.is_two_regular()) continue;
        auto rep = cycle_positive_iff_bruhat(c);
        CHECK(rep.is_positive == rep.pi_leq_sigma);
        ++count;
    }
    CHECK(count > 0);
}

TEST_CASE("the 1324/3412 support appears with the right permutations") {
    binary_config support(4, 4);
    for (auto [i, j] : {std::pair<int, int>{1, 1}, {2, 3}, {3, 2}, {4, 4},
                        {1, 3}, {2, 4}, {3, 1}, {4, 2}})
        support.set(i - 1, j - 1, true);
    bool seen = false;
    for (const auto& c : oracles::simple_cycles(support)) {
        if (!c.is_two_regular() || c.support() != support) continue;
        auto rep = cycle_positive_iff_bruhat(c);
        if (rep.pi == permutation({1, 3, 2, 4}) && rep.sigma == permutation({3, 4, 1, 2})) {
            seen = true;
            CHECK(rep.is_positive);
            CHECK(rep.pi_leq_sigma);
        }
        CHECK(rep.is_positive == rep.pi_leq_sigma);
    }
    CHECK(seen);
}

TEST_CASE("prefix and complementary-corner conventions agree for permutations") {
    auto perms = all_permutations(4);
    rs_class cls{{1, 1, 1, 1}, {1, 1, 1, 1}};
    for (const auto& p : perms)
        for (const auto& q : perms)
            CHECK(bruhat_leq_perm(p, q) ==
                  bruhat_leq_ars(permutation_matrix(p), permutation_matrix(q), cls));
}

TEST_CASE("bruhat_leq_ars validates membership") {
    binary_config a = binary_config::from_rows({"10", "01"});
    binary_config b = binary_config::from_rows({"11", "00"});
    rs_class cls{{1, 1}, {1, 1}};
    CHECK(bruhat_leq_ars(a, a, cls));
    CHECK_THROWS_AS(bruhat_leq_ars(a, b, cls), input_error);
}

TEST_CASE("collection_to_matrix_pair on the worked cycle") {
    orthogonal_cycle c = section2_cycle();
    auto rep = collection_to_matrix_pair(cycle_collection(4, 4, {c}));
    CHECK(rep.is_positive);
    CHECK(rep.m2_leq_m1_strict);
    CHECK(rep.m2 == permutation_matrix(permutation({2, 4, 1, 3})));
    CHECK(rep.m1 == permutation_matrix(permutation({4, 3, 2, 1})));
}

TEST_CASE("collection with its reversal fails strictness") {
    orthogonal_cycle c = section2_cycle();
    auto rep = collection_to_matrix_pair(cycle_collection(4, 4, {c, c.reversed()}));
    CHECK_FALSE(rep.is_positive);
    CHECK_FALSE(rep.m2_leq_m1_strict);
    CHECK(rep.m1 == rep.m2);
}

TEST_CASE("collection sides agree on disjoint-support collections") {
    splitmix64 rng(777);
    int built = 0;
    for (int trial = 0; trial < 200 && built < 60; ++trial) {
        std::size_t m = 3 + rng.below(2), n = 3 + rng.below(2);
        binary_config mask(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) mask.set(i, j, rng.below(2));
        auto cycles = oracles::simple_cycles(mask);
        if (cycles.empty()) continue;
        // pick up to three cycles with pairwise disjoint supports
        std::vector<orthogonal_cycle> picked;
        binary_config used(m, n);
        for (const auto& c : cycles) {
            bool clash = false;
            for (const auto& p : c.positions())
                if (used.get(p.row - 1, p.col - 1)) clash = true;
            if (clash) continue;
            for (const auto& p : c.positions()) used.set(p.row - 1, p.col - 1, true);
            picked.push_back(rng.below(2) ? c.reversed() : c);
            if (picked.size() == 3) break;
        }
        if (picked.empty()) continue;
        auto rep = collection_to_matrix_pair(cycle_collection(m, n, picked));
        CHECK(rep.is_positive == rep.m2_leq_m1_strict);
        ++built;
    }
    CHECK(built > 20);
}

TEST_CASE("collections with repeated positions are rejected") {
    orthogonal_cycle c = section2_cycle();
    CHECK_THROWS_AS(collection_to_matrix_pair(cycle_collection(4, 4, {c, c})), input_error);
}
