#include <catch2/catch_amalgamated.hpp>

#include "totpos/configuration.hpp"
#include "totpos/random_tp.hpp"

#include "oracles.hpp"

using namespace totpos;

namespace {
const exact_matrix section2_matrix = exact_matrix::from_ints({{1, 2, 3}, {5, 2, 4}, {2, 7, 2}});
}

TEST_CASE("configuration marks exact matches") {
    binary_config c = configuration(section2_matrix, rational(2));
    CHECK(c.weight() == 4);
    CHECK(c.get(0, 1));
    CHECK(c.get(1, 1));
    CHECK(c.get(2, 0));
    CHECK(c.get(2, 2));

    CHECK(configuration(section2_matrix, rational(8)).weight() == 0);

    exact_matrix j = exact_matrix::constant(2, 3, rational(1));
    CHECK(configuration(j, rational(1)).weight() == 6);
}

TEST_CASE("multiplicity matches the worked example") {
    CHECK(multiplicity(section2_matrix, rational(2)) == 4);
    CHECK(multiplicity(section2_matrix, rational(8)) == 0);
    CHECK(multiplicity(section2_matrix, rational(7)) == 1); // unique maximum
}

TEST_CASE("multiplicities sum to the cell count") {
    splitmix64 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t m = 1 + rng.below(5), n = 1 + rng.below(5);
        exact_matrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rational(rng.range(0, 3));
        std::size_t total = 0;
        for (const rational& v : distinct_values_sorted(a)) {
            CHECK(multiplicity(a, v) == configuration(a, v).weight());
            total += multiplicity(a, v);
        }
        CHECK(total == m * n);
    }
}

TEST_CASE("kth_smallest_value ranks distinct values") {
    CHECK(kth_smallest_value(section2_matrix, 1) == rational(1));
    CHECK(kth_smallest_value(section2_matrix, 2) == rational(2));
    CHECK(kth_smallest_value(section2_matrix, 3) == rational(3));
    CHECK(kth_smallest_value(section2_matrix, 1, true) == rational(7));

    exact_matrix c = exact_matrix::constant(2, 2, rational(5));
    CHECK(kth_smallest_value(c, 1) == rational(5));
    CHECK_THROWS_AS(kth_smallest_value(c, 2), input_error);
}

TEST_CASE("has_all_ones_2x2 finds witnesses") {
    binary_config j2(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) j2.set(i, j, true);
    auto w = has_all_ones_2x2(j2);
    REQUIRE(w.has_value());
    CHECK(w->row1 == 0);
    CHECK(w->row2 == 1);
    CHECK(w->col1 == 0);
    CHECK(w->col2 == 1);

    binary_config id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.set(i, i, true);
    CHECK_FALSE(has_all_ones_2x2(id).has_value());

    binary_config cyc = binary_config::from_rows({"0101", "0011", "1100", "1010"});
    CHECK_FALSE(has_all_ones_2x2(cyc).has_value());
}

TEST_CASE("smallest_k_audit on small TP matrices") {
    exact_matrix a = exact_matrix::from_ints({{2, 1}, {5, 3}});
    REQUIRE(classify(a, matrix_class::tp()).member);
    entry_rank_report rep = smallest_k_audit(a, 1);
    CHECK(rep.per_diagonal_bound == 1);
    CHECK(rep.per_diagonal_ok);
    for (const auto& [c, cnt] : rep.diagonal_counts) CHECK(cnt <= 1);

    // k large enough to cover every entry: bound is vacuous
    exact_matrix b = random_tp(3, 3, 77);
    entry_rank_report full = smallest_k_audit(b, 9);
    CHECK(full.total == 9);
    CHECK(full.total_ok);
}

TEST_CASE("smallest_k_audit demands a TP square matrix") {
    CHECK_THROWS_AS(smallest_k_audit(exact_matrix::from_ints({{1, 2}, {2, 1}}), 1),
                    precondition_error);
    CHECK_THROWS_AS(smallest_k_audit(exact_matrix::from_ints({{1, 2, 3}}), 1), precondition_error);
}

TEST_CASE("diagonal and anti-diagonal bounds hold on seeded TP matrices") {
    splitmix64 rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.below(5);
        exact_matrix a = random_tp(n, n, rng.next());
        for (std::size_t k = 1; k <= 3; ++k) {
            entry_rank_report lo = smallest_k_audit(a, k, false);
            CHECK(lo.per_diagonal_ok);
            CHECK(lo.total_ok);
            entry_rank_report hi = smallest_k_audit(a, k, true);
            CHECK(hi.per_diagonal_ok);
            CHECK(hi.total_ok);
        }
    }
}

TEST_CASE("TNS matrices have Zarankiewicz configurations at every value") {
    splitmix64 rng(4242);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t m = 2 + rng.below(3), n = 2 + rng.below(3);
        exact_matrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rational(rng.range(1, 4));
        if (!classify(a, matrix_class::tns()).member) continue;
        for (const rational& v : distinct_values_sorted(a))
            CHECK_FALSE(has_all_ones_2x2(configuration(a, v)).has_value());
    }
}
