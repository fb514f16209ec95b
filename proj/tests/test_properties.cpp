#include <numeric>

#include "doctest.h"
#include "metafib/metafib.hpp"

using namespace metafib;

namespace {

SequenceState conolly_ones(index_t upto, std::uint64_t s = 0, std::size_t r = 3) {
    SequenceState st(conolly_spec(s), std::vector<term_t>(r, 1));
    st.extend(upto);
    return st;
}

SequenceState table1_state() {
    SequenceState st(conway_spec(2, 0, 1), {1, 1});
    st.extend(22);
    return st;
}

}  // namespace

TEST_CASE("check_slow_growth") {
    SUBCASE("table 1 range") {
        auto r = check_slow_growth(table1_state(), 2, 22);
        CHECK(r.holds);
        CHECK(!r.first_violation);
        CHECK(r.checked_range == std::pair<index_t, index_t>{2, 22});
    }
    SUBCASE("violation reported with the offending delta") {
        std::vector<term_t> table = {0, 1, 3};
        auto r = check_slow_growth(table, 2, 2);
        CHECK(!r.holds);
        REQUIRE(r.first_violation);
        CHECK(r.first_violation->first == 2);
        CHECK(r.first_violation->second == "difference 2");
    }
    SUBCASE("conolly ones hold to 10^4") {
        auto st = conolly_ones(10000);
        REQUIRE(st.active());
        CHECK(check_slow_growth(st, 2, 10000).holds);
    }
    SUBCASE("range validation") {
        CHECK_THROWS_AS(check_slow_growth(table1_state(), 1, 22), index_out_of_range);
        CHECK_THROWS_AS(check_slow_growth(table1_state(), 2, 23), index_out_of_range);
    }
}

TEST_CASE("check_no_consecutive_increments") {
    SUBCASE("conolly ones hold to 10^4") {
        auto st = conolly_ones(10000);
        CHECK(check_no_consecutive_increments(st, 3, 10000).holds);
    }
    SUBCASE("immediate violation") {
        std::vector<term_t> table = {0, 1, 2, 3};
        auto r = check_no_consecutive_increments(table, 3, 3);
        CHECK(!r.holds);
        REQUIRE(r.first_violation);
        CHECK(r.first_violation->first == 3);
    }
    SUBCASE("the conway table violates it: the property is family-specific") {
        auto r = check_no_consecutive_increments(table1_state(), 3, 22);
        CHECK(!r.holds);
        REQUIRE(r.first_violation);
        CHECK(r.first_violation->first == 4);  // deltas at 3 and 4 are both 1
    }
}

TEST_CASE("split_components") {
    auto st = conolly_ones(20);
    SUBCASE("n=6") {
        auto s = split_components(st, 6);
        CHECK(s.c1 == 2);  // C(4)
        CHECK(s.c2 == 1);  // C(3)
        CHECK(s.c1 + s.c2 == st.term(6));
    }
    SUBCASE("n=8") {
        auto s = split_components(st, 8);
        CHECK(s.c1 == 2);
        CHECK(s.c2 == 2);
        CHECK(s.c1 + s.c2 == st.term(8));
    }
    SUBCASE("n=4") {
        auto s = split_components(st, 4);
        CHECK(s.c1 == 1);
        CHECK(s.c2 == 1);
    }
    SUBCASE("sum identity everywhere") {
        for (index_t n = 4; n <= st.len(); ++n) {
            auto s = split_components(st, n);
            CHECK(s.c1 + s.c2 == st.term(n));
        }
    }
    SUBCASE("out of range") {
        CHECK_THROWS_AS(split_components(st, 3), index_out_of_range);
        CHECK_THROWS_AS(split_components(st, 21), index_out_of_range);
    }
}

TEST_CASE("check_split_law") {
    auto st = conolly_ones(10000);
    auto r = check_split_law(st, 4, 10000);
    CHECK(r.holds);
    // parity spot checks from the small table
    {
        auto s6 = split_components(st, 6);
        CHECK(st.term(6) == 3);
        CHECK(s6.c1 == (st.term(6) + 1) / 2);
        auto s8 = split_components(st, 8);
        CHECK(st.term(8) == 4);
        CHECK(s8.c1 == st.term(8) / 2);
        CHECK(s8.c2 == st.term(8) / 2);
    }
}

TEST_CASE("delta_decomposition") {
    auto st = conolly_ones(100);
    SUBCASE("components sum to delta") {
        for (index_t n = 5; n <= st.len(); ++n) {
            auto parts = delta_decomposition(st, n);
            REQUIRE(parts.size() == 2);
            CHECK(std::accumulate(parts.begin(), parts.end(), 0ll) == st.delta(n));
        }
    }
    SUBCASE("n=6 sums to 1") {
        auto parts = delta_decomposition(st, 6);
        CHECK(parts[0] + parts[1] == 1);
    }
    SUBCASE("n=5 gives [0,0]") {
        auto parts = delta_decomposition(st, 5);
        CHECK(parts[0] == 0);
        CHECK(parts[1] == 0);
    }
    SUBCASE("each component in {0,1} for slow conolly states") {
        for (index_t n = 5; n <= st.len(); ++n)
            for (long long d : delta_decomposition(st, n)) CHECK((d == 0 || d == 1));
    }
    SUBCASE("general conolly decomposition also sums to delta") {
        SequenceState g(general_conolly_spec({{0, 1}, {1, 2}}), {1, 1});
        g.extend(60);
        if (g.len() >= 5) {
            for (index_t n = 4; n <= g.len(); ++n) {
                auto parts = delta_decomposition(g, n);
                CHECK(std::accumulate(parts.begin(), parts.end(), 0ll) == g.delta(n));
            }
        }
    }
}

TEST_CASE("gen_E") {
    SUBCASE("k=2 is fibonacci") {
        auto e = gen_E(2, 8);
        const std::vector<term_t> want = {1, 1, 2, 3, 5, 8, 13, 21};
        for (index_t i = 1; i <= 8; ++i) CHECK(e.at(i) == want[i - 1]);
    }
    SUBCASE("k=3") {
        auto e = gen_E(3, 9);
        const std::vector<term_t> want = {1, 1, 1, 2, 3, 4, 6, 9, 13};
        for (index_t i = 1; i <= 9; ++i) CHECK(e.at(i) == want[i - 1]);
    }
    SUBCASE("E_{k+j} = j+1 for j in 1..k, k in 1..10") {
        for (unsigned k = 1; k <= 10; ++k) {
            auto e = gen_E(k, 2 * k);
            for (index_t j = 1; j <= k; ++j) CHECK(e.at(k + j) == j + 1);
        }
    }
    SUBCASE("nondecreasing, strictly increasing past k") {
        for (unsigned k = 1; k <= 6; ++k) {
            auto e = gen_E(k, 40);
            for (index_t n = 2; n <= e.len(); ++n) {
                CHECK(e.at(n) >= e.at(n - 1));
                if (n > k + 1) CHECK(e.at(n) > e.at(n - 1));
            }
        }
    }
    SUBCASE("bad arguments") {
        CHECK_THROWS_AS(gen_E(0, 5), bad_parameter);
        CHECK_THROWS_AS(gen_E(5, 3), bad_parameter);
    }
}

TEST_CASE("check_en_correspondence") {
    SUBCASE("k=2 horizon 22: the four bold table entries") {
        auto rep = check_en_correspondence(2, 22);
        CHECK(rep.main.holds);
        // A(E_5)=A(5)=3, A(E_6)=A(8)=5, A(E_7)=A(13)=8, A(E_8)=A(21)=13
        CHECK(rep.max_checked_n == 8);
    }
    SUBCASE("base case n=2") {
        auto rep = check_en_correspondence(2, 3);
        CHECK(rep.main.holds);
    }
    SUBCASE("k=3 horizon 10^4, with an oracle-grade spot check below 60") {
        auto rep = check_en_correspondence(3, 10000);
        CHECK(rep.main.holds);
        CHECK(rep.hyp2_all);
        CHECK(rep.hyp3_all);
        SequenceState a(conway_spec(3, 0, 1), {1, 1});
        a.extend(60);
        auto e = gen_E(3, 20);
        for (index_t n = 2; n <= e.len() && e.at(n) <= 60; ++n)
            CHECK(a.term(e.at(n)) == e.at(n - 1));
    }
}

TEST_CASE("growth_report") {
    SUBCASE("table 1 checkpoints") {
        auto st = table1_state();
        auto rep = growth_report(st, {1, 11, 22});
        REQUIRE(rep.size() == 3);
        CHECK(rep[0] == std::pair<index_t, term_t>{1, 1});
        CHECK(rep[1] == std::pair<index_t, term_t>{11, 7});
        CHECK(rep[2] == std::pair<index_t, term_t>{22, 14});
        CHECK(strictly_increasing(rep));
    }
    SUBCASE("conolly checkpoints") {
        auto st = conolly_ones(10);
        auto rep = growth_report(st, {4, 8});
        CHECK(rep[0] == std::pair<index_t, term_t>{4, 2});
        CHECK(rep[1] == std::pair<index_t, term_t>{8, 4});
    }
    SUBCASE("constant prefix is not strictly increasing") {
        auto st = conolly_ones(10, 0, 3);
        auto rep = growth_report(st, {1, 2, 3});
        CHECK(!strictly_increasing(rep));
    }
}
