#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minw/rootsys.hpp"

using namespace minw;

TEST_CASE("positive root counts match the classical table") {
    // The enumeration closes upward from the simple roots; the classical
    // counts are an independent check.
    std::vector<std::pair<char, int>> cases = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 5}, {'B', 3},
                                               {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4},
                                               {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4},
                                               {'G', 2}};
    for (auto [t, n] : cases) {
        auto rs = build_root_system(t, n);
        CHECK(rs.n_positive() == RootSystem::classical_positive_count(t, n));
    }
}

TEST_CASE("root coordinates of positive roots are nonnegative") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'C', 3}, {'B', 3}, {'G', 2}, {'F', 4}}) {
        auto rs = build_root_system(t, n);
        for (const auto& r : rs.positive)
            for (long x : r) CHECK(x >= 0);
    }
}

TEST_CASE("beta choices") {
    CHECK(build_root_system('A', 1).beta_simple == 0);
    CHECK(build_root_system('A', 3).beta_simple == 2);
    CHECK(build_root_system('C', 3).beta_simple == 2);
    CHECK(build_root_system('B', 3).beta_simple == 1);
    CHECK(build_root_system('D', 4).beta_simple == 1);
    CHECK(build_root_system('E', 6).beta_simple == 1);
    CHECK(build_root_system('E', 7).beta_simple == 0);
    CHECK(build_root_system('E', 8).beta_simple == 7);
    CHECK(build_root_system('F', 4).beta_simple == 0);
    // G2: beta = alpha_2 (the long simple root); the highest root is 3a1+2a2.
    auto g2 = build_root_system('G', 2);
    CHECK(g2.beta_simple == 1);
    CHECK(g2.positive[g2.highest_pos] == RootCoords{3, 2});
    CHECK(g2.n_positive() == 6);
}

TEST_CASE("B2 is redirected to C2") {
    auto rs = build_root_system('B', 2);
    CHECK(rs.type == 'C');
    CHECK(rs.rank == 2);
}

TEST_CASE("invalid types are rejected") {
    CHECK_THROWS(build_root_system('H', 3));
    CHECK_THROWS(build_root_system('B', 1));
    CHECK_THROWS(build_root_system('D', 3));
    CHECK_THROWS(build_root_system('E', 9));
    CHECK_THROWS(build_root_system('F', 5));
    CHECK_THROWS(build_root_system('A', 0));
}

TEST_CASE("Cartan matrices agree with the Bourbaki tables") {
    auto g2 = build_root_system('G', 2);
    CHECK(g2.cartan(0, 0) == 2);
    CHECK(g2.cartan(0, 1) == -1);
    CHECK(g2.cartan(1, 0) == -3);
    CHECK(g2.cartan(1, 1) == 2);

    auto c2 = build_root_system('C', 2);
    CHECK(c2.cartan(0, 1) == -1);
    CHECK(c2.cartan(1, 0) == -2);

    auto b3 = build_root_system('B', 3);
    CHECK(b3.cartan(1, 2) == -2);
    CHECK(b3.cartan(2, 1) == -1);
    CHECK(b3.cartan(0, 2) == 0);

    auto f4 = build_root_system('F', 4);
    CHECK(f4.cartan(1, 2) == -2);
    CHECK(f4.cartan(2, 1) == -1);
}

TEST_CASE("normalized form gives (beta,beta) = 2") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{
             {'A', 2}, {'A', 3}, {'B', 3}, {'C', 2}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}}) {
        auto rs = build_root_system(t, n);
        Weight b = rs.root_to_fw(rs.positive[rs.beta_pos]);
        CHECK(rs.inner(b, b) == 2);
        // every long root has normalized squared length 2
        for (const auto& r : rs.positive) {
            Weight w = rs.root_to_fw(r);
            Rat len = rs.inner(w, w);
            CHECK((len == 2 || len < 2));
        }
    }
}

TEST_CASE("G2 fundamental weight norm (paper values)") {
    auto g2 = build_root_system('G', 2);
    Weight w1 = g2.fundamental_weight(0);
    CHECK(g2.bourbaki(w1, w1) == 2);        // (w1|w1) = 2
    CHECK(g2.inner(w1, w1) == Rat(2, 3));   // (.,.) = (.|.)/3
    Weight w2 = g2.fundamental_weight(1);
    CHECK(g2.bourbaki(w2, w2) == 6);
    CHECK(g2.bourbaki(w1, w2) == 3);
}

TEST_CASE("pairing basics") {
    auto c2 = build_root_system('C', 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(c2.pairing(c2.fundamental_weight(i), c2.simple_root(j)) == (i == j ? 1 : 0));
    for (int j = 0; j < 2; ++j) CHECK(c2.pairing(c2.rho(), c2.simple_root(j)) == 1);
    CHECK_THROWS(c2.pairing(c2.rho(), RootCoords{0, 0}));

    // <-1/2 w2 + rho, a1+a2> expanded in epsilon coordinates equals 2
    Weight lam = c2.rho();
    lam[1] -= Rat(1, 2);
    CHECK(c2.pairing(lam, RootCoords{1, 1}) == 2);
}

TEST_CASE("reflections permute the root set") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'C', 2}, {'G', 2}, {'B', 3}, {'A', 3}}) {
        auto rs = build_root_system(t, n);
        for (const auto& a : rs.positive)
            for (const auto& g : rs.positive) {
                CHECK(rs.is_root(rs.reflect(g, a)));
            }
    }
}

TEST_CASE("(lambda,alpha) = (alpha,alpha)/2 * <lambda,alpha> on random integral weights") {
    std::mt19937 rng(12345);
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'C', 3}, {'G', 2}, {'B', 3}}) {
        auto rs = build_root_system(t, n);
        std::uniform_int_distribution<long> coef(-4, 4);
        for (int trial = 0; trial < 20; ++trial) {
            Weight lam(rs.rank, Rat(0));
            for (int i = 0; i < rs.rank; ++i) lam[i] = Rat(coef(rng));
            const auto& alpha = rs.positive[trial % rs.n_positive()];
            Weight af = rs.root_to_fw(alpha);
            CHECK(rs.inner(lam, af) == rs.inner(af, af) / 2 * rs.pairing(lam, alpha));
        }
    }
}

TEST_CASE("dot action fixes -rho") {
    auto b3 = build_root_system('B', 3);
    Weight mrho = b3.rho();
    for (auto& x : mrho) x = -x;
    for (int i = 0; i < 3; ++i) {
        Weight w = b3.dot_action({i}, mrho);
        CHECK(w == mrho);
    }
    // s_i . lambda = lambda - (<lambda,a_i>+1) a_i
    Weight lam = b3.fundamental_weight(0);
    Weight got = b3.dot_action({1}, lam);
    Weight expect = lam;
    Weight a1 = b3.root_to_fw(b3.simple_root(1));
    for (int j = 0; j < 3; ++j) expect[j] -= (b3.pairing(lam, b3.simple_root(1)) + 1) * a1[j];
    CHECK(got == expect);
}
