#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "richardson/oracle.hpp"
#include "richardson/strata.hpp"

using namespace rich;

namespace {

std::vector<Shape> comparable_shapes(int n, int d) {
    std::vector<Shape> out;
    for (const auto& I : all_subsets(n, d))
        for (const auto& J : all_subsets(n, d)) {
            Shape sh(n, I, J);
            if (sh.comparable()) out.push_back(sh);
        }
    return out;
}

// permutation matrix of the cell label: column l has its 1 in row w(l)
FpMatrix perm_matrix(const Permutation& w) {
    int d = w.size();
    FpMatrix m(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), 0));
    for (int l = 1; l <= d; ++l) m[static_cast<size_t>(w(l)) - 1][static_cast<size_t>(l) - 1] = 1;
    return m;
}

FpMatrix random_upper(int d, const PrimeField& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> unit(1, f.p - 1), any(0, f.p - 1);
    FpMatrix m(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), 0));
    for (int i = 0; i < d; ++i) {
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] = unit(rng);
        for (int j = i + 1; j < d; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = any(rng);
    }
    return m;
}

FpMatrix mul(const FpMatrix& a, const FpMatrix& b, const PrimeField& f) {
    size_t d = a.size();
    FpMatrix c(d, std::vector<int>(d, 0));
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k)
            for (size_t j = 0; j < d; ++j) c[i][j] = f.add(c[i][j], f.mul(a[i][k], b[k][j]));
    return c;
}

}  // namespace

TEST_CASE("prime field") {
    PrimeField f(5);
    for (int a = 1; a < 5; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
}

TEST_CASE("count_points examples") {
    CHECK(count_points(Shape(4, {1, 2}, {3, 4}), 2) == 6);  // |GL2(F_2)|
    CHECK(count_points(Shape(3, {1, 2}, {2, 3}), 3) == 6);  // (3-1)*3
    CHECK(count_points(Shape(4, {1, 3}, {1, 3}), 5) == 1);
    CHECK(count_points(Shape(4, {2, 3}, {1, 4}), 3) == 0);  // not I <= J
}

TEST_CASE("bruhat_cell_of") {
    PrimeField f(5);
    CHECK(bruhat_cell_of({{1, 0}, {0, 1}}, f) == Permutation::identity(2));
    CHECK(bruhat_cell_of({{0, 1}, {1, 0}}, f) == Permutation({2, 1}));
    FpMatrix singular{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(bruhat_cell_of(singular, f), std::invalid_argument);
}

TEST_CASE("bruhat_cell_of round trip on random B w B' factorizations") {
    std::mt19937 rng(4242);
    for (int p : {2, 3, 5}) {
        PrimeField f(p);
        for (int d = 2; d <= 4; ++d) {
            auto perms = all_permutations(d);
            std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
            for (int trial = 0; trial < 350; ++trial) {
                const Permutation& w = perms[pick(rng)];
                FpMatrix m = mul(mul(random_upper(d, f, rng), perm_matrix(w), f),
                                 random_upper(d, f, rng), f);
                CHECK(bruhat_cell_of(m, f) == w);
            }
        }
    }
}

TEST_CASE("count_by_stratum examples") {
    auto gl2 = count_by_stratum(Shape(4, {1, 2}, {3, 4}), 2);
    REQUIRE(gl2.size() == 2);
    CHECK(gl2[Permutation({1, 2})] == 2);  // (p-1)^2 p
    CHECK(gl2[Permutation({2, 1})] == 4);  // (p-1)^2 p^2
    auto easy = count_by_stratum(Shape(3, {1, 2}, {2, 3}), 5);
    REQUIRE(easy.size() == 1);
    CHECK(easy[Permutation({2, 1})] == 20);
    auto pt = count_by_stratum(Shape(4, {1, 3}, {1, 3}), 3);
    REQUIRE(pt.size() == 1);
    CHECK(pt[Permutation::identity(2)] == 1);
}

TEST_CASE("per-stratum counts match (p-1)^a p^b across Gr(2,4), Gr(2,5), Gr(3,5)") {
    std::vector<std::pair<int, int>> grs{{4, 2}, {5, 2}, {5, 3}};
    for (auto [n, d] : grs)
        for (const auto& sh : comparable_shapes(n, d))
            for (int p : {2, 3}) {
                auto tally = count_by_stratum(sh, p);
                auto strata = deodhar_strata(sh);
                CHECK(tally.size() == strata.size());
                long long total = 0;
                for (const auto& s : strata) {
                    long long expect = 1;
                    for (int i = 0; i < s.alpha; ++i) expect *= p - 1;
                    for (int i = 0; i < s.beta; ++i) expect *= p;
                    auto it = tally.find(s.w);
                    REQUIRE(it != tally.end());
                    CHECK(it->second == expect);
                    total += expect;
                }
                CHECK(total == count_points(sh, p));
            }
}

TEST_CASE("counts are stable under enlarging the ambient space") {
    for (const auto& sh : comparable_shapes(4, 2)) {
        Shape larger(sh.n + 1, sh.I, sh.J);
        for (int p : {2, 5}) CHECK(count_points(sh, p) == count_points(larger, p));
    }
    Shape far(9, {1, 2}, {4, 5});
    Shape clamped(5, {1, 2}, {4, 5});
    CHECK(count_points(far, 3) == count_points(clamped, 3));
}

TEST_CASE("search space guard") {
    // 2 * 18 free entries in M_I^- after clamping exceeds the 20-digit guard
    Shape huge(20, {1, 2}, {19, 20});
    CHECK_THROWS_AS(count_points(huge, 2), std::invalid_argument);
}
