#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "nil2/ratmatrix.hpp"

using namespace nil2;

namespace {

RatMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    int r = (int)rows.size(), c = r ? (int)rows[0].size() : 0;
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    return m;
}

RatMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long num = (long)(rng() % 9) - 4;
            long den = 1 + (long)(rng() % 3);
            Rat v(num);
            v /= den;
            m.set(i, j, v);
        }
    return m;
}

// slow pivotless Gauss over Q, used as a rank oracle
int naive_rank(const RatMatrix& m) {
    std::vector<RatVec> a(m.rows(), RatVec(m.cols(), Rat(0)));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int p = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (a[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[rank]);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rat f = a[r][c] / a[rank][c];
            a[r] = vec_sub(a[r], vec_scale(a[rank], f));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("rational string round trip") {
    CHECK(rat_str(Rat(0)) == "0");
    CHECK(rat_str(Rat(-7)) == "-7");
    Rat half(1);
    half /= 2;
    CHECK(rat_str(half) == "1/2");
    CHECK(rat_parse("2/4") == half);
    CHECK(rat_parse("-6/3") == Rat(-2));
    CHECK(rat_parse("0") == Rat(0));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}

TEST_CASE("vector helpers") {
    RatVec a{Rat(1), Rat(2)}, b{Rat(3), Rat(-2)};
    CHECK(vec_add(a, b) == RatVec{Rat(4), Rat(0)});
    CHECK(vec_sub(a, b) == RatVec{Rat(-2), Rat(4)});
    CHECK(vec_scale(a, Rat(3)) == RatVec{Rat(3), Rat(6)});
    CHECK(dot(a, b) == Rat(-1));
    CHECK(vec_is_zero(RatVec{Rat(0), Rat(0)}));
    CHECK_FALSE(vec_is_zero(a));
}

TEST_CASE("sparse storage drops explicit zeros") {
    RatMatrix m(2, 2);
    m.set(0, 0, Rat(5));
    CHECK(m.nnz() == 1);
    m.set(0, 0, Rat(0));
    CHECK(m.nnz() == 0);
    CHECK(m.is_zero());
    CHECK(m.at(0, 0) == Rat(0));
    CHECK(m.at(1, 1) == Rat(0));
}

TEST_CASE("arithmetic against hand results") {
    RatMatrix a = from_rows({{1, 2}, {3, 4}});
    RatMatrix b = from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
    CHECK(a + b == from_rows({{1, 3}, {4, 4}}));
    CHECK(a - b == from_rows({{1, 1}, {2, 4}}));
    CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
    CHECK(RatMatrix::identity(2) * a == a);
    CHECK(a.apply(RatVec{Rat(1), Rat(1)}) == RatVec{Rat(3), Rat(7)});
    CHECK(a.apply_transposed(RatVec{Rat(1), Rat(1)}) == RatVec{Rat(4), Rat(6)});
}

TEST_CASE("rank of fixed matrices") {
    CHECK(RatMatrix(3, 4).rank() == 0);
    CHECK(RatMatrix::identity(5).rank() == 5);
    CHECK(from_rows({{1, 2}, {2, 4}}).rank() == 1);
    CHECK(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).rank() == 2);
    // rank 3: three independent rows plus their sums
    RatMatrix m = from_rows({{1, 0, 0, 2, 1},
                             {0, 1, 0, 3, 0},
                             {0, 0, 1, 0, 5},
                             {1, 1, 0, 5, 1},
                             {1, 1, 1, 5, 6}});
    CHECK(m.rank() == 3);
}

TEST_CASE("rank agrees with a naive oracle on random rational matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + (int)(rng() % 6), c = 1 + (int)(rng() % 6);
        RatMatrix m = random_matrix(r, c, rng);
        CAPTURE(trial);
        CHECK(m.rank() == naive_rank(m));
        CHECK(m.rank() == m.transpose().rank());
    }
}

TEST_CASE("kernel basis spans the kernel") {
    RatMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}});
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) CHECK(vec_is_zero(m.apply(v)));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix a = random_matrix(3 + (int)(rng() % 3), 4 + (int)(rng() % 3), rng);
        auto basis = a.kernel_basis();
        CHECK((int)basis.size() == a.cols() - a.rank());
        for (const auto& v : basis) CHECK(vec_is_zero(a.apply(v)));
        // independence: stack the kernel vectors and check full rank
        if (!basis.empty()) {
            RatMatrix k((int)basis.size(), a.cols());
            for (int i = 0; i < (int)basis.size(); ++i)
                for (int j = 0; j < a.cols(); ++j) k.set(i, j, basis[i][j]);
            CHECK(k.rank() == (int)basis.size());
        }
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    RatMatrix a = from_rows({{2, 1}, {1, 3}});
    auto x = a.solve(RatVec{Rat(5), Rat(10)});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == RatVec{Rat(5), Rat(10)});
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(3));

    RatMatrix s = from_rows({{1, 1}, {1, 1}});
    CHECK_FALSE(s.solve(RatVec{Rat(1), Rat(2)}).has_value());
    CHECK(s.solve(RatVec{Rat(2), Rat(2)}).has_value());

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix m = random_matrix(4, 3, rng);
        RatVec y{Rat(1), Rat(-2), Rat(3)};
        RatVec b = m.apply(y);
        auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("solve_in_image on symmetric systems") {
    // S = A^T A is symmetric with the same kernel as A
    RatMatrix a = from_rows({{1, 1, 0}, {0, 1, 1}});
    RatMatrix s = a.transpose() * a;

    RatVec in = s.apply(RatVec{Rat(2), Rat(0), Rat(-1)});
    RatVec x = solve_in_image(s, in);
    CHECK(s.apply(x) == in);
    // orthogonality to the kernel
    for (const auto& k : s.kernel_basis()) CHECK(dot(x, k) == Rat(0));

    RatVec outside{Rat(1), Rat(1), Rat(1)};
    bool in_image = s.solve(outside).has_value();
    if (!in_image) CHECK_THROWS_AS(solve_in_image(s, outside), std::domain_error);

    RatMatrix ns = from_rows({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(solve_in_image(ns, RatVec{Rat(0), Rat(0)}), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        RatMatrix m = random_matrix(3, 4, rng);
        RatMatrix g = m.transpose() * m;
        RatVec z{Rat(1), Rat(2), Rat(0), Rat(-1)};
        RatVec b = g.apply(z);
        RatVec sol = solve_in_image(g, b);
        CHECK(g.apply(sol) == b);
        for (const auto& k : g.kernel_basis()) CHECK(dot(sol, k) == Rat(0));
    }
}
