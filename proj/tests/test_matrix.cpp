#include <doctest.h>

#include <vector>

#include "feec/matrix.hpp"
#include "feec/prng.hpp"

using namespace feec;

namespace {

// Reference elimination: plain rational Gauss-Jordan, written independently
// of the fraction-free implementation under test.
struct Rref {
    std::vector<std::vector<Rational>> m;
    std::vector<int> pivots;
};

Rref rref_oracle(const ExactMatrix& a) {
    Rref out;
    out.m.assign(static_cast<std::size_t>(a.rows()),
                 std::vector<Rational>(static_cast<std::size_t>(a.cols()), Rational(0)));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.m[i][j] = a.at(i, j);
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int p = -1;
        for (int i = row; i < a.rows(); ++i)
            if (out.m[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(out.m[p], out.m[row]);
        const Rational inv = out.m[row][col];
        for (auto& x : out.m[row]) x /= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || out.m[i][col] == 0) continue;
            const Rational f = out.m[i][col];
            for (int j = 0; j < a.cols(); ++j) out.m[i][j] -= f * out.m[row][j];
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

Rational det_oracle(const ExactMatrix& a) {
    // Cofactor expansion; only for tiny matrices.
    const int n = a.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return a.at(0, 0);
    Rational det(0);
    for (int j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        ExactMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = a.at(i, c);
            }
        }
        const Rational cof = det_oracle(minor);
        det += ((j % 2 == 0) ? a.at(0, j) : -a.at(0, j)) * cof;
    }
    return det;
}

ExactMatrix random_matrix(SeededRng& rng, int rows, int cols) {
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (rng.uniform(0, 3) != 0) m.at(i, j) = rng.rational(5, 4);
    return m;
}

} // namespace

TEST_CASE("rank and determinant against oracles") {
    SeededRng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = rng.uniform(1, 5);
        const int cols = rng.uniform(1, 5);
        ExactMatrix m = random_matrix(rng, rows, cols);
        CHECK(m.rank() == static_cast<int>(rref_oracle(m).pivots.size()));
        if (rows == cols) CHECK(m.determinant() == det_oracle(m));
    }
    CHECK(ExactMatrix(0, 0).determinant() == 1);
    CHECK(ExactMatrix(3, 4).rank() == 0);
    CHECK_THROWS_AS(ExactMatrix(2, 3).determinant(), NotSquare);
}

TEST_CASE("nullspace vectors annihilate and span the kernel") {
    SeededRng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = rng.uniform(1, 5);
        const int cols = rng.uniform(1, 6);
        ExactMatrix m = random_matrix(rng, rows, cols);
        const auto ns = m.nullspace();
        CHECK(static_cast<int>(ns.size()) == cols - m.rank());
        for (const auto& v : ns) {
            const auto y = m.apply(v);
            for (const auto& e : y) CHECK(e == 0);
        }
        // The vectors are independent: stack them and check rank.
        if (!ns.empty()) {
            ExactMatrix stacked(static_cast<int>(ns.size()), cols);
            for (int i = 0; i < stacked.rows(); ++i)
                for (int j = 0; j < cols; ++j) stacked.at(i, j) = ns[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            CHECK(stacked.rank() == stacked.rows());
        }
    }
}

TEST_CASE("solve") {
    SeededRng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = rng.uniform(1, 5);
        const int cols = rng.uniform(1, 5);
        ExactMatrix m = random_matrix(rng, rows, cols);
        // Build a consistent rhs from a random x; check the residual.
        std::vector<Rational> x;
        for (int j = 0; j < cols; ++j) x.push_back(rng.rational(3, 3));
        const auto b = m.apply(x);
        const auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }

    // An inconsistent system is detected.
    ExactMatrix m(2, 1);
    m.at(0, 0) = 1;
    m.at(1, 0) = 1;
    CHECK_FALSE(m.solve({Rational(1), Rational(2)}).has_value());
    CHECK(m.solve({Rational(3), Rational(3)}).value() == std::vector<Rational>{Rational(3)});
}
