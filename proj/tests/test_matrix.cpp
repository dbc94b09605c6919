#include "hullcensus/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace hullcensus;

namespace {

Matrix random_matrix(const Field& f, int rows, int cols, std::mt19937& rng) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<int> dist(0, f.q() - 1);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.set(r, c, static_cast<Field::Elem>(dist(rng)));
    return m;
}

// Random invertible row mixing preserves the row space.
Matrix random_row_mix(const Matrix& m, std::mt19937& rng) {
    const Field& f = m.field();
    Matrix out = m;
    std::uniform_int_distribution<int> row_dist(0, m.rows() - 1);
    std::uniform_int_distribution<int> coef_dist(1, f.q() - 1);
    for (int step = 0; step < 4 * m.rows(); ++step) {
        int i = row_dist(rng);
        int j = row_dist(rng);
        if (i == j)
            continue;
        Field::Elem c = static_cast<Field::Elem>(coef_dist(rng));
        for (int col = 0; col < m.cols(); ++col)
            out.set(i, col, f.add(out.at(i, col), f.mul(c, out.at(j, col))));
    }
    return out;
}

} // namespace

TEST_CASE("rref of the identity is itself") {
    Field f = make_field(2, 1);
    Matrix id = Matrix::from_rows(f, {{1, 0}, {0, 1}});
    RrefResult r = rref(id);
    CHECK(r.matrix == id);
    CHECK(r.rank == 2);
    CHECK(r.pivot_columns == std::vector<int>{0, 1});
}

TEST_CASE("dependent binary rows reduce away") {
    Field f = make_field(2, 1);
    Matrix m = Matrix::from_rows(f, {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}});
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.matrix.at(0, 0) == 1);
    CHECK(r.matrix.at(0, 1) == 1);
    CHECK(r.matrix.at(1, 2) == 1);
    CHECK(r.matrix.at(1, 3) == 1);
    for (int c = 0; c < 4; ++c)
        CHECK(r.matrix.at(2, c) == 0);
}

TEST_CASE("proportional ternary rows have rank 1") {
    Field f = make_field(3, 1);
    Matrix m = Matrix::from_rows(f, {{1, 2}, {2, 1}}); // second row = 2 * first
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.matrix.at(0, 0) == 1);
    CHECK(r.matrix.at(0, 1) == 2);
}

TEST_CASE("rref invariants on random matrices") {
    std::mt19937 rng(20240811);
    for (long q : {2, 3, 4, 5}) {
        const Field& f = field_for_order(static_cast<int>(q));
        for (int trial = 0; trial < 200; ++trial) {
            Matrix m = random_matrix(f, 3, 6, rng);
            RrefResult r = rref(m);
            // pivots are unit columns with strictly increasing positions
            for (size_t i = 0; i < r.pivot_columns.size(); ++i) {
                int c = r.pivot_columns[i];
                if (i > 0)
                    CHECK(c > r.pivot_columns[i - 1]);
                for (int row = 0; row < r.matrix.rows(); ++row)
                    CHECK(r.matrix.at(row, c) == (row == static_cast<int>(i) ? 1 : 0));
            }
            // idempotence and row-space invariance under row mixing
            CHECK(rref(r.matrix).matrix == r.matrix);
            CHECK(rref(random_row_mix(m, rng)).matrix == r.matrix);
        }
    }
}

TEST_CASE("null space is the right-kernel basis") {
    std::mt19937 rng(7);
    for (long q : {2, 3, 5}) {
        const Field& f = field_for_order(static_cast<int>(q));
        for (int trial = 0; trial < 100; ++trial) {
            Matrix m = random_matrix(f, 3, 5, rng);
            Matrix ns = null_space(m);
            CHECK(ns.rows() == 5 - rank(m));
            Matrix prod = matmul(m, transpose(ns));
            for (int r = 0; r < prod.rows(); ++r)
                for (int c = 0; c < prod.cols(); ++c)
                    CHECK(prod.at(r, c) == 0);
        }
    }
}

TEST_CASE("row space intersection dimension") {
    Field f = make_field(2, 1);
    Matrix a = Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}});
    Matrix b = Matrix::from_rows(f, {{0, 1, 0}, {0, 0, 1}});
    CHECK(row_space_intersection_dim(a, b) == 1);
    CHECK(row_space_intersection_dim(a, a) == 2);
}
