#include "hullcensus/matrix.hpp"

#include <stdexcept>

namespace hullcensus {

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) {
            int v = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v < 0 || v >= field.q())
                throw std::invalid_argument("entry out of field range");
            m.set(i, j, static_cast<Field::Elem>(v));
        }
    }
    return m;
}

std::string Matrix::hex_packed() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(a_.size());
    for (Field::Elem v : a_)
        s.push_back(digits[v & 0xf]);
    return s;
}

int rref_in_place(Matrix& m, std::vector<int>* pivots) {
    const Field& f = m.field();
    const int rows = m.rows();
    const int cols = m.cols();
    if (pivots)
        pivots->clear();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != r)
            for (int j = c; j < cols; ++j) {
                Field::Elem tmp = m.at(r, j);
                m.set(r, j, m.at(pivot, j));
                m.set(pivot, j, tmp);
            }
        Field::Elem lead = m.at(r, c);
        if (lead != 1) {
            Field::Elem s = f.inv(lead);
            for (int j = c; j < cols; ++j)
                m.set(r, j, f.mul(m.at(r, j), s));
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            Field::Elem factor = m.at(i, c);
            if (factor == 0)
                continue;
            for (int j = c; j < cols; ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
        }
        if (pivots)
            pivots->push_back(c);
        ++r;
    }
    return r;
}

RrefResult rref(const Matrix& m) {
    Matrix work = m;
    std::vector<int> pivots;
    int rk = rref_in_place(work, &pivots);
    return RrefResult{std::move(work), rk, std::move(pivots)};
}

int rank(const Matrix& m) {
    Matrix work = m;
    return rref_in_place(work);
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.field(), m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            t.set(c, r, m.at(r, c));
    return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("dimension mismatch");
    const Field& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Field::Elem acc = 0;
            for (int k = 0; k < a.cols(); ++k)
                acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
            out.set(i, j, acc);
        }
    return out;
}

Matrix gram(const Matrix& a) {
    const Field& f = a.field();
    Matrix out(f, a.rows(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i; j < a.rows(); ++j) {
            Field::Elem acc = 0;
            for (int k = 0; k < a.cols(); ++k)
                acc = f.add(acc, f.mul(a.at(i, k), a.at(j, k)));
            out.set(i, j, acc);
            out.set(j, i, acc);
        }
    return out;
}

Matrix null_space(const Matrix& m) {
    const Field& f = m.field();
    const int n = m.cols();
    RrefResult red = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : red.pivot_columns)
        is_pivot[static_cast<size_t>(c)] = true;

    Matrix basis(f, n - red.rank, n);
    int row = 0;
    for (int freec = 0; freec < n; ++freec) {
        if (is_pivot[static_cast<size_t>(freec)])
            continue;
        basis.set(row, freec, 1);
        for (int i = 0; i < red.rank; ++i)
            basis.set(row, red.pivot_columns[static_cast<size_t>(i)], f.neg(red.matrix.at(i, freec)));
        ++row;
    }
    rref_in_place(basis);
    return basis;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("width mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            out.set(r, c, a.at(r, c));
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
            out.set(a.rows() + r, c, b.at(r, c));
    return out;
}

int row_space_intersection_dim(const Matrix& a, const Matrix& b) {
    return rank(a) + rank(b) - rank(stack(a, b));
}

} // namespace hullcensus
