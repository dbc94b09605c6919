#ifndef HULLCENSUS_MATRIX_HPP
#define HULLCENSUS_MATRIX_HPP

#include "hullcensus/field.hpp"

#include <string>
#include <vector>

namespace hullcensus {

/// Dense row-major matrix over a small finite field. Immutable in spirit:
/// operations return new matrices.
class Matrix {
  public:
    Matrix(Field field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

    /// Builds from explicit entries (row-major), validating entry < q.
    static Matrix from_rows(const Field& field, const std::vector<std::vector<int>>& rows);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Field::Elem at(int r, int c) const { return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }
    void set(int r, int c, Field::Elem v) { a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)] = v; }

    const std::vector<Field::Elem>& entries() const { return a_; }
    std::vector<Field::Elem>& entries() { return a_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    /// Entries packed one byte each, row-major; usable as a hash key.
    std::string packed() const { return std::string(a_.begin(), a_.end()); }

    /// Entries as hex digits, row-major (entry values < 16).
    std::string hex_packed() const;

  private:
    Field field_;
    int rows_;
    int cols_;
    std::vector<Field::Elem> a_;
};

struct RrefResult {
    Matrix matrix;
    int rank;
    std::vector<int> pivot_columns;
};

/// Unique reduced row echelon form; row space preserved.
RrefResult rref(const Matrix& m);

/// In-place reduction, reusing the argument's storage. Returns rank and
/// fills pivots. The hot path for orbit scans.
int rref_in_place(Matrix& m, std::vector<int>* pivots = nullptr);

int rank(const Matrix& m);

Matrix transpose(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);

/// a * a^T (the Gram matrix of the rows under the standard bilinear form).
Matrix gram(const Matrix& a);

/// Basis of { y : m y^T = 0 } as rows, in RREF. (n - rank) x n.
Matrix null_space(const Matrix& m);

/// Rows of a on top of rows of b (same width).
Matrix stack(const Matrix& a, const Matrix& b);

/// dim(rowspace(a) /\ rowspace(b)) = rank a + rank b - rank [a; b].
int row_space_intersection_dim(const Matrix& a, const Matrix& b);

} // namespace hullcensus

#endif // HULLCENSUS_MATRIX_HPP
