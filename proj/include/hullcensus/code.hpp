#ifndef HULLCENSUS_CODE_HPP
#define HULLCENSUS_CODE_HPP

#include "hullcensus/matrix.hpp"

namespace hullcensus {

/// A linear [n, k]_q code held by its unique RREF generator matrix, which
/// makes Code comparisons subspace comparisons. The zero code (k = 0) is
/// legal and has hull dimension 0.
class Code {
  public:
    /// Canonicalizes an arbitrary spanning set: RREF, zero rows dropped.
    static Code span(const Matrix& generators);

    static Code span_rows(const Field& field, const std::vector<std::vector<int>>& rows) {
        return span(Matrix::from_rows(field, rows));
    }

    static Code zero(const Field& field, int n) { return Code(Matrix(field, 0, n)); }
    static Code full(const Field& field, int n);

    const Matrix& generator() const { return gen_; }
    const Field& field() const { return gen_.field(); }
    int n() const { return gen_.cols(); }
    int k() const { return gen_.rows(); }

    bool operator==(const Code& o) const { return gen_ == o.gen_; }

  private:
    explicit Code(Matrix rref_gen) : gen_(std::move(rref_gen)) {}
    Matrix gen_;
};

/// The dual code under the Euclidean inner product; dual(dual(c)) == c.
Code dual_code(const Code& c);

/// dim(C /\ C-perp) via the Gram-rank identity k - rank(G G^T).
int hull_dimension(const Code& c);

/// Same quantity by explicitly intersecting the row space with the null
/// space; the independent verification path.
int hull_dimension_by_intersection(const Code& c);

/// Exact minimum Hamming weight over nonzero codewords (sweeps q^k - 1
/// messages; requires q^k <= 2^24 and k >= 1).
int min_distance(const Code& c);

/// min_distance of the dual code.
int dual_distance(const Code& c);

/// True iff the generator has an all-zero column (equivalent to d-perp = 1).
bool has_zero_column(const Matrix& generator);

/// Binary codes only: all codeword weights even. Throws for q != 2.
bool is_even(const Code& c);

/// C contained in its dual, i.e. hull dimension == k.
bool is_self_orthogonal(const Code& c);

/// Trivial hull.
bool is_lcd(const Code& c);

} // namespace hullcensus

#endif // HULLCENSUS_CODE_HPP
