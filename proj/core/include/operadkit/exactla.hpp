#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "operadkit/rational.hpp"

namespace operadkit {

using VectorQ = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static MatrixQ identity(std::size_t n);
    static MatrixQ from_rows(std::size_t cols, const std::vector<VectorQ>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    VectorQ row_vector(std::size_t r) const;

    void append_row(std::span<const Rational> values);
    MatrixQ transpose() const;

    friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
    friend bool operator==(const MatrixQ& a, const MatrixQ& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const MatrixQ& m);

struct RrefResult {
    MatrixQ matrix;                   // same shape as the input, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Unique reduced row-echelon form (pivots normalized to 1).
RrefResult rref(MatrixQ m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<VectorQ> kernel(const MatrixQ& m);

/// A linear subspace of Q^ambient held as its reduced row-echelon basis.
///
/// The echelon form is canonical, so two subspaces are equal exactly when
/// their basis grids are identical.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<VectorQ>& vectors);
    static Subspace span(const MatrixQ& rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const MatrixQ& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v modulo this subspace, on the non-pivot columns.
    VectorQ reduce(std::span<const Rational> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    MatrixQ basis_;
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// {y : y^T form x = 0 for every x in s}. form has one row per dual
/// coordinate and one column per coordinate of s's ambient space. With
/// strict set, a singular form raises ErrorKind::Degenerate.
Subspace orth_complement(const Subspace& s, const MatrixQ& form, bool strict = false);

/// Image of s under the linear map x -> map * x.
Subspace image(const MatrixQ& map, const Subspace& s);

// ---------------------------------------------------------------------------
// Sparse machinery for the large saturation computations.

/// Sorted (column, nonzero value) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(std::span<const Rational> dense);
VectorQ to_dense(const SparseVector& v, std::size_t size);

/// Incrementally maintained reduced row-echelon basis with sparse rows.
///
/// Every row has its pivot as its leading entry and no row has a nonzero in
/// another row's pivot column, so the finished basis is the unique RREF of
/// the span regardless of insertion order.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t ncols);

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Adds v to the span; returns false when v was already in it.
    bool insert(const SparseVector& v);

    /// v reduced against the current basis (support avoids all pivots).
    SparseVector reduce(const SparseVector& v) const;

    bool is_pivot(std::size_t col) const { return pivot_row_[col] != kNone; }

    /// Rows ordered by pivot column.
    std::vector<SparseVector> rows_by_pivot() const;

    /// Non-pivot columns in increasing order.
    std::vector<std::size_t> free_columns() const;

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    SparseVector reduce_into_scratch(const SparseVector& v) const;

    std::size_t ncols_;
    std::vector<SparseVector> rows_;
    std::vector<std::size_t> pivot_row_;
    std::vector<std::vector<std::size_t>> col_rows_;  // rows that may hold the column
    mutable std::vector<Rational> scratch_;
    mutable std::vector<char> touched_;
};

}  // namespace operadkit
