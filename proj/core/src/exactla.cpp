#include "operadkit/exactla.hpp"

#include <algorithm>
#include <ostream>

#include "operadkit/error.hpp"

namespace operadkit {

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatrixQ MatrixQ::from_rows(std::size_t cols, const std::vector<VectorQ>& rows) {
    MatrixQ m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

VectorQ MatrixQ::row_vector(std::size_t r) const {
    auto s = row(r);
    return VectorQ(s.begin(), s.end());
}

void MatrixQ::append_row(std::span<const Rational> values) {
    if (values.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    MatrixQ p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
        }
    return p;
}

bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const MatrixQ& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
        os << "]\n";
    }
    return os;
}

RrefResult rref(MatrixQ m) {
    RrefResult res;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t piv = lead_row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead_row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(piv, c), m(lead_row, c));
        Rational inv = Rational(1) / m(lead_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col).is_zero()) continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(lead_row, c).is_zero()) m(r, c).sub_mul(f, m(lead_row, c));
        }
        res.pivots.push_back(col);
        ++lead_row;
    }
    res.rank = lead_row;
    res.matrix = std::move(m);
    return res;
}

std::vector<VectorQ> kernel(const MatrixQ& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<VectorQ> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        VectorQ v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.matrix(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = MatrixQ(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = MatrixQ::identity(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
}

Subspace Subspace::span(const MatrixQ& rows) {
    RrefResult r = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = MatrixQ(0, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.append_row(r.matrix.row(i));
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<VectorQ>& vectors) {
    return span(MatrixQ::from_rows(ambient, vectors));
}

VectorQ Subspace::reduce(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector not in ambient space");
    VectorQ w(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Rational f = w[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!basis_(i, c).is_zero()) w[c].sub_mul(f, basis_(i, c));
    }
    return w;
}

bool Subspace::contains(std::span<const Rational> v) const {
    VectorQ w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](const Rational& q) { return q.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "ambient dimensions differ");
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw Error(ErrorKind::DimensionMismatch, "sum of subspaces with different ambient dimensions");
    MatrixQ m = a.basis();
    for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(b.basis().row(r));
    return Subspace::span(m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw Error(ErrorKind::DimensionMismatch, "intersection of subspaces with different ambient dimensions");
    const std::size_t n = a.ambient_dim(), ka = a.dim(), kb = b.dim();
    // columns: coefficients (alpha, beta) with alpha.A - beta.B = 0
    MatrixQ m(n, ka + kb);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < ka; ++i) m(c, i) = a.basis()(i, c);
        for (std::size_t j = 0; j < kb; ++j) m(c, ka + j) = -b.basis()(j, c);
    }
    std::vector<VectorQ> vecs;
    for (const auto& k : kernel(m)) {
        VectorQ v(n);
        for (std::size_t i = 0; i < ka; ++i) {
            if (k[i].is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (!a.basis()(i, c).is_zero()) v[c] += k[i] * a.basis()(i, c);
        }
        vecs.push_back(std::move(v));
    }
    return Subspace::span(n, vecs);
}

Subspace orth_complement(const Subspace& s, const MatrixQ& form, bool strict) {
    if (form.cols() != s.ambient_dim())
        throw Error(ErrorKind::DimensionMismatch, "form does not act on the subspace's ambient space");
    if (strict && (form.rows() != form.cols() || rref(form).rank != form.cols()))
        throw Error(ErrorKind::Degenerate, "pairing form is degenerate");
    // y^T F x = 0 for all basis x  <=>  (X F^T) y = 0
    MatrixQ constraints = s.basis() * form.transpose();
    return Subspace::span(form.rows(), kernel(constraints));
}

Subspace image(const MatrixQ& map, const Subspace& s) {
    if (map.cols() != s.ambient_dim())
        throw Error(ErrorKind::DimensionMismatch, "map does not act on the subspace's ambient space");
    MatrixQ rows = s.basis() * map.transpose();
    return Subspace::span(rows);
}

SparseVector to_sparse(std::span<const Rational> dense) {
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) v.emplace_back(i, dense[i]);
    return v;
}

VectorQ to_dense(const SparseVector& v, std::size_t size) {
    VectorQ d(size);
    for (const auto& [c, q] : v) d.at(c) = q;
    return d;
}

EchelonBuilder::EchelonBuilder(std::size_t ncols)
    : ncols_(ncols), pivot_row_(ncols, kNone), col_rows_(ncols), scratch_(ncols), touched_(ncols, 0) {}

SparseVector EchelonBuilder::reduce_into_scratch(const SparseVector& v) const {
    std::vector<std::size_t> support;
    support.reserve(v.size() * 4);
    for (const auto& [c, q] : v) {
        if (c >= ncols_) throw Error(ErrorKind::DimensionMismatch, "sparse vector exceeds column count");
        scratch_[c] = q;
        touched_[c] = 1;
        support.push_back(c);
    }
    // Rows are fully reduced, so subtracting one never creates another pivot entry.
    for (const auto& [c, q] : v) {
        std::size_t r = pivot_row_[c];
        if (r == kNone) continue;
        Rational f = scratch_[c];
        if (f.is_zero()) continue;
        for (const auto& [c2, b] : rows_[r]) {
            if (!touched_[c2]) {
                touched_[c2] = 1;
                support.push_back(c2);
            }
            scratch_[c2].sub_mul(f, b);
        }
    }
    std::sort(support.begin(), support.end());
    SparseVector out;
    for (auto c : support) {
        if (!scratch_[c].is_zero()) out.emplace_back(c, std::move(scratch_[c]));
        scratch_[c] = Rational();
        touched_[c] = 0;
    }
    return out;
}

SparseVector EchelonBuilder::reduce(const SparseVector& v) const { return reduce_into_scratch(v); }

bool EchelonBuilder::insert(const SparseVector& v) {
    SparseVector w = reduce_into_scratch(v);
    if (w.empty()) return false;
    const std::size_t p = w.front().first;
    Rational inv = Rational(1) / w.front().second;
    if (!inv.is_one())
        for (auto& [c, q] : w) q *= inv;

    // clear column p from every row that holds it
    for (std::size_t r : col_rows_[p]) {
        SparseVector& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), p,
                                   [](const auto& e, std::size_t col) { return e.first < col; });
        if (it == row.end() || it->first != p) continue;
        Rational f = it->second;
        SparseVector merged;
        merged.reserve(row.size() + w.size());
        auto a = row.begin();
        auto b = w.begin();
        while (a != row.end() || b != w.end()) {
            if (b == w.end() || (a != row.end() && a->first < b->first)) {
                merged.push_back(std::move(*a));
                ++a;
            } else if (a == row.end() || b->first < a->first) {
                Rational val = -(f * b->second);
                col_rows_[b->first].push_back(r);
                merged.emplace_back(b->first, std::move(val));
                ++b;
            } else {
                Rational val = std::move(a->second);
                val.sub_mul(f, b->second);
                if (!val.is_zero()) merged.emplace_back(a->first, std::move(val));
                ++a;
                ++b;
            }
        }
        row = std::move(merged);
    }
    col_rows_[p].clear();
    col_rows_[p].shrink_to_fit();

    const std::size_t id = rows_.size();
    for (std::size_t i = 1; i < w.size(); ++i) col_rows_[w[i].first].push_back(id);
    pivot_row_[p] = id;
    rows_.push_back(std::move(w));
    return true;
}

std::vector<SparseVector> EchelonBuilder::rows_by_pivot() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (std::size_t c = 0; c < ncols_; ++c)
        if (pivot_row_[c] != kNone) out.push_back(rows_[pivot_row_[c]]);
    return out;
}

std::vector<std::size_t> EchelonBuilder::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ncols_; ++c)
        if (pivot_row_[c] == kNone) out.push_back(c);
    return out;
}

}  // namespace operadkit
