#include "pstrata/linalg.hpp"

#include <algorithm>

namespace pstrata {

Mat::Mat(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, FieldElem::zero(field_)) {}

Mat Mat::identity(const FieldPtr& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(f);
    return m;
}

Mat Mat::from_rows(const FieldPtr& f, std::vector<std::vector<FieldElem>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw Error(ErrCode::dimension_mismatch, "ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrCode::dimension_mismatch, "matrix addition shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrCode::dimension_mismatch, "matrix subtraction shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_)
        throw Error(ErrCode::dimension_mismatch, "matrix product shape mismatch");
    Mat r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElem& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const FieldElem& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Mat Mat::scaled(const FieldElem& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

Mat Mat::transpose() const {
    Mat r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<FieldElem> Mat::apply(const std::vector<FieldElem>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw Error(ErrCode::dimension_mismatch, "matrix-vector shape mismatch");
    std::vector<FieldElem> r(rows_, FieldElem::zero(field_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<int> Mat::rref_in_place() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (!at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        FieldElem inv = at(r, c).inverse();
        for (int j = c; j < cols_; ++j) at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            FieldElem f = at(i, c);
            for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Mat::rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref_in_place().size());
}

FieldElem Mat::det() const {
    if (rows_ != cols_) throw Error(ErrCode::dimension_mismatch, "determinant of non-square matrix");
    Mat m = *this;
    FieldElem d = FieldElem::one(field_);
    for (int c = 0; c < cols_; ++c) {
        int p = -1;
        for (int i = c; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) return FieldElem::zero(field_);
        if (p != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        FieldElem inv = m.at(c, c).inverse();
        for (int i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            FieldElem f = m.at(i, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) throw Error(ErrCode::dimension_mismatch, "inverse of non-square matrix");
    Mat aug(field_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = FieldElem::one(field_);
    }
    auto piv = aug.rref_in_place();
    if (static_cast<int>(piv.size()) != rows_) return std::nullopt;
    for (int k = 0; k < rows_; ++k)
        if (piv[k] != k) return std::nullopt;
    Mat inv(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::vector<std::vector<FieldElem>> Mat::kernel_basis() const {
    Mat m = *this;
    auto piv = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<FieldElem> v(cols_, FieldElem::zero(field_));
        v[c] = FieldElem::one(field_);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m.at(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldElem>> Mat::solve(const std::vector<FieldElem>& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw Error(ErrCode::dimension_mismatch, "rhs length mismatch");
    Mat aug(field_, rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto piv = aug.rref_in_place();
    for (int c : piv)
        if (c == cols_) return std::nullopt; // inconsistent
    std::vector<FieldElem> x(cols_, FieldElem::zero(field_));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
}

std::string Mat::key() const {
    std::string k = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
    for (const auto& x : a_) k += x.key() + ";";
    return k;
}

// ---- RowSpan

RowSpan::RowSpan(FieldPtr field, int dim) : field_(std::move(field)), dim_(dim) {}

std::vector<FieldElem> RowSpan::reduce(const std::vector<FieldElem>& v) const {
    std::vector<FieldElem> w = v;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const FieldElem& c = w[pivots_[r]];
        if (c.is_zero()) continue;
        FieldElem f = c; // rows are pivot-normalized
        for (int j = 0; j < dim_; ++j)
            if (!rows_[r][j].is_zero()) w[j] -= f * rows_[r][j];
    }
    return w;
}

bool RowSpan::contains(const std::vector<FieldElem>& v) const {
    auto w = reduce(v);
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool RowSpan::add(std::vector<FieldElem> v) {
    if (static_cast<int>(v.size()) != dim_)
        throw Error(ErrCode::dimension_mismatch, "RowSpan vector length mismatch");
    std::vector<FieldElem> w = reduce(v);
    int p = -1;
    for (int j = 0; j < dim_; ++j)
        if (!w[j].is_zero()) { p = j; break; }
    if (p < 0) return false;
    FieldElem inv = w[p].inverse();
    for (int j = 0; j < dim_; ++j) w[j] *= inv;
    // back-reduce existing rows for a unique reduced basis
    for (size_t r = 0; r < rows_.size(); ++r) {
        const FieldElem& c = rows_[r][p];
        if (c.is_zero()) continue;
        FieldElem f = c;
        for (int j = 0; j < dim_; ++j)
            if (!w[j].is_zero()) rows_[r][j] -= f * w[j];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
}

} // namespace pstrata
