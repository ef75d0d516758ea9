#ifndef PSTRATA_LINALG_HPP
#define PSTRATA_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "pstrata/field.hpp"

namespace pstrata {

// Dense matrix over an exact field. Elimination pivots on "nonzero", which
// is all an unordered field offers; no magnitudes anywhere.
class Mat {
  public:
    Mat() = default;
    Mat(FieldPtr field, int rows, int cols);
    static Mat identity(const FieldPtr& f, int n);
    static Mat from_rows(const FieldPtr& f, std::vector<std::vector<FieldElem>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    const FieldElem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    FieldElem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const FieldElem& c) const;
    Mat transpose() const;

    std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;

    bool operator==(const Mat& o) const;
    bool is_identity() const;
    bool is_zero() const;

    int rank() const;
    FieldElem det() const; // square only
    std::optional<Mat> inverse() const;

    // reduced row echelon form; returns pivot column indices
    std::vector<int> rref_in_place();

    // basis of the right kernel {v : Av = 0}
    std::vector<std::vector<FieldElem>> kernel_basis() const;

    // one solution of Ax = b, if consistent
    std::optional<std::vector<FieldElem>> solve(const std::vector<FieldElem>& b) const;

    // canonical encoding (deterministic ordering / hashing of group elements)
    std::string key() const;

  private:
    FieldPtr field_;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;
};

// Incremental row-space tracker: feed vectors, keeps an echelonized basis.
// Used for spans, independence tests and quotient dimensions.
class RowSpan {
  public:
    RowSpan(FieldPtr field, int dim);

    // reduce v against the basis; if a nonzero residue remains, add it and
    // return true (v was independent)
    bool add(std::vector<FieldElem> v);
    // residue of v modulo the current span (not added)
    std::vector<FieldElem> reduce(const std::vector<FieldElem>& v) const;
    bool contains(const std::vector<FieldElem>& v) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return dim_; }
    const std::vector<std::vector<FieldElem>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

  private:
    FieldPtr field_;
    int dim_;
    std::vector<std::vector<FieldElem>> rows_; // echelon, pivot-normalized
    std::vector<int> pivots_;
};

} // namespace pstrata

#endif
