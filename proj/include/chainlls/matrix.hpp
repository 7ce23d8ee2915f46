// Dense exact matrices and row vectors over a runtime-selected field.
#pragma once

#include <cstddef>
#include <vector>

#include "chainlls/scalar.hpp"

namespace chainlls {

using RowVec = std::vector<Scalar>;

RowVec zero_vec(const Field& f, std::size_t n);
RowVec add(const RowVec& a, const RowVec& b);
RowVec sub(const RowVec& a, const RowVec& b);
RowVec scale(const Scalar& c, const RowVec& v);
bool is_zero_vec(const RowVec& v);

class Matrix {
  public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<RowVec>& rows,
                            std::size_t cols);

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c);
    const Scalar& at(std::size_t r, std::size_t c) const;
    RowVec row(std::size_t r) const;

    Matrix operator*(const Matrix& o) const;
    // Applies the matrix to a coordinate vector: result = M * v.
    RowVec apply(const RowVec& v) const;
    Matrix transpose() const;
    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix hstack(const Matrix& left, const Matrix& right);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // Canonical reduced row-echelon form with zero rows dropped. Pivot
    // selection scans columns left to right and takes the first nonzero
    // entry, so the result is unique for a given row space. If `pivots`
    // is given it receives the pivot column of each returned row.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;

    std::string str() const;

  private:
    std::size_t index(std::size_t r, std::size_t c) const { return r * cols_ + c; }

    Field f_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

}  // namespace chainlls
