#include "chainlls/matrix.hpp"

#include <sstream>

namespace chainlls {

RowVec zero_vec(const Field& f, std::size_t n) {
    return RowVec(n, Scalar::zero(f));
}

RowVec add(const RowVec& a, const RowVec& b) {
    if (a.size() != b.size()) throw InternalError("vector size mismatch in add");
    RowVec out(a);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
    return out;
}

RowVec sub(const RowVec& a, const RowVec& b) {
    if (a.size() != b.size()) throw InternalError("vector size mismatch in sub");
    RowVec out(a);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] -= b[k];
    return out;
}

RowVec scale(const Scalar& c, const RowVec& v) {
    RowVec out(v);
    for (auto& x : out) x *= c;
    return out;
}

bool is_zero_vec(const RowVec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<RowVec>& rows,
                         std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw InternalError("row length mismatch in from_rows");
        }
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw InternalError("matrix index out of range");
    return e_[index(r, c)];
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw InternalError("matrix index out of range");
    return e_[index(r, c)];
}

RowVec Matrix::row(std::size_t r) const {
    RowVec out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix shape mismatch in product");
    Matrix out(f_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                out.at(r, c) += a * o.at(k, c);
            }
        }
    }
    return out;
}

RowVec Matrix::apply(const RowVec& v) const {
    if (v.size() != cols_) throw InternalError("vector length mismatch in apply");
    RowVec out = zero_vec(f_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols_ != bottom.cols_) throw InternalError("vstack width mismatch");
    Matrix out(top.f_, top.rows_ + bottom.rows_, top.cols_);
    for (std::size_t r = 0; r < top.rows_; ++r) {
        for (std::size_t c = 0; c < top.cols_; ++c) out.at(r, c) = top.at(r, c);
    }
    for (std::size_t r = 0; r < bottom.rows_; ++r) {
        for (std::size_t c = 0; c < top.cols_; ++c) {
            out.at(top.rows_ + r, c) = bottom.at(r, c);
        }
    }
    return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    if (left.rows_ != right.rows_) throw InternalError("hstack height mismatch");
    Matrix out(left.f_, left.rows_, left.cols_ + right.cols_);
    for (std::size_t r = 0; r < left.rows_; ++r) {
        for (std::size_t c = 0; c < left.cols_; ++c) out.at(r, c) = left.at(r, c);
        for (std::size_t c = 0; c < right.cols_; ++c) {
            out.at(r, left.cols_ + c) = right.at(r, c);
        }
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && e_ == o.e_;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    std::vector<RowVec> work;
    work.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) work.push_back(row(r));

    std::vector<std::size_t> pivot_cols;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols_ && next_row < work.size(); ++col) {
        std::size_t sel = next_row;
        while (sel < work.size() && work[sel][col].is_zero()) ++sel;
        if (sel == work.size()) continue;
        std::swap(work[next_row], work[sel]);
        const Scalar inv = work[next_row][col].inverse();
        work[next_row] = scale(inv, work[next_row]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r == next_row || work[r][col].is_zero()) continue;
            work[r] = sub(work[r], scale(work[r][col], work[next_row]));
        }
        pivot_cols.push_back(col);
        ++next_row;
    }

    Matrix out(f_, pivot_cols.size(), cols_);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = work[r][c];
    }
    if (pivots != nullptr) *pivots = pivot_cols;
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0) os << " ";
            os << at(r, c).str();
        }
        os << "]";
        if (r + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

}  // namespace chainlls
