#include "tda/linalg.hpp"

#include <stdexcept>

namespace tda {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {
    if (!is_prime(p)) throw input_error("field characteristic must be prime");
}

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw input_error("matrix product shape/field mismatch");
    Matrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Fp a = at(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = (r.at(i, j) + std::uint64_t(a) * o.at(k, j)) % p_;
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw input_error("matrix sum shape/field mismatch");
    Matrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = (e_[i] + o.e_[i]) % p_;
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] ? p_ - e_[i] : 0;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (Fp v : e_)
        if (v) return false;
    return true;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.p_ != b.p_) throw input_error("hcat mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_, a.p_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_ || a.p_ != b.p_) throw input_error("vcat mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_, a.p_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    if (a.p_ != b.p_) throw input_error("block_diag field mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_, a.p_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
}

std::vector<Fp> Matrix::apply(const std::vector<Fp>& x) const {
    if (x.size() != cols_) throw input_error("matrix apply dimension mismatch");
    std::vector<Fp> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t(at(i, j)) * x[j] % p_;
        y[i] = acc % p_;
    }
    return y;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw input_error("submatrix out of range");
    Matrix s(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) s.at(i, j) = at(r0 + i, c0 + j);
    return s;
}

Fp Matrix::inv_scalar(Fp a) const {
    // Fermat; p is prime and small.
    Fp r = 1, b = a % p_;
    std::uint32_t e = p_ - 2;
    while (e) {
        if (e & 1) r = std::uint64_t(r) * b % p_;
        b = std::uint64_t(b) * b % p_;
        e >>= 1;
    }
    return r;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelonize(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::uint32_t p = m.field();
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Fp inv = m.inv_scalar(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) = std::uint64_t(m.at(row, j)) * inv % p;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Fp f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                std::uint64_t v = m.at(i, j) + std::uint64_t(p - f) * m.at(row, j);
                m.at(i, j) = v % p;
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Matrix& a) {
    Matrix m = a;
    return echelonize(m).size();
}

Matrix kernel_basis(const Matrix& a) {
    Matrix m = a;
    auto pivots = echelonize(m);
    const std::uint32_t p = m.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_cnt = a.cols() - pivots.size();
    Matrix basis(a.cols(), free_cnt, p);
    std::size_t k = 0;
    for (std::size_t fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        basis.at(fc, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            Fp v = m.at(r, fc);
            if (v) basis.at(pivots[r], k) = p - v;
        }
        ++k;
    }
    return basis;
}

std::optional<std::vector<Fp>> membership(const Matrix& a, const std::vector<Fp>& b) {
    if (b.size() != a.rows()) throw input_error("membership dimension mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i] % a.field();
    }
    auto pivots = echelonize(aug);
    std::vector<Fp> x(a.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols()) return std::nullopt;  // pivot in augmented column
        x[pivots[r]] = aug.at(r, a.cols());
    }
    return x;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.field() != b.field()) throw input_error("solve shape mismatch");
    Matrix x(a.cols(), b.cols(), a.field());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<Fp> col(b.rows());
        for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b.at(i, j);
        auto xi = membership(a, col);
        if (!xi) return std::nullopt;
        for (std::size_t i = 0; i < a.cols(); ++i) x.at(i, j) = (*xi)[i];
    }
    return x;
}

Matrix column_basis(const Matrix& a) {
    Matrix m = a;
    auto pivots = echelonize(m);
    Matrix b(a.rows(), pivots.size(), a.field());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) b.at(i, k) = a.at(i, pivots[k]);
    return b;
}

Matrix quotient_projection(const Matrix& r, std::size_t n, std::uint32_t p) {
    if (r.cols() != 0 && r.rows() != n) throw input_error("quotient_projection shape mismatch");
    // Column-echelonize R (= row echelon of R^T); pivot rows of the echelon
    // columns are eliminated, the remaining coordinates present the quotient.
    Matrix mt = r.cols() ? r.transpose() : Matrix(0, n, p);
    auto pivots = echelonize(mt);  // pivots are row indices of R
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t q = n - pivots.size();
    Matrix proj(q, n, p);
    // Reduce each e_i by the echelon rows of mt (columns of R), then keep
    // non-pivot coordinates.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Fp> v(n, 0);
        v[i] = 1;
        for (std::size_t rr = 0; rr < pivots.size(); ++rr) {
            Fp f = v[pivots[rr]];
            if (!f) continue;
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t t = v[j] + std::uint64_t(p - f) * mt.at(rr, j);
                v[j] = t % p;
            }
        }
        std::size_t k = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (is_pivot[j]) continue;
            proj.at(k, i) = v[j];
            ++k;
        }
    }
    return proj;
}

}  // namespace tda
