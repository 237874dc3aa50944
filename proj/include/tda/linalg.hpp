#pragma once
// Dense linear algebra over GF(p).  Everything downstream (zigzag
// decomposition, homology of preimage graphs, Koszul complexes) reduces to
// rank / kernel / solve on small dense matrices, so that is all we provide.

#include <cstdint>
#include <optional>
#include <vector>

#include "tda/rational.hpp"

namespace tda {

using Fp = std::uint32_t;  // residue 0..p-1

bool is_prime(std::uint32_t p);

class Matrix {
public:
    Matrix() : rows_(0), cols_(0), p_(2) {}
    Matrix(std::size_t rows, std::size_t cols, std::uint32_t p);
    static Matrix identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t field() const { return p_; }

    Fp& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    Fp at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    bool is_zero() const;

    // Stack blocks: [A | B] and [A over B].
    static Matrix hcat(const Matrix& a, const Matrix& b);
    static Matrix vcat(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const Matrix& a, const Matrix& b);

    std::vector<Fp> apply(const std::vector<Fp>& x) const;

    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    Fp inv_scalar(Fp a) const;

private:
    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<Fp> e_;
};

std::size_t rank(const Matrix& a);

// Basis of the null space {x : Ax = 0}, returned as columns of a matrix
// with cols = dim ker.
Matrix kernel_basis(const Matrix& a);

// Coefficients x with Ax = b, or nullopt when b is outside the column space.
std::optional<std::vector<Fp>> membership(const Matrix& a, const std::vector<Fp>& b);

// Solve AX = B columnwise; nullopt if any column of B is outside im A.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Columns of A spanning im A (a column basis).
Matrix column_basis(const Matrix& a);

// Quotient of k^n by the column space of R: returns P (q x n) of full row
// rank with ker P = im R, so P is the projection onto the quotient in
// explicit coordinates.
Matrix quotient_projection(const Matrix& r, std::size_t n, std::uint32_t p);

}  // namespace tda
