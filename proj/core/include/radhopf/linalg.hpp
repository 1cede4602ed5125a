#pragma once

#include "radhopf/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace radhopf {

using QVec = std::vector<Rat>;

bool is_zero(const QVec& v);

/// Dense row-major rational matrix.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t size);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVec row(std::size_t r) const;
    QVec column(std::size_t c) const;
    /// Row-major flattening, used to compare endomorphisms as vectors.
    const QVec& flat() const { return data_; }

    QVec apply(const QVec& v) const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rat& s, const QMatrix& m);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    QVec data_;
};

/// Incrementally maintained echelon basis of a subspace of Q^dim.
///
/// Rows are stored with unit pivots; a row added later has zeros in every
/// earlier pivot column, so reduction in insertion order is exact.
class EchelonBasis {
  public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the basis; returns the residual.
    QVec reduce(QVec v) const;
    bool contains(const QVec& v) const { return is_zero(reduce(v)); }
    /// Adds v to the span. Returns true when v was independent.
    bool insert(QVec v);

  private:
    std::size_t dim_;
    std::vector<QVec> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<QVec>& vectors, std::size_t dim);

/// Basis of {x : A x = 0}, computed by exact Gauss-Jordan elimination.
std::vector<QVec> kernel(QMatrix a);

/// Stacks several matrices with equal column count vertically.
QMatrix vstack(const std::vector<QMatrix>& blocks);

/// Solves A x = b for square invertible A; nullopt when A is singular.
std::optional<QVec> solve(QMatrix a, QVec b);

/// True when span(a) == span(b), by exact rank of the union.
bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b, std::size_t dim);

/// Coefficients x with sum_k x_k basis[k] = v; basis must be independent.
/// nullopt when v is outside the span.
std::optional<QVec> coordinates(const std::vector<QVec>& basis, const QVec& v);

}  // namespace radhopf
