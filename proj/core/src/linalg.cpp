#include "radhopf/linalg.hpp"

#include <algorithm>

namespace radhopf {

bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

QMatrix QMatrix::identity(std::size_t size) {
    QMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

QVec QMatrix::row(std::size_t r) const {
    return QVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QVec QMatrix::column(std::size_t c) const {
    QVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

QVec QMatrix::apply(const QVec& v) const {
    if (v.size() != cols_) throw InvalidArgument("matrix-vector size mismatch");
    QVec out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(v[c]) == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rat& m = (*this)(r, c);
            if (sgn(m) != 0) out[r] += m * v[c];
        }
    }
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product size mismatch");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rat& y = b(k, j);
                if (sgn(y) != 0) out(i, j) += x * y;
            }
        }
    }
    return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum size mismatch");
    QMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix difference size mismatch");
    QMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

QMatrix operator*(const Rat& s, const QMatrix& m) {
    QMatrix out = m;
    for (auto& x : out.data_) x *= s;
    return out;
}

QVec EchelonBasis::reduce(QVec v) const {
    if (v.size() != dim_) throw InvalidArgument("vector dimension mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t pc = pivots_[k];
        if (sgn(v[pc]) == 0) continue;
        const Rat factor = v[pc];
        const QVec& row = rows_[k];
        for (std::size_t c = pc; c < dim_; ++c) {
            if (sgn(row[c]) != 0) v[c] -= factor * row[c];
        }
    }
    return v;
}

bool EchelonBasis::insert(QVec v) {
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](const Rat& x) { return sgn(x) != 0; });
    if (it == v.end()) return false;
    const auto pc = static_cast<std::size_t>(it - v.begin());
    const Rat inv = 1 / v[pc];
    for (std::size_t c = pc; c < dim_; ++c) {
        if (sgn(v[c]) != 0) v[c] *= inv;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return true;
}

std::size_t rank(const std::vector<QVec>& vectors, std::size_t dim) {
    EchelonBasis basis(dim);
    for (const auto& v : vectors) {
        basis.insert(v);
        if (basis.rank() == dim) break;
    }
    return basis.rank();
}

std::vector<QVec> kernel(QMatrix a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && sgn(a(sel, c)) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(sel, j), a(r, j));
        }
        const Rat inv = 1 / a(r, c);
        for (std::size_t j = c; j < cols; ++j) {
            if (sgn(a(r, j)) != 0) a(r, j) *= inv;
        }
        std::vector<std::size_t> nz;
        for (std::size_t j = c; j < cols; ++j) {
            if (sgn(a(r, j)) != 0) nz.push_back(j);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Rat factor = a(i, c);
            for (std::size_t j : nz) a(i, j) -= factor * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols);
        v[f] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix vstack(const std::vector<QMatrix>& blocks) {
    if (blocks.empty()) return {};
    const std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw InvalidArgument("vstack column mismatch");
        rows += b.rows();
    }
    QMatrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = b(i, j);
        r0 += b.rows();
    }
    return out;
}

std::optional<QVec> solve(QMatrix a, QVec b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw InvalidArgument("solve expects a square system");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && sgn(a(sel, c)) == 0) ++sel;
        if (sel == n) return std::nullopt;
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
            std::swap(b[sel], b[c]);
        }
        const Rat inv = 1 / a(c, c);
        for (std::size_t j = c; j < n; ++j) a(c, j) *= inv;
        b[c] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(a(i, c)) == 0) continue;
            const Rat factor = a(i, c);
            for (std::size_t j = c; j < n; ++j) {
                if (sgn(a(c, j)) != 0) a(i, j) -= factor * a(c, j);
            }
            b[i] -= factor * b[c];
        }
    }
    return b;
}

bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b, std::size_t dim) {
    std::vector<QVec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t ra = rank(a, dim);
    return ra == rank(b, dim) && ra == rank(both, dim);
}

std::optional<QVec> coordinates(const std::vector<QVec>& basis, const QVec& v) {
    const std::size_t k = basis.size();
    QMatrix a(v.size(), k + 1);
    for (std::size_t c = 0; c < k; ++c) {
        if (basis[c].size() != v.size()) throw InvalidArgument("coordinates: dimension mismatch");
        for (std::size_t r = 0; r < v.size(); ++r) a(r, c) = basis[c][r];
    }
    for (std::size_t r = 0; r < v.size(); ++r) a(r, k) = -v[r];
    const auto ker = kernel(std::move(a));
    for (const auto& x : ker) {
        if (sgn(x[k]) == 0) continue;
        QVec out(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
        for (auto& c : out) c /= x[k];
        return out;
    }
    return std::nullopt;
}

}  // namespace radhopf
