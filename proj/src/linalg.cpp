#include "chambered/linalg.hpp"

#include <algorithm>

namespace chambered {

Echelon row_reduce(const RatMatrix& input) {
    RatMatrix m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(m(p, k), m(r, k));
        const Rational lead = m(r, c);
        for (std::size_t k = c; k < cols; ++k)
            m(r, k) /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0)
                continue;
            const Rational f = m(i, c);
            for (std::size_t k = c; k < cols; ++k)
                if (sgn(m(r, k)) != 0)
                    m(i, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    Echelon e;
    e.rref = RatMatrix(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < cols; ++k)
            e.rref(i, k) = m(i, k);
    e.pivots = std::move(pivots);
    return e;
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
    const Echelon e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : e.pivots)
        is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.rref(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
    const std::size_t n = a.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    const Echelon e = row_reduce(aug);
    if (e.pivots.size() != n || e.pivots.back() != n - 1)
        return std::nullopt;
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = e.rref(i, n);
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
    const std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    const Echelon e = row_reduce(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.rref(i, n + j);
    return inv;
}

Int determinant(const IntMatrix& input) {
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntMatrix m = input;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(p, c), m(k, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) /= prev;  // exact by Sylvester's identity
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Inertia symmetric_inertia(const RatMatrix& input) {
    RatMatrix m = input;
    const std::size_t n = m.rows();
    Inertia out;
    std::vector<bool> done(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const int s = sgn(m(k, k));
        if (s < 0)
            return out;
        if (s == 0) {
            // A PSD matrix with a zero diagonal entry has a zero row there.
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j] && sgn(m(k, j)) != 0)
                    return out;
            ++out.zero_pivots;
            done[k] = true;
            continue;
        }
        const Rational piv = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(m(i, k)) == 0)
                continue;
            const Rational f = m(i, k) / piv;
            for (std::size_t j = k; j < n; ++j)
                m(i, j) -= f * m(k, j);
        }
        for (std::size_t j = k + 1; j < n; ++j)
            m(k, j) = 0;
        done[k] = true;
    }
    out.positive_semidefinite = true;
    return out;
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RatVector Subspace::reduce(RatVector v) const {
    for (const auto& [p, row] : rows_) {
        if (sgn(v[p]) == 0)
            continue;
        const Rational f = v[p];
        for (std::size_t k = p; k < ambient_; ++k)
            if (sgn(row[k]) != 0)
                v[k] -= f * row[k];
    }
    return v;
}

bool Subspace::add(RatVector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < ambient_ && sgn(v[p]) == 0)
        ++p;
    if (p == ambient_)
        return false;
    const Rational lead = v[p];
    for (std::size_t k = p; k < ambient_; ++k)
        v[k] /= lead;
    for (auto& [q, row] : rows_) {
        if (sgn(row[p]) == 0)
            continue;
        const Rational f = row[p];
        for (std::size_t k = p; k < ambient_; ++k)
            if (sgn(v[k]) != 0)
                row[k] -= f * v[k];
    }
    rows_.emplace(p, std::move(v));
    return true;
}

bool Subspace::contains(const RatVector& v) const { return is_zero(reduce(v)); }

std::vector<RatVector> Subspace::basis() const {
    std::vector<RatVector> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_)
        out.push_back(row);
    return out;
}

std::vector<std::size_t> Subspace::pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [p, row] : rows_)
        out.push_back(p);
    return out;
}

} // namespace chambered
