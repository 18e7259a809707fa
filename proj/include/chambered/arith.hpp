#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chambered {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rational>;

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const T> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    void set_column(std::size_t c, std::span<const T> v) {
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, c) = v[r];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator-() const {
        Matrix n(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            n.data_[k] = -data_[k];
        return n;
    }

    std::vector<T> apply(std::span<const T> v) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            T acc = 0;
            for (std::size_t c = 0; c < cols_; ++c)
                if (sgn(v[c]) != 0)
                    acc += (*this)(r, c) * v[c];
            out[r] = acc;
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (sgn(aik) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    p(i, j) += aik * b(k, j);
            }
        return p;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(std::span<const Int> v);

std::size_t hash_value(const Int& x);
std::size_t hash_value(const IntMatrix& m);

struct IntMatrixHash {
    std::size_t operator()(const IntMatrix& m) const { return hash_value(m); }
};

// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string to_string(const Int& x);
std::string to_string(const Rational& x);

// Accepts "p", "-p", "p/q"; throws InputError otherwise.
Rational parse_rational(std::string_view text);

// Smallest positive multiple of v with integer, coprime entries.
IntVector primitive_integer_vector(std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Int dot(std::span<const Int> a, std::span<const Int> b);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Uniform integer in [lo, hi] by rejection; unlike std::uniform_int_distribution
// the sequence is the same with every standard library.
long uniform_int(std::mt19937_64& rng, long lo, long hi);

} // namespace chambered
