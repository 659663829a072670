#pragma once

#include <cassert>
#include <vector>

#include "ratpoly.hpp"

namespace octarec {

// Dense square matrix over an exact value type.
template <class T>
class Mat {
public:
    Mat() : n_(0) {}
    explicit Mat(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, value_traits<T>::zero()) {}

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = value_traits<T>::one();
        return m;
    }

    int size() const { return n_; }
    T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
    const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        assert(a.n_ == b.n_);
        Mat out(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                if (value_traits<T>::is_zero(a(i, k))) continue;
                for (int j = 0; j < a.n_; ++j) {
                    if (value_traits<T>::is_zero(b(k, j))) continue;
                    out(i, j) += a(i, k) * b(k, j);
                }
            }
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!(a.data_[i] == b.data_[i])) return false;
        return true;
    }

private:
    int n_;
    std::vector<T> data_;
};

namespace detail {

// Fraction-free (Bareiss) determinant; every division is exact in T.
template <class T>
T bareiss_det(std::vector<std::vector<T>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return value_traits<T>::one();
    T prev = value_traits<T>::one();
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (value_traits<T>::is_zero(m[k][k])) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!value_traits<T>::is_zero(m[r][k])) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return value_traits<T>::zero();
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                T t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = value_traits<T>::div(t, prev);
            }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    if (sign < 0) det = value_traits<T>::zero() - det;
    return det;
}

template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return value_traits<T>::one();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    T out = value_traits<T>::zero();
    for (int c = 0; c < n; ++c) {
        if (value_traits<T>::is_zero(m[0][c])) continue;
        std::vector<std::vector<T>> sub;
        sub.reserve(n - 1);
        for (int r = 1; r < n; ++r) {
            std::vector<T> row;
            row.reserve(n - 1);
            for (int cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            sub.push_back(std::move(row));
        }
        T term = m[0][c] * cofactor_det(sub);
        if (c % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

}  // namespace detail

// Minor |M|_{rows}^{cols}: exact determinant of the selected submatrix.
// Cofactor expansion for small sizes, Bareiss elimination above that.
template <class T>
T minor_det(const Mat<T>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    assert(rows.size() == cols.size());
    const int n = static_cast<int>(rows.size());
    std::vector<std::vector<T>> sub(n, std::vector<T>(n, value_traits<T>::zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sub[i][j] = m(rows[i], cols[j]);
    if (n <= 4) return detail::cofactor_det(sub);
    return detail::bareiss_det(std::move(sub));
}

}  // namespace octarec
