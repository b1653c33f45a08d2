#pragma once

#include "swdual/errors.hpp"
#include "swdual/field_ops.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace swdual {

// Dense matrix over a field kernel K (PrimeOps / ExtOps / RatOps).  Entries
// are stored row-major; all arithmetic is exact.  Operations return fresh
// values; nothing here mutates its inputs.
template <class K>
struct Mat {
    using Elem = typename K::Elem;

    K k;
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Mat(const K& ops, int r, int c) : k(ops), rows(r), cols(c) {
        if (r < 0 || c < 0) throw UsageError("negative matrix dimension");
        a.assign(static_cast<std::size_t>(r) * c, ops.zero());
    }

    static Mat zero(const K& ops, int r, int c) { return Mat(ops, r, c); }

    static Mat identity(const K& ops, int n) {
        Mat m(ops, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ops.one();
        return m;
    }

    Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Elem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    Elem* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
    const Elem* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }

    bool is_square() const { return rows == cols; }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    Mat add(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = k.add(a[i], o.a[i]);
        return r;
    }

    Mat sub(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = k.sub(a[i], o.a[i]);
        return r;
    }

    Mat scaled(const Elem& c) const {
        Mat r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = k.mul(a[i], c);
        return r;
    }

    // Matrix product; inner loops run as contiguous row updates so the
    // kernel's vectorized axpy carries the cost.
    Mat mul(const Mat& o) const {
        if (cols != o.rows) throw UsageError("matrix shape mismatch in product");
        Mat r(k, rows, o.cols);
        for (int i = 0; i < rows; ++i) {
            Elem* dst = r.row(i);
            for (int t = 0; t < cols; ++t) {
                const Elem& f = at(i, t);
                if (!k.is_zero(f)) k.axpy(dst, o.row(t), static_cast<std::size_t>(o.cols), f);
            }
        }
        return r;
    }

    Mat transpose() const {
        Mat r(k, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Mat pow(unsigned long e) const {
        if (!is_square()) throw UsageError("matrix power requires a square matrix");
        Mat result = identity(k, rows);
        Mat base = *this;
        while (e > 0) {
            if (e & 1ul) result = result.mul(base);
            base = base.mul(base);
            e >>= 1;
        }
        return result;
    }

    bool is_zero_matrix() const {
        for (const Elem& e : a)
            if (!k.is_zero(e)) return false;
        return true;
    }

    bool is_diagonal() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (i != j && !k.is_zero(at(i, j))) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        for (int i = 0; i < rows; ++i) {
            out += i == 0 ? "[" : " ";
            out += "[";
            for (int j = 0; j < cols; ++j) {
                if (j) out += ", ";
                out += k.str(at(i, j));
            }
            out += "]";
            out += i + 1 == rows ? "]" : "\n";
        }
        return out;
    }

private:
    void require_same_shape(const Mat& o) const {
        if (rows != o.rows || cols != o.cols)
            throw UsageError("matrix shape mismatch");
    }
};

// Kronecker (tensor) product: (A (x) B)[i1*Br + i2][j1*Bc + j2] = A[i1][j1] * B[i2][j2].
template <class K>
Mat<K> kron(const Mat<K>& A, const Mat<K>& B) {
    Mat<K> r(A.k, A.rows * B.rows, A.cols * B.cols);
    for (int i1 = 0; i1 < A.rows; ++i1)
        for (int j1 = 0; j1 < A.cols; ++j1) {
            const auto& c = A.at(i1, j1);
            if (A.k.is_zero(c)) continue;
            for (int i2 = 0; i2 < B.rows; ++i2)
                for (int j2 = 0; j2 < B.cols; ++j2)
                    r.at(i1 * B.rows + i2, j1 * B.cols + j2) = A.k.mul(c, B.at(i2, j2));
        }
    return r;
}

} // namespace swdual
