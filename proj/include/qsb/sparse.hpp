#pragma once

#include "qsb/exactla.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace qsb {

// Column-major sparse matrix over a field K (Scalar, or GaussRat for the
// numeric probe). Each column is sorted by row and holds no zeros.
template <class K>
class SMat {
public:
    using Entry = std::pair<int, K>;
    using Col = std::vector<Entry>;

    SMat() = default;
    SMat(int rows, int cols) : r_(rows), c_(cols), col_(cols) {}

    static SMat identity(int n) {
        SMat m(n, n);
        for (int i = 0; i < n; ++i) m.col_[i].push_back({i, K(1)});
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    const Col& col(int j) const { return col_[j]; }
    Col& col(int j) { return col_[j]; }

    std::size_t nnz() const {
        std::size_t s = 0;
        for (const auto& c : col_) s += c.size();
        return s;
    }

    K at(int i, int j) const {
        const Col& c = col_[j];
        auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, int v) { return e.first < v; });
        return (it != c.end() && it->first == i) ? it->second : K();
    }

    bool is_zero() const {
        for (const auto& c : col_)
            if (!c.empty()) return false;
        return true;
    }

    friend bool operator==(const SMat& a, const SMat& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) return false;
        for (int j = 0; j < a.c_; ++j) {
            const Col &x = a.col_[j], &y = b.col_[j];
            if (x.size() != y.size()) return false;
            for (std::size_t k = 0; k < x.size(); ++k)
                if (x[k].first != y[k].first || !(x[k].second == y[k].second)) return false;
        }
        return true;
    }

    // Sort by row, sum duplicates, drop zeros.
    static Col combine(std::vector<Entry>& buf) {
        std::sort(buf.begin(), buf.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        Col out;
        out.reserve(buf.size());
        for (auto& e : buf) {
            if (!out.empty() && out.back().first == e.first)
                out.back().second += e.second;
            else {
                if (!out.empty() && out.back().second.is_zero()) out.pop_back();
                out.push_back(std::move(e));
            }
        }
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        return out;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<Col> col_;
};

template <class K>
SMat<K> operator+(const SMat<K>& a, const SMat<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sparse sum shape mismatch");
    SMat<K> m(a.rows(), a.cols());
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < a.cols(); ++j) {
        std::vector<typename SMat<K>::Entry> buf(a.col(j));
        buf.insert(buf.end(), b.col(j).begin(), b.col(j).end());
        m.col(j) = SMat<K>::combine(buf);
    }
    return m;
}

template <class K>
SMat<K> scale(const K& s, const SMat<K>& a) {
    SMat<K> m(a.rows(), a.cols());
    if (s.is_zero()) return m;
    for (int j = 0; j < a.cols(); ++j) {
        m.col(j).reserve(a.col(j).size());
        for (const auto& [i, v] : a.col(j)) m.col(j).push_back({i, s * v});
    }
    return m;
}

template <class K>
SMat<K> operator-(const SMat<K>& a, const SMat<K>& b) {
    return a + scale(K(-1), b);
}

// a * b
template <class K>
SMat<K> mul(const SMat<K>& a, const SMat<K>& b) {
    if (a.cols() != b.rows()) throw DimensionError("sparse matmul dimension mismatch");
    SMat<K> m(a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < b.cols(); ++j) {
        std::vector<typename SMat<K>::Entry> buf;
        for (const auto& [k, v] : b.col(j))
            for (const auto& [i, w] : a.col(k)) buf.push_back({i, w * v});
        m.col(j) = SMat<K>::combine(buf);
    }
    return m;
}

// Left factor index major: (a (x) b)[(i,k),(j,l)] = a[i,j] b[k,l].
template <class K>
SMat<K> kron(const SMat<K>& a, const SMat<K>& b) {
    SMat<K> m(a.rows() * b.rows(), a.cols() * b.cols());
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < m.cols(); ++c) {
        int j = c / std::max(1, b.cols()), l = c % std::max(1, b.cols());
        auto& out = m.col(c);
        for (const auto& [i, x] : a.col(j))
            for (const auto& [k, y] : b.col(l)) out.push_back({i * b.rows() + k, x * y});
    }
    return m;
}

// (I_l (x) g (x) I_r) * m, without materializing the Kronecker product.
template <class K>
SMat<K> apply_block(const SMat<K>& g, const SMat<K>& m, long l, long r) {
    long gr = g.rows(), gc = g.cols();
    if (long(m.rows()) != l * gc * r) throw DimensionError("apply_block dimension mismatch");
    SMat<K> out(int(l * gr * r), m.cols());
    if (gc == 0 || r == 0) return out;
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < m.cols(); ++c) {
        std::vector<typename SMat<K>::Entry> buf;
        for (const auto& [row, v] : m.col(c)) {
            long j = row % r, k = (row / r) % gc, i = row / (r * gc);
            for (const auto& [kk, w] : g.col(int(k))) buf.push_back({int((i * gr + kk) * r + j), w * v});
        }
        out.col(c) = SMat<K>::combine(buf);
    }
    return out;
}

// Serial reference for apply_block, used by tests and the benchmark.
template <class K>
SMat<K> apply_block_serial(const SMat<K>& g, const SMat<K>& m, long l, long r) {
    long gr = g.rows(), gc = g.cols();
    if (long(m.rows()) != l * gc * r) throw DimensionError("apply_block dimension mismatch");
    SMat<K> out(int(l * gr * r), m.cols());
    if (gc == 0 || r == 0) return out;
    for (int c = 0; c < m.cols(); ++c) {
        std::vector<typename SMat<K>::Entry> buf;
        for (const auto& [row, v] : m.col(c)) {
            long j = row % r, k = (row / r) % gc, i = row / (r * gc);
            for (const auto& [kk, w] : g.col(int(k))) buf.push_back({int((i * gr + kk) * r + j), w * v});
        }
        out.col(c) = SMat<K>::combine(buf);
    }
    return out;
}

inline SMat<Scalar> to_sparse(const Mat& a) {
    SMat<Scalar> m(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero()) m.col(j).push_back({i, a(i, j)});
    return m;
}

inline Mat to_dense(const SMat<Scalar>& a) {
    Mat m(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& [i, v] : a.col(j)) m(i, j) = v;
    return m;
}

template <class K2, class K, class F>
SMat<K2> map_entries(const SMat<K>& a, F f) {
    SMat<K2> m(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& [i, v] : a.col(j)) {
            K2 w = f(v);
            if (!w.is_zero()) m.col(j).push_back({i, std::move(w)});
        }
    return m;
}

}  // namespace qsb
