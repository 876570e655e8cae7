#include "fano/linalg.hpp"

#include <stdexcept>

namespace fano {

Mat::Mat(FieldPtr field, int r, int c) : k(std::move(field)), rows(r), cols(c) {
    a.assign(static_cast<size_t>(r) * c, k->zero());
}

Mat Mat::identity(const FieldPtr& field, int n) {
    Mat m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Mat Mat::mul(const Mat& o) const {
    if (cols != o.rows) throw std::runtime_error("matrix product: shape mismatch");
    Mat r(k, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int l = 0; l < cols; ++l) {
            const Elem& x = at(i, l);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                if (o.at(l, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + x * o.at(l, j);
            }
        }
    return r;
}

std::vector<Elem> Mat::apply(const std::vector<Elem>& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::runtime_error("matrix apply: shape mismatch");
    std::vector<Elem> r(static_cast<size_t>(rows), k->zero());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!at(i, j).is_zero() && !v[static_cast<size_t>(j)].is_zero())
                r[static_cast<size_t>(i)] = r[static_cast<size_t>(i)] + at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

Mat Mat::transpose() const {
    Mat r(k, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::convert(const FieldPtr& target) const {
    Mat r(target, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) {
        const Elem& e = a[i];
        if (e.field()->kind() == Field::Kind::Rationals)
            r.a[i] = target->from_mpq(e.rat());
        else
            r.a[i] = target->embed(e);
    }
    return r;
}

KernelResult kernel_and_rank(const Mat& m) {
    Mat w = m;
    const FieldPtr& k = m.k;
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < w.cols && rank < w.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < w.rows; ++r)
            if (!w.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < w.cols; ++j) std::swap(w.at(piv, j), w.at(rank, j));
        Elem inv = w.at(rank, col).inv();
        for (int j = col; j < w.cols; ++j) w.at(rank, j) = w.at(rank, j) * inv;
        for (int r = 0; r < w.rows; ++r) {
            if (r == rank || w.at(r, col).is_zero()) continue;
            Elem f = w.at(r, col);
            for (int j = col; j < w.cols; ++j) w.at(r, j) = w.at(r, j) - f * w.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    KernelResult res;
    res.rank = rank;
    std::vector<bool> is_pivot(static_cast<size_t>(w.cols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (int free_col = 0; free_col < w.cols; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        std::vector<Elem> v(static_cast<size_t>(w.cols), k->zero());
        v[static_cast<size_t>(free_col)] = k->one();
        for (int r = 0; r < rank; ++r)
            v[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = -w.at(r, free_col);
        res.kernel.push_back(std::move(v));
    }
    return res;
}

Elem mat_det(Mat m) {
    if (m.rows != m.cols) throw std::runtime_error("det: square matrix required");
    const FieldPtr& k = m.k;
    Elem det = k->one();
    int n = m.rows;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) return k->zero();
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = -det;
        }
        det = det * m.at(col, col);
        Elem inv = m.at(col, col).inv();
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Elem f = m.at(r, col) * inv;
            for (int j = col; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(col, j);
        }
    }
    return det;
}

Mat mat_inverse(const Mat& m) {
    if (m.rows != m.cols) throw std::runtime_error("inverse: square matrix required");
    int n = m.rows;
    Mat w(m.k, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
        w.at(i, n + i) = m.k->one();
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!w.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) throw std::runtime_error("inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < 2 * n; ++j) std::swap(w.at(piv, j), w.at(col, j));
        Elem inv = w.at(col, col).inv();
        for (int j = 0; j < 2 * n; ++j) w.at(col, j) = w.at(col, j) * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || w.at(r, col).is_zero()) continue;
            Elem f = w.at(r, col);
            for (int j = 0; j < 2 * n; ++j) w.at(r, j) = w.at(r, j) - f * w.at(col, j);
        }
    }
    Mat res(m.k, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) res.at(i, j) = w.at(i, n + j);
    return res;
}

bool vectors_proportional(const std::vector<Elem>& x, const std::vector<Elem>& y) {
    if (x.size() != y.size()) return false;
    bool xz = true, yz = true;
    for (const auto& e : x) xz = xz && e.is_zero();
    for (const auto& e : y) yz = yz && e.is_zero();
    if (xz || yz) return false; // projective comparison needs nonzero vectors
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (!(x[i] * y[j] == x[j] * y[i])) return false;
    return true;
}

bool mats_proportional(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    return vectors_proportional(x.a, y.a);
}

mpz_class bareiss_det(ZMat m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::runtime_error("bareiss_det: square matrix required");
    if (n == 0) return 1;
    mpz_class denom = 1;
    int sign = 1;
    for (size_t col = 0; col + 1 < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            sign = -sign;
        }
        for (size_t r = col + 1; r < n; ++r) {
            for (size_t j = col + 1; j < n; ++j) {
                mpz_class v = m[col][col] * m[r][j] - m[r][col] * m[col][j];
                mpz_divexact(m[r][j].get_mpz_t(), v.get_mpz_t(), denom.get_mpz_t());
            }
            m[r][col] = 0;
        }
        denom = m[col][col];
    }
    return sign * m[n - 1][n - 1];
}

namespace {
void minor_rec(const ZMat& m, int k, size_t start, std::vector<size_t>& rows, mpz_class& g) {
    if (static_cast<int>(rows.size()) == k) {
        // all k-subsets of columns for this row set
        size_t cols = m[0].size();
        std::vector<size_t> cs;
        std::vector<size_t> stack;
        // iterate column subsets iteratively
        std::vector<size_t> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = static_cast<size_t>(i);
        for (;;) {
            ZMat sub(static_cast<size_t>(k), std::vector<mpz_class>(static_cast<size_t>(k)));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[static_cast<size_t>(i)][static_cast<size_t>(j)] = m[rows[static_cast<size_t>(i)]][idx[static_cast<size_t>(j)]];
            mpz_class d = bareiss_det(std::move(sub));
            if (d != 0) {
                if (g == 0) g = abs(d);
                else mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
                if (g == 1) return;
            }
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == cols - static_cast<size_t>(k - pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int j = pos + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
        return;
    }
    for (size_t r = start; r < m.size(); ++r) {
        rows.push_back(r);
        minor_rec(m, k, r + 1, rows, g);
        rows.pop_back();
        if (g == 1) return;
    }
}
} // namespace

mpz_class minors_gcd(const ZMat& m, int k) {
    if (m.empty() || k <= 0) return 0;
    mpz_class g = 0;
    std::vector<size_t> rows;
    minor_rec(m, k, 0, rows, g);
    return g;
}

} // namespace fano
