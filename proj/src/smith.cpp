#include "fano/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fano {

std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t t = 0;
    std::vector<mpz_class> inv;
    while (t < rows && t < cols) {
        // locate a nonzero pivot
        size_t pr = rows, pc = cols;
        for (size_t i = t; i < rows && pr == rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0) { pr = i; pc = j; break; }
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                mpz_class q = m[i][t] / m[t][t];
                if (q != 0)
                    for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                // remainder is strictly smaller than the pivot, so swapping
                // it up makes progress
                if (m[i][t] != 0) {
                    std::swap(m[i], m[t]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                mpz_class q = m[t][j] / m[t][t];
                if (q != 0)
                    for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][t]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility of the remaining block by the pivot
            bool divides = true;
            for (size_t i = t + 1; i < rows && divides; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (size_t jc = t; jc < cols; ++jc) m[t][jc] += m[i][jc];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        inv.push_back(abs(m[t][t]));
        ++t;
    }
    while (inv.size() < std::min(rows, cols)) inv.push_back(0);
    return inv;
}

AbelianQuotient smith_quotient(bool z2_torsion, int free_rank, long n) {
    if (n < 1) throw std::runtime_error("smith_quotient: exponent must be >= 1");
    int g = free_rank + (z2_torsion ? 1 : 0); // generator count
    if (g == 0) return {1, {}};
    std::vector<std::vector<mpz_class>> rel;
    if (z2_torsion) {
        std::vector<mpz_class> row(static_cast<size_t>(g), 0);
        row[0] = 2;
        rel.push_back(row);
    }
    for (int i = 0; i < g; ++i) {
        std::vector<mpz_class> row(static_cast<size_t>(g), 0);
        row[static_cast<size_t>(i)] = n;
        rel.push_back(row);
    }
    std::vector<mpz_class> inv = smith_normal_form(std::move(rel));
    AbelianQuotient q;
    q.order = 1;
    for (int i = 0; i < g; ++i) {
        mpz_class d = i < static_cast<int>(inv.size()) ? inv[static_cast<size_t>(i)] : 0;
        if (d == 0) {
            q.order = 0;
            q.invariants.push_back(0);
        } else if (d > 1) {
            q.invariants.push_back(d);
            if (q.order != 0) q.order *= d;
        }
    }
    return q;
}

} // namespace fano
