#pragma once
#include "fano/field.hpp"

#include <vector>

namespace fano {

// Dense matrix over an Elem field, row-major.
struct Mat {
    FieldPtr k;
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(FieldPtr field, int r, int c);
    static Mat identity(const FieldPtr& field, int n);

    Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    Mat mul(const Mat& o) const;
    std::vector<Elem> apply(const std::vector<Elem>& v) const;
    Mat transpose() const;
    Mat convert(const FieldPtr& target) const;
};

struct KernelResult {
    int rank = 0;
    std::vector<std::vector<Elem>> kernel; // basis vectors of length cols
};

KernelResult kernel_and_rank(const Mat& m);
Elem mat_det(Mat m);
Mat mat_inverse(const Mat& m);

// projective equality: all 2x2 cross determinants of the flattened entry
// vectors vanish (no normalization by possibly-zero entries)
bool vectors_proportional(const std::vector<Elem>& x, const std::vector<Elem>& y);
bool mats_proportional(const Mat& x, const Mat& y);

// integer matrices
using ZMat = std::vector<std::vector<mpz_class>>;
mpz_class bareiss_det(ZMat m);
// gcd of all k x k minors (0 if all vanish)
mpz_class minors_gcd(const ZMat& m, int k);

} // namespace fano
