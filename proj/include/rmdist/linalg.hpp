#pragma once

#include "rmdist/field.hpp"

#include <cstdint>
#include <vector>

namespace rmdist {

// Dense row-major matrix over F_q. Rows are coefficient vectors; all the
// subspace machinery below works with row spaces in reduced row echelon
// form so that equal subspaces have bytewise-equal representations.
struct Mat {
    const Field* f = nullptr;
    int rows = 0, cols = 0;
    std::vector<uint16_t> a;

    Mat() = default;
    Mat(const Field& fld, int r, int c) : f(&fld), rows(r), cols(c), a((size_t)r * c, 0) {}

    uint16_t& at(int r, int c) { return a[(size_t)r * cols + c]; }
    uint16_t at(int r, int c) const { return a[(size_t)r * cols + c]; }

    void append_row(const std::vector<uint16_t>& row);
};

// In-place reduced row echelon form; returns the rank. Zero rows are
// dropped so the result has exactly rank rows.
int rref(Mat& m);

// Basis of the right kernel {x : m x = 0}, one solution per row, in RREF.
Mat kernel(const Mat& m);

// True when v lies in the row space of m (m must be in RREF).
bool rowspace_contains(const Mat& m, const std::vector<uint16_t>& v);

// Residual of v after elimination against the RREF rows of m. Zero iff
// rowspace_contains.
std::vector<uint16_t> reduce_against(const Mat& m, std::vector<uint16_t> v);

// Row space intersection via the Zassenhaus construction; result in RREF.
Mat intersect_rowspaces(const Mat& a, const Mat& b);

// Vertical concatenation (no reduction).
Mat stack(const Mat& a, const Mat& b);

} // namespace rmdist
