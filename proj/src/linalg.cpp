#include "rmdist/linalg.hpp"

#include <stdexcept>

namespace rmdist {

void Mat::append_row(const std::vector<uint16_t>& row) {
    if ((int)row.size() != cols) throw std::invalid_argument("row width mismatch");
    a.insert(a.end(), row.begin(), row.end());
    ++rows;
}

int rref(Mat& m) {
    const Field& F = *m.f;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        int f = F.inv(m.at(rank, col));
        for (int j = col; j < m.cols; ++j) m.at(rank, j) = (uint16_t)F.mul(m.at(rank, j), f);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            int g = m.at(r, col);
            if (g == 0) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(r, j) = (uint16_t)F.sub(m.at(r, j), F.mul(g, m.at(rank, j)));
        }
        ++rank;
    }
    m.rows = rank;
    m.a.resize((size_t)rank * m.cols);
    return rank;
}

Mat kernel(const Mat& m) {
    const Field& F = *m.f;
    Mat r = m;
    rref(r);
    std::vector<int> pivot_col(r.rows, -1);
    std::vector<bool> is_pivot(m.cols, false);
    for (int i = 0; i < r.rows; ++i) {
        for (int j = 0; j < r.cols; ++j)
            if (r.at(i, j) != 0) { pivot_col[i] = j; is_pivot[j] = true; break; }
    }
    Mat k(F, 0, m.cols);
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<uint16_t> v(m.cols, 0);
        v[j] = 1;
        for (int i = 0; i < r.rows; ++i)
            v[pivot_col[i]] = (uint16_t)F.neg(r.at(i, j));
        k.append_row(v);
    }
    rref(k);
    return k;
}

std::vector<uint16_t> reduce_against(const Mat& m, std::vector<uint16_t> v) {
    const Field& F = *m.f;
    for (int i = 0; i < m.rows; ++i) {
        int pc = -1;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) { pc = j; break; }
        if (pc < 0) continue;
        int g = v[pc];
        if (g == 0) continue;
        for (int j = pc; j < m.cols; ++j)
            v[j] = (uint16_t)F.sub(v[j], F.mul(g, m.at(i, j)));
    }
    return v;
}

bool rowspace_contains(const Mat& m, const std::vector<uint16_t>& v) {
    auto r = reduce_against(m, v);
    for (auto x : r)
        if (x != 0) return false;
    return true;
}

Mat stack(const Mat& a, const Mat& b) {
    Mat s(*a.f, 0, a.cols);
    s.a = a.a;
    s.rows = a.rows;
    s.a.insert(s.a.end(), b.a.begin(), b.a.end());
    s.rows += b.rows;
    return s;
}

Mat intersect_rowspaces(const Mat& a, const Mat& b) {
    // Zassenhaus: reduce [A | A ; B | 0]; rows with zero left block carry
    // the intersection in their right block.
    const Field& F = *a.f;
    int n = a.cols;
    Mat z(F, a.rows + b.rows, 2 * n);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < n; ++j) {
            z.at(i, j) = a.at(i, j);
            z.at(i, n + j) = a.at(i, j);
        }
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < n; ++j) z.at(a.rows + i, j) = b.at(i, j);
    rref(z);
    Mat out(F, 0, n);
    for (int i = 0; i < z.rows; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n; ++j)
            if (z.at(i, j) != 0) { left_zero = false; break; }
        if (!left_zero) continue;
        std::vector<uint16_t> v(n);
        for (int j = 0; j < n; ++j) v[j] = z.at(i, n + j);
        out.append_row(v);
    }
    rref(out);
    return out;
}

} // namespace rmdist
