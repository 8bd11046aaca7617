#pragma once

#include "rmdist/field.hpp"
#include "rmdist/quotring.hpp"

#include <cstdint>
#include <vector>

namespace rmdist {

// Polynomial with every variable's degree at most q-1, stored as a dense
// coefficient array of length q^v. Exponent tuples and evaluation points
// share one row-major index: idx = i_1 q^{v-1} + ... + i_v. The same array
// shape doubles as an evaluation table, and eval/interpolate are inverse
// per-axis linear transforms.
struct BoxPoly {
    const Field* f = nullptr;
    int v = 0;
    std::vector<uint16_t> c;

    BoxPoly() = default;
    BoxPoly(const Field& fld, int vars);

    size_t grid_size() const { return c.size(); }
    bool is_zero() const;
    bool operator==(const BoxPoly& o) const { return c == o.c; }
};

// Index <-> tuple helpers for the shared grid layout.
long long tuple_to_index(const Field& f, const std::vector<int>& t);
std::vector<int> index_to_tuple(const Field& f, int v, long long idx);

BoxPoly box_add(const BoxPoly& a, const BoxPoly& b);
BoxPoly box_sub(const BoxPoly& a, const BoxPoly& b);

// Values of f at every point of F_q^v, same indexing as the coefficients.
std::vector<uint16_t> eval_all(const BoxPoly& f);

// Unique box polynomial with the given value table.
BoxPoly interpolate(const Field& f, int v, const std::vector<uint16_t>& values);

// Number of points where f vanishes; the origin is skipped when
// include_origin is false.
int count_zeroes(const BoxPoly& f, bool include_origin);

// Coefficient reflection i -> q-1-i on every axis.
BoxPoly reversal(const BoxPoly& f);

// Product of per-axis point indicators: evaluates to 1 at c and 0 elsewhere.
BoxPoly lagrange_basis(const Field& f, const std::vector<int>& point);

// Image in E = F_q[x]/<degree-l monomials>: keeps coefficients with total
// degree <= l-1. E must be a ring over the same field with E.trunc() == l.
RingElt prefix_truncate(const BoxPoly& f, const QuotRing& E);

bool low_degree_zero_check(const BoxPoly& f, const QuotRing& E);

} // namespace rmdist
