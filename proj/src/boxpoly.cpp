#include "rmdist/boxpoly.hpp"

#include <stdexcept>

namespace rmdist {

BoxPoly::BoxPoly(const Field& fld, int vars) : f(&fld), v(vars) {
    size_t n = 1;
    for (int i = 0; i < vars; ++i) {
        if (n > (size_t)1 << 24) throw std::overflow_error("box polynomial grid too large");
        n *= fld.q();
    }
    c.assign(n, 0);
}

bool BoxPoly::is_zero() const {
    for (auto x : c)
        if (x) return false;
    return true;
}

long long tuple_to_index(const Field& f, const std::vector<int>& t) {
    long long idx = 0;
    for (int x : t) idx = idx * f.q() + x;
    return idx;
}

std::vector<int> index_to_tuple(const Field& f, int v, long long idx) {
    std::vector<int> t(v);
    for (int i = v - 1; i >= 0; --i) {
        t[i] = (int)(idx % f.q());
        idx /= f.q();
    }
    return t;
}

BoxPoly box_add(const BoxPoly& a, const BoxPoly& b) {
    BoxPoly r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = (uint16_t)a.f->add(a.c[i], b.c[i]);
    return r;
}

BoxPoly box_sub(const BoxPoly& a, const BoxPoly& b) {
    BoxPoly r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = (uint16_t)a.f->sub(a.c[i], b.c[i]);
    return r;
}

namespace {

// Applies the q x q matrix M to every line of the grid along one axis.
void axis_transform(const Field& F, int v, std::vector<uint16_t>& data, int axis,
                    const std::vector<int>& M) {
    const int q = F.q();
    size_t stride = 1;
    for (int j = axis + 1; j < v; ++j) stride *= q;
    size_t block = stride * q;
    std::vector<uint16_t> line(q), out(q);
    for (size_t base = 0; base < data.size(); base += block) {
        for (size_t off = 0; off < stride; ++off) {
            for (int i = 0; i < q; ++i) line[i] = data[base + off + stride * i];
            for (int w = 0; w < q; ++w) {
                int acc = 0;
                for (int i = 0; i < q; ++i) {
                    if (line[i] == 0) continue;
                    acc = F.add(acc, F.mul(M[(size_t)w * q + i], line[i]));
                }
                out[w] = (uint16_t)acc;
            }
            for (int w = 0; w < q; ++w) data[base + off + stride * w] = out[w];
        }
    }
}

} // namespace

std::vector<uint16_t> eval_all(const BoxPoly& f) {
    std::vector<uint16_t> vals = f.c;
    for (int axis = 0; axis < f.v; ++axis)
        axis_transform(*f.f, f.v, vals, axis, f.f->vandermonde());
    return vals;
}

BoxPoly interpolate(const Field& F, int v, const std::vector<uint16_t>& values) {
    BoxPoly f(F, v);
    if (values.size() != f.c.size()) throw std::invalid_argument("value table size mismatch");
    f.c = values;
    for (int axis = 0; axis < v; ++axis)
        axis_transform(F, v, f.c, axis, F.vandermonde_inv());
    return f;
}

int count_zeroes(const BoxPoly& f, bool include_origin) {
    auto vals = eval_all(f);
    int z = 0;
    for (size_t i = include_origin ? 0 : 1; i < vals.size(); ++i)
        if (vals[i] == 0) ++z;
    return z;
}

BoxPoly reversal(const BoxPoly& f) {
    // Reflecting every base-q digit of the index is the complement
    // idx -> q^v - 1 - idx.
    BoxPoly r(*f.f, f.v);
    const size_t last = f.c.size() - 1;
    for (size_t idx = 0; idx < f.c.size(); ++idx) r.c[last - idx] = f.c[idx];
    return r;
}

BoxPoly lagrange_basis(const Field& F, const std::vector<int>& point) {
    // Tensor product of univariate point indicators, each obtained by
    // interpolating the indicator value vector on one axis.
    const int q = F.q();
    int v = (int)point.size();
    std::vector<std::vector<uint16_t>> uni(v, std::vector<uint16_t>(q, 0));
    for (int i = 0; i < v; ++i) {
        std::vector<uint16_t> vals(q, 0);
        vals[point[i]] = 1;
        for (int w = 0; w < q; ++w) {
            int acc = 0;
            for (int j = 0; j < q; ++j)
                acc = F.add(acc, F.mul(F.vandermonde_inv()[(size_t)w * q + j], vals[j]));
            uni[i][w] = (uint16_t)acc;
        }
    }
    BoxPoly P(F, v);
    for (size_t idx = 0; idx < P.c.size(); ++idx) {
        auto t = index_to_tuple(F, v, (long long)idx);
        int prod = 1;
        for (int i = 0; i < v && prod != 0; ++i) prod = F.mul(prod, uni[i][t[i]]);
        P.c[idx] = (uint16_t)prod;
    }
    return P;
}

RingElt prefix_truncate(const BoxPoly& f, const QuotRing& E) {
    if (&E.field() != f.f || E.vars() != f.v)
        throw std::invalid_argument("ring/polynomial mismatch");
    RingElt r = E.zero();
    for (size_t idx = 0; idx < f.c.size(); ++idx) {
        if (f.c[idx] == 0) continue;
        auto t = index_to_tuple(*f.f, f.v, (long long)idx);
        int total = 0;
        for (int x : t) total += x;
        if (total >= E.trunc()) continue;
        std::vector<uint8_t> key(t.begin(), t.end());
        int bi = E.mono_index(key);
        if (bi >= 0) r[bi] = f.c[idx];
    }
    return r;
}

bool low_degree_zero_check(const BoxPoly& f, const QuotRing& E) {
    return E.is_zero(prefix_truncate(f, E));
}

} // namespace rmdist
