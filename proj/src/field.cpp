#include "rmdist/field.hpp"

#include <stdexcept>
#include <string>

namespace rmdist {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense coefficient vectors over F_p, lowest degree first.
using Poly = std::vector<int>;

int deg(const Poly& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, int p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    int dm = deg(m);
    for (int i = (int)c.size() - 1; i >= dm; --i) {
        if (c[i] == 0) continue;
        int f = c[i];
        for (int j = 0; j <= dm; ++j)
            c[i - dm + j] = ((c[i - dm + j] - f * m[j]) % p + p) % p;
    }
    c.resize(dm > 0 ? dm : 1, 0);
    return c;
}

// Remainder of a by b over F_p.
Poly rem(Poly a, const Poly& b, int p) {
    int db = deg(b);
    int binv_lead = 0;
    for (int t = 1; t < p; ++t)
        if (b[db] * t % p == 1) { binv_lead = t; break; }
    for (int i = deg(a); i >= db; i = deg(a)) {
        int f = a[i] * binv_lead % p;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = ((a[i - db + j] - f * b[j]) % p + p) % p;
    }
    return a;
}

bool divides(const Poly& d, const Poly& a, int p) {
    return deg(rem(a, d, p)) < 0;
}

// Trial division by every monic polynomial of degree 1..e/2.
bool is_irreducible(const Poly& m, int p) {
    int e = deg(m);
    if (e <= 0) return false;
    if (e == 1) return true;
    for (int d = 1; 2 * d <= e; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly cand(d + 1, 0);
            cand[d] = 1;
            long long t = idx;
            for (int i = 0; i < d; ++i) { cand[i] = t % p; t /= p; }
            if (divides(cand, m, p)) return false;
        }
    }
    return true;
}

} // namespace

Field::Field(int p, int e, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    double qd = 1;
    for (int i = 0; i < e; ++i) qd *= p;
    if (qd > 1024) throw std::invalid_argument("field order exceeds the table-based limit of 1024");
    p_ = p; e_ = e;
    q_ = 1;
    for (int i = 0; i < e; ++i) q_ *= p;

    Poly m(e + 1, 0);
    m[e] = 1;
    if (modulus) {
        if ((int)modulus->size() != e)
            throw std::invalid_argument("modulus must list the e low coefficients of a monic degree-e polynomial");
        for (int i = 0; i < e; ++i) {
            int c = ((*modulus)[i] % p + p) % p;
            m[i] = c;
        }
        if (!is_irreducible(m, p))
            throw std::invalid_argument("modulus is reducible over F_p");
    } else {
        long long count = q_; // p^e candidate coefficient vectors
        bool found = false;
        for (long long idx = 0; idx < count; ++idx) {
            long long t = idx;
            for (int i = 0; i < e; ++i) { m[i] = (int)(t % p); t /= p; }
            if (is_irreducible(m, p)) { found = true; break; }
        }
        if (!found) throw std::logic_error("no irreducible modulus found");
    }
    modulus_.assign(m.begin(), m.end());

    // Index <-> coordinate decoding plus the two q x q tables.
    auto decode = [&](int a) {
        Poly c(e, 0);
        for (int i = 0; i < e; ++i) { c[i] = a % p; a /= p; }
        return c;
    };
    auto encode = [&](const Poly& c) {
        int a = 0;
        for (int i = e - 1; i >= 0; --i) a = a * p + (i < (int)c.size() ? c[i] : 0);
        return a;
    };

    add_.assign((size_t)q_ * q_, 0);
    mul_.assign((size_t)q_ * q_, 0);
    neg_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly ca = decode(a);
        Poly cn(e);
        for (int i = 0; i < e; ++i) cn[i] = (p - ca[i]) % p;
        neg_[a] = encode(cn);
        for (int b = 0; b < q_; ++b) {
            Poly cb = decode(b), cs(e);
            for (int i = 0; i < e; ++i) cs[i] = (ca[i] + cb[i]) % p;
            add_[(size_t)a * q_ + b] = encode(cs);
            mul_[(size_t)a * q_ + b] = encode(mul_mod(ca, cb, m, p));
        }
    }

    inv_.assign(q_, 0);
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b)
            if (mul_[(size_t)a * q_ + b] == 1) { inv_[a] = b; break; }
        if (inv_[a] == 0) throw std::logic_error("non-invertible nonzero element; modulus not irreducible?");
    }

    // Frobenius orbit sum: trace(a) = a + a^p + ... + a^{p^{e-1}}.
    trace_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        int s = 0, t = a;
        for (int i = 0; i < e; ++i) {
            s = add(s, t);
            int tp = 1;
            for (int j = 0; j < p; ++j) tp = mul(tp, t);
            t = tp;
        }
        if (s >= p) throw std::logic_error("trace left the prime subfield");
        trace_[a] = s;
    }

    primitive_ = 0;
    for (int a = 1; a < q_; ++a) {
        int t = a, order = 1;
        while (t != 1) { t = mul(t, a); ++order; }
        if (order == q_ - 1) { primitive_ = a; break; }
    }
    if (primitive_ == 0) throw std::logic_error("no primitive element found");

    // Evaluation matrix V[w][i] = w^i and its inverse over F_q.
    vander_.assign((size_t)q_ * q_, 0);
    for (int w = 0; w < q_; ++w) {
        int t = 1;
        for (int i = 0; i < q_; ++i) {
            vander_[(size_t)w * q_ + i] = t;
            t = mul(t, w);
        }
    }
    // Gauss-Jordan inverse.
    std::vector<elt> a(vander_), b((size_t)q_ * q_, 0);
    for (int i = 0; i < q_; ++i) b[(size_t)i * q_ + i] = 1;
    for (int col = 0; col < q_; ++col) {
        int piv = -1;
        for (int r = col; r < q_; ++r)
            if (a[(size_t)r * q_ + col] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("evaluation matrix is singular");
        if (piv != col)
            for (int j = 0; j < q_; ++j) {
                std::swap(a[(size_t)piv * q_ + j], a[(size_t)col * q_ + j]);
                std::swap(b[(size_t)piv * q_ + j], b[(size_t)col * q_ + j]);
            }
        int f = inv(a[(size_t)col * q_ + col]);
        for (int j = 0; j < q_; ++j) {
            a[(size_t)col * q_ + j] = mul(a[(size_t)col * q_ + j], f);
            b[(size_t)col * q_ + j] = mul(b[(size_t)col * q_ + j], f);
        }
        for (int r = 0; r < q_; ++r) {
            if (r == col) continue;
            int g = a[(size_t)r * q_ + col];
            if (g == 0) continue;
            for (int j = 0; j < q_; ++j) {
                a[(size_t)r * q_ + j] = sub(a[(size_t)r * q_ + j], mul(g, a[(size_t)col * q_ + j]));
                b[(size_t)r * q_ + j] = sub(b[(size_t)r * q_ + j], mul(g, b[(size_t)col * q_ + j]));
            }
        }
    }
    vander_inv_ = std::move(b);
}

Field::elt Field::inv(elt a) const {
    if (a == 0) throw std::domain_error("inversion of zero field element");
    return inv_[a];
}

Field::elt Field::pow(elt a, long long n) const {
    if (n < 0) throw std::domain_error("negative exponent");
    elt r = 1, t = a;
    while (n > 0) {
        if (n & 1) r = mul(r, t);
        t = mul(t, t);
        n >>= 1;
    }
    return r;
}

} // namespace rmdist
