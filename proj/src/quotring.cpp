#include "rmdist/quotring.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmdist {

namespace {

void gen_tuples(int v, int maxdeg, std::vector<uint8_t>& cur, int pos, int used,
                std::vector<std::vector<uint8_t>>& out) {
    if (pos == v) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e + used <= maxdeg; ++e) {
        cur[pos] = (uint8_t)e;
        gen_tuples(v, maxdeg, cur, pos + 1, used + e, out);
    }
    cur[pos] = 0;
}

} // namespace

QuotRing::QuotRing(const Field& f, int v, int n) : f_(&f), v_(v), n_(n) {
    if (v < 1) throw std::invalid_argument("ring needs at least one variable");
    if (n < 1) throw std::invalid_argument("truncation degree must be >= 1");
    std::vector<uint8_t> cur(v, 0);
    gen_tuples(v, n - 1, cur, 0, 0, basis_);
    auto degree = [](const std::vector<uint8_t>& t) {
        int d = 0;
        for (auto e : t) d += e;
        return d;
    };
    std::sort(basis_.begin(), basis_.end(), [&](const auto& a, const auto& b) {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    dim_ = (int)basis_.size();
    deg_.resize(dim_);
    for (int i = 0; i < dim_; ++i) {
        deg_[i] = degree(basis_[i]);
        index_[basis_[i]] = i;
    }
    hom_begin_.assign(n + 1, dim_);
    for (int i = dim_ - 1; i >= 0; --i) hom_begin_[deg_[i]] = i;

    mulmono_.assign((size_t)dim_ * dim_, -1);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            if (deg_[i] + deg_[j] >= n) continue;
            std::vector<uint8_t> s(v);
            for (int k = 0; k < v; ++k) s[k] = (uint8_t)(basis_[i][k] + basis_[j][k]);
            mulmono_[(size_t)i * dim_ + j] = (int32_t)index_.at(s);
        }
}

int QuotRing::mono_index(const std::vector<uint8_t>& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? -1 : it->second;
}

long long QuotRing::size() const {
    long long s = 1;
    for (int i = 0; i < dim_; ++i) {
        if (s > (1LL << 62) / f_->q()) throw std::overflow_error("ring too large to enumerate");
        s *= f_->q();
    }
    return s;
}

long long QuotRing::unit_count() const { return size() / f_->q() * (f_->q() - 1); }

RingElt QuotRing::one() const {
    RingElt a(dim_, 0);
    a[0] = 1;
    return a;
}

RingElt QuotRing::monomial_elt(int i) const {
    RingElt a(dim_, 0);
    a[i] = 1;
    return a;
}

bool QuotRing::is_zero(const RingElt& a) const {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

RingElt QuotRing::add(const RingElt& a, const RingElt& b) const {
    RingElt c(dim_);
    for (int i = 0; i < dim_; ++i) c[i] = (uint16_t)f_->add(a[i], b[i]);
    return c;
}

RingElt QuotRing::sub(const RingElt& a, const RingElt& b) const {
    RingElt c(dim_);
    for (int i = 0; i < dim_; ++i) c[i] = (uint16_t)f_->sub(a[i], b[i]);
    return c;
}

RingElt QuotRing::scale(int s, const RingElt& a) const {
    RingElt c(dim_);
    for (int i = 0; i < dim_; ++i) c[i] = (uint16_t)f_->mul(s, a[i]);
    return c;
}

RingElt QuotRing::mul(const RingElt& a, const RingElt& b) const {
    RingElt c(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            int32_t k = mulmono_[(size_t)i * dim_ + j];
            if (k < 0) continue;
            c[k] = (uint16_t)f_->add(c[k], f_->mul(a[i], b[j]));
        }
    }
    return c;
}

RingElt QuotRing::mul_mono(const RingElt& a, int mono_idx) const {
    RingElt c(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        int32_t k = mulmono_[(size_t)i * dim_ + mono_idx];
        if (k < 0) continue;
        c[k] = (uint16_t)f_->add(c[k], a[i]);
    }
    return c;
}

RingElt QuotRing::invert(const RingElt& u) const {
    if (u[0] == 0) throw std::domain_error("cannot invert a non-unit (zero constant term)");
    int c0inv = f_->inv(u[0]);
    // u = c0 (1 + w): inverse = c0^{-1} sum_{t<n} (-w)^t.
    RingElt w = scale(c0inv, u);
    w[0] = 0;
    RingElt acc = one(), term = one();
    for (int t = 1; t < n_; ++t) {
        term = mul(term, w);
        if (is_zero(term)) break;
        acc = (t % 2 == 1) ? sub(acc, term) : add(acc, term);
    }
    return scale(c0inv, acc);
}

RingElt QuotRing::power(RingElt a, long long k) const {
    RingElt r = one();
    while (k > 0) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

RingElt QuotRing::elt_from_index(long long idx) const {
    RingElt a(dim_);
    for (int i = 0; i < dim_; ++i) {
        a[i] = (uint16_t)(idx % f_->q());
        idx /= f_->q();
    }
    return a;
}

long long QuotRing::index_of_elt(const RingElt& a) const {
    long long idx = 0;
    for (int i = dim_ - 1; i >= 0; --i) idx = idx * f_->q() + a[i];
    return idx;
}

QuotRing::SRed QuotRing::s_and_red(const RingElt& c) const {
    if (is_zero(c)) throw std::domain_error("s_and_red of zero");
    std::vector<uint8_t> g(v_, 255);
    for (int i = 0; i < dim_; ++i) {
        if (c[i] == 0) continue;
        for (int k = 0; k < v_; ++k) g[k] = std::min(g[k], basis_[i][k]);
    }
    SRed r;
    r.s_mono = mono_index(g);
    r.red = zero();
    for (int i = 0; i < dim_; ++i) {
        if (c[i] == 0) continue;
        std::vector<uint8_t> t(v_);
        for (int k = 0; k < v_; ++k) t[k] = (uint8_t)(basis_[i][k] - g[k]);
        r.red[mono_index(t)] = c[i];
    }
    return r;
}

long long QuotRing::unit_order(const RingElt& u) const {
    if (u[0] == 0) throw std::domain_error("order of a non-unit");
    RingElt t = u;
    long long ord = 1;
    const RingElt id = one();
    while (t != id) {
        t = mul(t, u);
        ++ord;
        if (ord > (1LL << 40)) throw std::logic_error("runaway unit order");
    }
    return ord;
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.basis.rows; ++i) {
        std::vector<uint16_t> row(other.basis.cols);
        for (int j = 0; j < other.basis.cols; ++j) row[j] = other.basis.at(i, j);
        if (!rowspace_contains(basis, row)) return false;
    }
    return true;
}

std::string Subspace::key() const {
    std::string k;
    k.reserve(basis.a.size() * 2 + 8);
    k += std::to_string(basis.rows);
    k += ':';
    for (auto x : basis.a) {
        k += (char)('0' + x % 64);
        k += (char)('0' + x / 64);
    }
    return k;
}

std::vector<RingElt> Subspace::elements(const QuotRing& R) const {
    const Field& F = R.field();
    std::vector<RingElt> out;
    long long total = 1;
    for (int i = 0; i < basis.rows; ++i) total *= F.q();
    out.reserve(total);
    for (long long idx = 0; idx < total; ++idx) {
        RingElt a = R.zero();
        long long t = idx;
        for (int i = 0; i < basis.rows; ++i) {
            int c = (int)(t % F.q());
            t /= F.q();
            if (c == 0) continue;
            for (int j = 0; j < basis.cols; ++j)
                a[j] = (uint16_t)F.add(a[j], F.mul(c, basis.at(i, j)));
        }
        out.push_back(std::move(a));
    }
    return out;
}

Subspace subspace_from_rows(const QuotRing& R, const std::vector<RingElt>& rows) {
    Subspace s;
    s.basis = Mat(R.field(), 0, R.dim());
    for (const auto& r : rows) s.basis.append_row(r);
    rref(s.basis);
    return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    Subspace s;
    s.basis = intersect_rowspaces(a.basis, b.basis);
    return s;
}

Subspace whole_ring(const QuotRing& R) {
    std::vector<RingElt> rows;
    for (int i = 0; i < R.dim(); ++i) rows.push_back(R.monomial_elt(i));
    return subspace_from_rows(R, rows);
}

Subspace zero_subspace(const QuotRing& R) {
    return subspace_from_rows(R, {});
}

Subspace ideal_span(const QuotRing& R, const std::vector<RingElt>& gens) {
    std::vector<RingElt> rows = gens;
    Subspace s = subspace_from_rows(R, rows);
    // Close under multiplication by each variable to a fixed point.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<RingElt> next;
        for (int i = 0; i < s.basis.rows; ++i) {
            RingElt r(R.dim());
            for (int j = 0; j < R.dim(); ++j) r[j] = s.basis.at(i, j);
            for (int x = 0; x < R.vars(); ++x) {
                std::vector<uint8_t> var(R.vars(), 0);
                var[x] = 1;
                RingElt rx = R.mul_mono(r, R.mono_index(var));
                if (!R.is_zero(rx) && !s.contains(rx)) next.push_back(rx);
            }
        }
        if (!next.empty()) {
            for (int i = 0; i < s.basis.rows; ++i) {
                RingElt r(R.dim());
                for (int j = 0; j < R.dim(); ++j) r[j] = s.basis.at(i, j);
                next.push_back(r);
            }
            s = subspace_from_rows(R, next);
            grew = true;
        }
    }
    return s;
}

bool is_ideal(const QuotRing& R, const Subspace& s) {
    for (int i = 0; i < s.basis.rows; ++i) {
        RingElt r(R.dim());
        for (int j = 0; j < R.dim(); ++j) r[j] = s.basis.at(i, j);
        for (int x = 0; x < R.vars(); ++x) {
            std::vector<uint8_t> var(R.vars(), 0);
            var[x] = 1;
            if (!s.contains(R.mul_mono(r, R.mono_index(var)))) return false;
        }
    }
    return true;
}

int socle_dim(const QuotRing& R, const Subspace& I) {
    const Field& F = R.field();
    // Solutions of x_i f in I for all i, as a kernel over the f coordinates.
    Mat sys(F, 0, R.dim());
    for (int x = 0; x < R.vars(); ++x) {
        std::vector<uint8_t> var(R.vars(), 0);
        var[x] = 1;
        int vi = R.mono_index(var);
        // Residual of x_i * b_t against I, one matrix row per residual coord.
        std::vector<std::vector<uint16_t>> resid(R.dim());
        for (int t = 0; t < R.dim(); ++t)
            resid[t] = reduce_against(I.basis, R.mul_mono(R.monomial_elt(t), vi));
        for (int coord = 0; coord < R.dim(); ++coord) {
            std::vector<uint16_t> row(R.dim());
            bool nonzero = false;
            for (int t = 0; t < R.dim(); ++t) {
                row[t] = resid[t][coord];
                nonzero = nonzero || row[t] != 0;
            }
            if (nonzero) sys.append_row(row);
        }
    }
    Mat W = kernel(sys);
    return W.rows - I.dim();
}

} // namespace rmdist
