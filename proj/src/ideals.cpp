#include "rmdist/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace rmdist {

namespace {

// Exponent tuples of exact total degree d, graded-lex order.
std::vector<std::vector<uint8_t>> tuples_of_degree(int v, int d) {
    std::vector<std::vector<uint8_t>> out;
    std::vector<uint8_t> cur(v, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == v - 1) {
            cur[pos] = (uint8_t)left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = (uint8_t)e;
            rec(pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    if (v == 0) return out;
    rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

long long binom_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

Mat hankel_matrix(const QuotRing& R, const std::vector<uint16_t>& S, int m, int j) {
    const int v = R.vars();
    auto rows_t = tuples_of_degree(v, m - j);
    auto cols_t = tuples_of_degree(v, j);
    auto s_index = tuples_of_degree(v, m);
    std::map<std::vector<uint8_t>, int> sidx;
    for (size_t i = 0; i < s_index.size(); ++i) sidx[s_index[i]] = (int)i;
    if (S.size() != s_index.size()) throw std::invalid_argument("sequence length mismatch");
    Mat M(R.field(), (int)rows_t.size(), (int)cols_t.size());
    for (size_t r = 0; r < rows_t.size(); ++r)
        for (size_t c = 0; c < cols_t.size(); ++c) {
            std::vector<uint8_t> sum(v);
            for (int i = 0; i < v; ++i) sum[i] = (uint8_t)(rows_t[r][i] + cols_t[c][i]);
            M.at((int)r, (int)c) = S[sidx.at(sum)];
        }
    return M;
}

SocleOneIdeal ideal_from_sequence(const QuotRing& R, const std::vector<uint16_t>& S, int n0) {
    const int n = R.trunc(), v = R.vars();
    if (n0 < 0 || n0 > n - 1) throw std::invalid_argument("n0 out of range");
    bool nonzero = false;
    for (auto x : S) nonzero = nonzero || x != 0;
    if (!nonzero) throw std::invalid_argument("zero sequence");

    SocleOneIdeal out;
    out.n0 = n0;
    std::vector<RingElt> rows;
    for (int k = 0; k <= n0; ++k) {
        Mat M = hankel_matrix(R, S, n0, k);
        Mat mm = M;
        int rank = rref(mm);
        out.ranks.push_back(rank);
        out.codim += rank;
        Mat ker = kernel(M);
        auto deg_tuples = tuples_of_degree(v, k);
        for (int i = 0; i < ker.rows; ++i) {
            RingElt e = R.zero();
            for (size_t t = 0; t < deg_tuples.size(); ++t)
                e[R.mono_index(deg_tuples[t])] = ker.at(i, (int)t);
            rows.push_back(std::move(e));
        }
    }
    for (int k = n0 + 1; k < n; ++k)
        for (int i = R.hom_begin(k); i < R.hom_begin(k) + R.hom_dim(k); ++i)
            rows.push_back(R.monomial_elt(i));
    out.ideal = subspace_from_rows(R, rows);
    if (out.ideal.codim() != out.codim) throw std::logic_error("codim != sum of ranks");
    if (!is_ideal(R, out.ideal)) throw std::logic_error("sequence ideal not x_i-closed");
    if (socle_dim(R, out.ideal) != 1) throw std::logic_error("sequence ideal socle dimension != 1");
    return out;
}

std::vector<SocleOneIdeal> enumerate_socle1(const QuotRing& R) {
    const Field& F = R.field();
    const int n = R.trunc(), v = R.vars();
    std::vector<SocleOneIdeal> out;
    for (int n0 = 0; n0 <= n - 1; ++n0) {
        auto deg_tuples = tuples_of_degree(v, n0);
        const int D = (int)deg_tuples.size();
        // projective representatives: first nonzero coordinate scaled to 1
        long long reps = 0;
        std::function<void(int, std::vector<uint16_t>&, bool)> rec =
            [&](int pos, std::vector<uint16_t>& S, bool lead_found) {
                if (pos == D) {
                    if (lead_found) {
                        out.push_back(ideal_from_sequence(R, S, n0));
                        ++reps;
                    }
                    return;
                }
                if (!lead_found) {
                    S[pos] = 0;
                    rec(pos + 1, S, false);
                    S[pos] = 1;
                    rec(pos + 1, S, true);
                    S[pos] = 0;
                } else {
                    for (int c = 0; c < F.q(); ++c) {
                        S[pos] = (uint16_t)c;
                        rec(pos + 1, S, true);
                    }
                    S[pos] = 0;
                }
            };
        std::vector<uint16_t> S(D, 0);
        rec(0, S, false);
        long long expect = 1;
        for (int i = 0; i < D; ++i) expect *= F.q();
        expect = (expect - 1) / (F.q() - 1);
        if (reps != expect) throw std::logic_error("projective class count mismatch");
    }
    // distinctness
    std::vector<std::string> keys;
    for (auto& s : out) keys.push_back(s.ideal.key());
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw std::logic_error("duplicate socle-1 ideal");
    return out;
}

long long CodimEnumerator::total() const {
    long long t = 0;
    for (auto& [c, n] : coeff) t += n;
    return t;
}

double CodimEnumerator::eval(double z) const {
    double s = 0;
    for (auto& [c, n] : coeff) s += (double)n * std::pow(z, c);
    return s;
}

CodimEnumerator codim_enumerator(const QuotRing& R,
                                 const std::vector<SocleOneIdeal>& socle1) {
    (void)R;
    CodimEnumerator F;
    for (const auto& s : socle1) F.coeff[s.codim]++;
    return F;
}

std::vector<BoundCheckRow> check_fn_bound(const QuotRing& R, const CodimEnumerator& F,
                                          const std::vector<double>& zs) {
    const int n = R.trunc(), v = R.vars(), q = R.field().q();
    std::vector<BoundCheckRow> rows;
    long long zexp = 2 * binom_ll((n + 1) / 2 + v, v);
    long long qexp = binom_ll(n + v - 2, v - 1);
    for (double z : zs) {
        double rhs = std::pow(z, (double)zexp) * std::pow((double)q, (double)qexp) *
                     (double)q / ((q - 1.0) * (q - 1.0));
        double lhs = F.eval(z);
        rows.push_back({z, lhs, rhs, lhs <= rhs * (1 + 1e-12)});
    }
    return rows;
}

long long tight_codim_exponent(int n, int v) {
    long long s = 0;
    for (int k = 0; k <= n - 1; ++k) s += binom_ll(std::min(k, n - 1 - k) + v - 1, v - 1);
    return s;
}

XTEnumeratorResult codim_enumerator_xt(const QuotRing& R,
                                       const std::vector<SocleOneIdeal>& socle1,
                                       const std::vector<int>& T,
                                       const std::vector<double>& zs) {
    if (T.empty()) throw std::invalid_argument("T must be nonempty");
    const Field& Fq = R.field();
    const int n = R.trunc(), v = R.vars(), q = Fq.q();
    std::vector<uint8_t> xt(v, 0);
    for (int i : T) xt[i] = 1;
    int xt_idx = R.mono_index(xt);
    XTEnumeratorResult out;
    Subspace xtR =
        xt_idx < 0 ? zero_subspace(R) : ideal_span(R, {R.monomial_elt(xt_idx)});
    for (const auto& s : socle1) {
        Subspace cap = intersect(s.ideal, xtR);
        int rel_codim = xtR.dim() - cap.dim();
        out.coeff[rel_codim]++;
    }
    // comparison bound
    int tsz = (int)T.size();
    long long e1 = binom_ll(n + v - 2, v - 1);
    long long e2 = n - tsz >= 1 ? binom_ll(n - tsz + v - 2, v - 1) : 0;
    CodimEnumerator Fsmall;
    if (n - tsz >= 1) {
        QuotRing Rs(Fq, v, n - tsz);
        Fsmall = codim_enumerator(Rs, enumerate_socle1(Rs));
    }
    for (double z : zs) {
        double lhs = 0;
        for (auto& [c, cnt] : out.coeff) lhs += (double)cnt * std::pow(z, c);
        double rhs = (double)q / ((q - 1.0) * (q - 1.0)) * std::pow((double)q, (double)(e1 - e2)) +
                     Fsmall.eval(z);
        out.bound_rows.push_back({z, lhs, rhs, lhs <= rhs * (1 + 1e-12)});
    }
    return out;
}

std::vector<Subspace> all_subspaces(const QuotRing& R) {
    const Field& F = R.field();
    const int m = R.dim(), q = F.q();
    if (R.size() > (1LL << 12) * 16) throw std::overflow_error("subspace scan too large");
    std::vector<Subspace> out;
    out.push_back(zero_subspace(R));
    // enumerate RREF matrices by rank and pivot-column choice
    for (int r = 1; r <= m; ++r) {
        std::vector<int> piv(r);
        std::function<void(int, int)> choose = [&](int pos, int start) {
            if (pos == r) {
                // free entries: (i, j) with j > piv[i], j not a pivot
                std::vector<std::pair<int, int>> free_cells;
                std::vector<bool> is_piv(m, false);
                for (int i = 0; i < r; ++i) is_piv[piv[i]] = true;
                for (int i = 0; i < r; ++i)
                    for (int j = piv[i] + 1; j < m; ++j)
                        if (!is_piv[j]) free_cells.emplace_back(i, j);
                long long count = 1;
                for (size_t i = 0; i < free_cells.size(); ++i) count *= q;
                for (long long idx = 0; idx < count; ++idx) {
                    Mat M(F, r, m);
                    for (int i = 0; i < r; ++i) M.at(i, piv[i]) = 1;
                    long long t = idx;
                    for (auto& [i, j] : free_cells) {
                        M.at(i, j) = (uint16_t)(t % q);
                        t /= q;
                    }
                    Subspace s;
                    s.basis = std::move(M);
                    out.push_back(std::move(s));
                }
                return;
            }
            for (int c = start; c < m; ++c) {
                piv[pos] = c;
                choose(pos + 1, c + 1);
            }
        };
        choose(0, 0);
    }
    return out;
}

std::vector<Subspace> brute_all_ideals(const QuotRing& R) {
    std::vector<Subspace> out;
    for (auto& s : all_subspaces(R))
        if (is_ideal(R, s)) out.push_back(s);
    return out;
}

} // namespace rmdist
