#include "rmdist/chars.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rmdist {

namespace {
constexpr double PI = 3.14159265358979323846;
}

int AdditiveChar::phase(const RingElt& r) const {
    const Field& F = ring->field();
    int s = 0;
    for (int i = 0; i < ring->dim(); ++i) {
        if (u[i] == 0 || r[i] == 0) continue;
        s += F.trace(F.mul(u[i], r[i]));
    }
    return s % F.p();
}

std::complex<double> AdditiveChar::value(const RingElt& r) const {
    int ph = phase(r);
    double ang = 2.0 * PI * ph / ring->field().p();
    return {std::cos(ang), std::sin(ang)};
}

bool AdditiveChar::is_trivial() const {
    for (auto x : u)
        if (x) return false;
    return true;
}

AdditiveChar AdditiveChar::shifted(const RingElt& c) const {
    // The new functional is r -> phase(c r). Per basis slot j we need
    // u'_j with tr(u'_j t) = phase(c t b_j) for all t; the trace form is
    // nondegenerate, so a match exists and checking on t = p^0..p^{e-1}
    // pins it down.
    const Field& F = ring->field();
    const int p = F.p(), e = F.e(), q = F.q();
    AdditiveChar out{ring, std::vector<uint16_t>((size_t)ring->dim(), 0)};
    for (int j = 0; j < ring->dim(); ++j) {
        RingElt cbj = ring->mul_mono(c, j);
        // target values on the F_p-basis elements of F_q (indices p^d)
        std::vector<int> target(e);
        {
            int be = 1;
            for (int d = 0; d < e; ++d) {
                target[d] = phase(ring->scale(be, cbj));
                be *= p;
            }
        }
        int found = -1;
        for (int cand = 0; cand < q; ++cand) {
            bool ok = true;
            int be = 1;
            for (int d = 0; d < e && ok; ++d) {
                ok = F.trace(F.mul(cand, be)) == target[d];
                be *= p;
            }
            if (ok) { found = cand; break; }
        }
        if (found < 0) throw std::logic_error("trace form failed to represent shifted character");
        out.u[j] = (uint16_t)found;
    }
    return out;
}

std::vector<AdditiveChar> additive_chars(const QuotRing& R) {
    long long total = R.size();
    if (total > (1LL << 20)) throw std::overflow_error("too many additive characters to enumerate");
    std::vector<AdditiveChar> cs;
    cs.reserve(total);
    for (long long idx = 0; idx < total; ++idx)
        cs.push_back(AdditiveChar{&R, R.elt_from_index(idx)});
    return cs;
}

Subspace k_psi(const AdditiveChar& psi) {
    const QuotRing& R = *psi.ring;
    const Field& F = R.field();
    const int p = F.p(), e = F.e(), dim = R.dim();
    // F_p-linear conditions on the e*dim digits of c: phase(c * w_d b_j) = 0
    // for every F_p-basis scalar w_d and basis monomial b_j. Build the
    // condition matrix column by column from digit basis elements.
    const int ncols = e * dim;
    std::vector<std::vector<int>> cond; // rows over F_p
    // digit basis element: coefficient i set to p^d
    std::vector<RingElt> digit_elt(ncols, R.zero());
    for (int i = 0; i < dim; ++i) {
        int be = 1;
        for (int d = 0; d < e; ++d) {
            digit_elt[i * e + d][i] = (uint16_t)be;
            be *= p;
        }
    }
    for (int j = 0; j < dim; ++j) {
        int be = 1;
        for (int d = 0; d < e; ++d) {
            RingElt m = R.monomial_elt(j);
            m[j] = (uint16_t)be;
            be *= p;
            std::vector<int> row(ncols);
            bool nz = false;
            for (int col = 0; col < ncols; ++col) {
                row[col] = psi.phase(R.mul(digit_elt[col], m));
                nz = nz || row[col] != 0;
            }
            if (nz) cond.push_back(std::move(row));
        }
    }
    // Kernel over F_p by Gaussian elimination.
    int rank = 0;
    std::vector<int> pivot_of_col(ncols, -1);
    for (int col = 0; col < ncols && rank < (int)cond.size(); ++col) {
        int piv = -1;
        for (int r = rank; r < (int)cond.size(); ++r)
            if (cond[r][col] % p != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(cond[rank], cond[piv]);
        int inv = 0;
        for (int t = 1; t < p; ++t)
            if (cond[rank][col] * t % p == 1) { inv = t; break; }
        for (int j2 = 0; j2 < ncols; ++j2) cond[rank][j2] = cond[rank][j2] * inv % p;
        for (int r = 0; r < (int)cond.size(); ++r) {
            if (r == rank) continue;
            int g = cond[r][col] % p;
            if (g == 0) continue;
            for (int j2 = 0; j2 < ncols; ++j2)
                cond[r][j2] = ((cond[r][j2] - g * cond[rank][j2]) % p + p) % p;
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<RingElt> kernel_elts;
    for (int col = 0; col < ncols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        // free column: build the corresponding kernel vector
        std::vector<int> digits(ncols, 0);
        digits[col] = 1;
        for (int c2 = 0; c2 < ncols; ++c2) {
            int r = pivot_of_col[c2];
            if (r >= 0) digits[c2] = (p - cond[r][col] % p) % p;
        }
        RingElt elt = R.zero();
        for (int i = 0; i < dim; ++i) {
            int val = 0, be = 1;
            for (int d = 0; d < e; ++d) {
                val += digits[i * e + d] * be;
                be *= p;
            }
            elt[i] = (uint16_t)val;
        }
        kernel_elts.push_back(std::move(elt));
    }
    Subspace K = subspace_from_rows(R, kernel_elts);
    // The kernel is an ideal, hence F_q-closed: dimensions must agree.
    long long fp_size = 1;
    for (size_t i = 0; i < kernel_elts.size(); ++i) fp_size *= p;
    long long fq_size = 1;
    for (int i = 0; i < K.dim(); ++i) fq_size *= F.q();
    if (fp_size != fq_size) throw std::logic_error("K_psi is not F_q-closed");
    if (!is_ideal(R, K)) throw std::logic_error("K_psi failed ideal closure");
    return K;
}

long long g_value(const AdditiveChar& psi, const RingElt& c) {
    const QuotRing& R = *psi.ring;
    long long total = R.size(), count = 0;
    for (long long idx = 0; idx < total; ++idx) {
        RingElt d = R.elt_from_index(idx);
        if (!R.is_unit(d)) continue;
        if (psi.phase(R.mul(d, c)) == 0) ++count;
    }
    return count;
}

int UnitGroup::index_of(const RingElt& u) const {
    auto it = unit_index.find(ring->index_of_elt(u));
    if (it == unit_index.end()) throw std::invalid_argument("not a unit of this ring");
    return it->second;
}

UnitGroup unit_group_decompose(const QuotRing& R) {
    UnitGroup G;
    G.ring = &R;
    long long total = R.size();
    if (R.unit_count() > (1LL << 20)) throw std::overflow_error("unit group too large");
    for (long long idx = 0; idx < total; ++idx) {
        RingElt u = R.elt_from_index(idx);
        if (R.is_unit(u)) {
            G.unit_index[idx] = (int)G.units.size();
            G.units.push_back(std::move(u));
        }
    }
    const long long n_units = (long long)G.units.size();

    // Greedy basis construction: repeatedly adjoin an element of maximal
    // order in the quotient by the current subgroup, corrected inside the
    // subgroup so its power relation becomes trivial.
    std::map<long long, std::vector<int>> sub; // element index -> dlog
    sub[R.index_of_elt(R.one())] = {};
    while ((long long)sub.size() < n_units) {
        // order in quotient = min k > 0 with u^k in subgroup
        long long best_ord = 0;
        int best_u = -1;
        for (int ui = 0; ui < (int)G.units.size(); ++ui) {
            if (sub.count(R.index_of_elt(G.units[ui]))) continue;
            RingElt t = G.units[ui];
            long long k = 1;
            while (!sub.count(R.index_of_elt(t))) {
                t = R.mul(t, G.units[ui]);
                ++k;
            }
            if (k > best_ord) { best_ord = k; best_u = ui; }
        }
        RingElt g = G.units[best_u];
        long long m = best_ord;
        // g^m lies in the subgroup; absorb it: find s in subgroup with
        // s^m = (g^m)^{-1}, replace g by g*s so the new generator has
        // true order m and splits off as a direct factor.
        RingElt gm = R.power(g, m);
        std::vector<int> t_dlog = sub.at(R.index_of_elt(gm));
        std::vector<int> s_dlog(G.generators.size(), 0);
        bool solvable = true;
        for (size_t i = 0; i < G.generators.size(); ++i) {
            long long oi = G.orders[i];
            long long ti = ((long long)(oi - t_dlog[i])) % oi; // want s^m = gm^{-1}
            // solve m * x = ti (mod oi)
            long long gcd = std::gcd(m % oi, oi);
            if (ti % gcd != 0) { solvable = false; break; }
            long long mo = m % oi, x = -1;
            for (long long cand = 0; cand < oi; ++cand)
                if (mo * cand % oi == ti) { x = cand; break; }
            if (x < 0) { solvable = false; break; }
            s_dlog[i] = (int)x;
        }
        if (!solvable) throw std::logic_error("unit group basis extension failed");
        RingElt s = R.one();
        for (size_t i = 0; i < G.generators.size(); ++i)
            s = R.mul(s, R.power(G.generators[i], s_dlog[i]));
        g = R.mul(g, s);
        if (R.power(g, m) != R.one()) throw std::logic_error("corrected generator order mismatch");

        // extend subgroup: new dlog = old dlog + exponent on g
        std::map<long long, std::vector<int>> next;
        for (const auto& [idx, dl] : sub) {
            RingElt base = R.elt_from_index(idx);
            RingElt cur = base;
            for (long long k = 0; k < m; ++k) {
                std::vector<int> dl2 = dl;
                dl2.push_back((int)k);
                long long ci = R.index_of_elt(cur);
                if (next.count(ci)) throw std::logic_error("dlog collision; not a direct factor");
                next[ci] = std::move(dl2);
                cur = R.mul(cur, g);
            }
        }
        sub = std::move(next);
        G.generators.push_back(g);
        G.orders.push_back(m);
    }
    long long prod = 1;
    for (auto o : G.orders) prod *= o;
    if (prod != n_units) throw std::logic_error("unit decomposition size mismatch");
    G.dlog.resize(n_units);
    for (const auto& [idx, dl] : sub) G.dlog[G.unit_index.at(idx)] = dl;
    return G;
}

long long MultChar::phase(const RingElt& u) const {
    const UnitGroup& G = *ug;
    const auto& dl = G.dlog[G.index_of(u)];
    long long ph = 0;
    for (size_t i = 0; i < G.orders.size(); ++i) {
        long long step = phase_mod / G.orders[i];
        ph = (ph + (k[i] % G.orders[i]) * dl[i] % phase_mod * step) % phase_mod;
    }
    return ((ph % phase_mod) + phase_mod) % phase_mod;
}

std::complex<double> MultChar::value(const RingElt& u) const {
    long long ph = phase(u);
    double ang = 2.0 * PI * (double)ph / (double)phase_mod;
    return {std::cos(ang), std::sin(ang)};
}

bool MultChar::is_trivial() const {
    for (size_t i = 0; i < k.size(); ++i)
        if (k[i] % ug->orders[i] != 0) return false;
    return true;
}

MultChar MultChar::inverse() const {
    MultChar c = *this;
    for (size_t i = 0; i < k.size(); ++i) c.k[i] = (ug->orders[i] - k[i] % ug->orders[i]) % ug->orders[i];
    return c;
}

std::vector<MultChar> mult_chars(const UnitGroup& ug, bool trivial_on_scalars,
                                 const Subspace* trivial_on_one_plus) {
    const QuotRing& R = *ug.ring;
    const Field& F = R.field();
    long long L = 1;
    for (auto o : ug.orders) L = std::lcm(L, o);
    if (L == 0) L = 1;

    // constraint subgroup elements, by direct enumeration
    std::vector<RingElt> constraint;
    if (trivial_on_scalars)
        for (int a = 1; a < F.q(); ++a) constraint.push_back(R.scale(a, R.one()));
    if (trivial_on_one_plus)
        for (auto& x : trivial_on_one_plus->elements(R))
            constraint.push_back(R.add(R.one(), x));

    std::vector<MultChar> out;
    long long total = 1;
    for (auto o : ug.orders) total *= o;
    std::vector<long long> k(ug.orders.size(), 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (size_t i = 0; i < ug.orders.size(); ++i) {
            k[i] = t % ug.orders[i];
            t /= ug.orders[i];
        }
        MultChar chi{&ug, k, L};
        bool ok = true;
        for (const auto& h : constraint)
            if (chi.phase(h) != 0) { ok = false; break; }
        if (ok) out.push_back(chi);
    }
    return out;
}

std::complex<double> gauss_sum(const MultChar& chi, const AdditiveChar& psi) {
    const UnitGroup& G = *chi.ug;
    std::complex<double> s = 0;
    for (const auto& u : G.units) s += chi.value(u) * psi.value(u);
    return s;
}

namespace {

Subspace maximal_ideal(const QuotRing& R) {
    std::vector<RingElt> rows;
    for (int i = 1; i < R.dim(); ++i) rows.push_back(R.monomial_elt(i));
    return subspace_from_rows(R, rows);
}

// (K : m) = {w : w x_i in K for all i}
Subspace colon_with_maximal(const QuotRing& R, const Subspace& K) {
    const Field& F = R.field();
    Mat sys(F, 0, R.dim());
    for (int x = 0; x < R.vars(); ++x) {
        std::vector<uint8_t> var(R.vars(), 0);
        var[x] = 1;
        int vi = R.mono_index(var);
        std::vector<std::vector<uint16_t>> resid(R.dim());
        for (int t = 0; t < R.dim(); ++t)
            resid[t] = reduce_against(K.basis, R.mul_mono(R.monomial_elt(t), vi));
        for (int coord = 0; coord < R.dim(); ++coord) {
            std::vector<uint16_t> row(R.dim());
            bool nz = false;
            for (int t = 0; t < R.dim(); ++t) {
                row[t] = resid[t][coord];
                nz = nz || row[t] != 0;
            }
            if (nz) sys.append_row(row);
        }
    }
    Subspace J;
    J.basis = kernel(sys);
    return J;
}

long long subspace_size(const QuotRing& R, const Subspace& s) {
    long long sz = 1;
    for (int i = 0; i < s.dim(); ++i) sz *= R.field().q();
    return sz;
}

// [chi(1 + S) = 1] by direct enumeration of the coset.
bool chi_trivial_on_one_plus(const MultChar& chi, const QuotRing& R, const Subspace& S) {
    for (auto& x : S.elements(R))
        if (chi.phase(R.add(R.one(), x)) != 0) return false;
    return true;
}

} // namespace

GaussCheck verify_gauss_formula(const QuotRing& R, double tol_scale) {
    GaussCheck out;
    const double tol = tol_scale * (double)R.size() * (double)R.size();
    auto psis = additive_chars(R);
    UnitGroup ug = unit_group_decompose(R);
    auto chis = mult_chars(ug);
    Subspace m = maximal_ideal(R);
    const long long m_size = subspace_size(R, m);

    for (const auto& psi : psis) {
        if (psi.is_trivial()) continue;
        Subspace K = k_psi(psi);
        long long K_size = subspace_size(R, K);
        bool K_is_m = (K == m);
        Subspace J = K_is_m ? whole_ring(R) : colon_with_maximal(R, K);
        long long J_size = subspace_size(R, J);
        for (const auto& chi : chis) {
            if (chi.is_trivial()) continue;
            double g2 = std::norm(gauss_sum(chi, psi));
            double stated = (double)R.size() * (double)K_size *
                            (chi_trivial_on_one_plus(chi, R, K) ? 1.0 : 0.0);
            double refined;
            if (K_is_m) {
                refined = (double)R.size() * (double)m_size *
                          (chi_trivial_on_one_plus(chi, R, m) ? 1.0 : 0.0);
            } else {
                refined = (double)R.size() * (double)K_size *
                              (chi_trivial_on_one_plus(chi, R, K) ? 1.0 : 0.0) -
                          (double)m_size * (double)J_size *
                              (chi_trivial_on_one_plus(chi, R, J) ? 1.0 : 0.0);
            }
            ++out.pairs;
            double es = std::abs(g2 - stated), er = std::abs(g2 - refined);
            out.max_stated_err = std::max(out.max_stated_err, es);
            out.max_refined_err = std::max(out.max_refined_err, er);
            if (es > tol) ++out.stated_failures;
            if (er > tol) ++out.refined_failures;
        }
    }
    return out;
}

KernelCheck verify_kernel_lemma(const QuotRing& R) {
    KernelCheck out;
    const Field& F = R.field();
    const long long lemma_value = (F.p() - 1) * R.size() / F.p();
    Subspace m = maximal_ideal(R);
    auto psis = additive_chars(R);
    const long long total = R.size();
    for (const auto& psi : psis) {
        if (psi.is_trivial()) continue;
        Subspace K = k_psi(psi);
        bool K_is_m = (K == m);
        Subspace J = K_is_m ? whole_ring(R) : colon_with_maximal(R, K);
        for (long long idx = 0; idx < total; ++idx) {
            RingElt c = R.elt_from_index(idx);
            long long g = g_value(psi, c);
            long long stated = K.contains(c) ? lemma_value : 0;
            // exact piecewise value
            long long piecewise;
            if (K.contains(c)) piecewise = R.unit_count();
            else if (J.contains(c)) piecewise = R.size() / F.p() - R.size() / F.q();
            else piecewise = R.unit_count() / F.p();
            ++out.cases;
            // c = u - 1 for a unit u iff c0 + 1 != 0
            bool shift_scope = (F.add((int)c[0], 1) != 0);
            if (g != stated) {
                ++out.stated_failures;
                if (shift_scope) ++out.stated_failures_shift;
            }
            if (g != piecewise) ++out.piecewise_failures;
        }
    }
    return out;
}

AdditiveCountCheck verify_additive_count(const QuotRing& R,
                                         const std::vector<Subspace>& all_ideals) {
    AdditiveCountCheck out;
    const Field& F = R.field();
    std::map<std::string, long long> observed;
    for (const auto& psi : additive_chars(R)) {
        if (psi.is_trivial()) {
            observed[whole_ring(R).key()]++;
            continue;
        }
        observed[k_psi(psi).key()]++;
    }
    for (const auto& I : all_ideals) {
        ++out.ideals;
        int sd = socle_dim(R, I);
        long long Isz = subspace_size(R, I);
        long long predicted;
        if (sd == 0) predicted = R.size() / Isz;
        else if (sd == 1) predicted = R.size() / Isz * (F.q() - 1) / F.q();
        else predicted = 0;
        long long got = observed.count(I.key()) ? observed.at(I.key()) : 0;
        if (got != predicted) ++out.mismatches;
    }
    // every observed kernel must be one of the supplied ideals
    long long covered = 0;
    for (const auto& I : all_ideals) covered += observed.count(I.key()) ? observed.at(I.key()) : 0;
    long long seen = 0;
    for (auto& [k, v] : observed) seen += v;
    if (covered != seen) ++out.mismatches;
    return out;
}

} // namespace rmdist
