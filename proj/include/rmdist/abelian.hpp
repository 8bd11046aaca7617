#pragma once

#include "rmdist/chars.hpp"

#include <cstdint>
#include <vector>

namespace rmdist {

// Finite abelian group presented as Z_{o_1} x ... x Z_{o_m}. Elements and
// characters are exponent vectors; character phases are exact integers
// modulo lcm(o_i).
struct AbelianGroup {
    std::vector<long long> orders;

    long long size() const;
    long long lcm_order() const;
    std::vector<long long> element(long long idx) const;
    long long index(const std::vector<long long>& e) const;
    std::vector<long long> add(const std::vector<long long>& a,
                               const std::vector<long long>& b) const;
    // chi_k(g) phase in [0, lcm): sum k_i g_i lcm/o_i.
    long long chi_phase(const std::vector<long long>& k,
                        const std::vector<long long>& g) const;
    // subgroup generated by the given elements, as sorted element indices
    std::vector<long long> subgroup(const std::vector<std::vector<long long>>& gens) const;
};

// Number of character tuples (chi_1..chi_n) with chi_i trivial on G_i and
// prod chi_i = chi on H; brute force and the closed form
// |H∩K|/|H| prod |G|/|G_i| [chi(H∩K)=1], K = ∩G_i.
struct TupleCountResult {
    long long brute = 0;
    long long closed_form = 0;
};

TupleCountResult char_tuple_count(const AbelianGroup& G,
                                  const std::vector<std::vector<long long>>& subgroups_Gi,
                                  const std::vector<long long>& H,
                                  const std::vector<long long>& chi);

// Per-variable unit statistics over a truncated ring: orders of the linear
// units, the mean of |sum_a chi(x_l - a)| over all characters, and the
// informational curve-sum ratio.
struct UnitStatistics {
    // one entry per a in F_q^*: order of 1 - a x_l (equals the order of
    // x_l - a modulo scalars) and the plain order of x_l - a
    std::vector<long long> normalized_orders;
    std::vector<long long> plain_orders;
    long long claimed_order = 0; // p^{ceil(log_p n)}
    double mean_abs = 0;         // E_chi |sum_a chi(x_l - a)|
    double mean_bound = 0;       // (q-1)/sqrt(p-1)
    double weil_max_ratio = 0;   // max_chi |sum_a chi(1 - a x_l)| / reference
};

UnitStatistics unit_statistics(const QuotRing& R, const UnitGroup& ug, int var_index);

// Exhaustive check that products prod (1 + a_i x_1)^{m_i} with up to
// max_factors distinct a_i and exponents 1..ord-1 never collapse to 1.
bool check_product_independence(const QuotRing& R, int max_factors);

// Probability-bound instance: fraction of constrained character tuples
// (chi_i trivial on F_q^* and on 1+I) whose product matches chi on the
// subgroup generated by the linear units over T0, versus the bound
// (sum_{k<=floor(p/2)} C(q,k) (n/p)^k)^{-|T0|}.
struct ProbabilityBoundResult {
    double fraction = 0;
    double bound = 0;
    bool holds = false;
};

ProbabilityBoundResult check_probability_bound(const QuotRing& R, const UnitGroup& ug,
                                               const Subspace& I,
                                               const std::vector<int>& T0, int seq_len,
                                               const MultChar& chi);

} // namespace rmdist
