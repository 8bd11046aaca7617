#pragma once

#include "rmdist/quotring.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace rmdist {

// Matrix M(S, j) of a degree-m coefficient sequence S: rows indexed by
// exponent tuples of degree m-j, columns by tuples of degree j, entry
// S[s + t]. For v = 2 this is an ordinary Hankel matrix.
Mat hankel_matrix(const QuotRing& R, const std::vector<uint16_t>& S, int m, int j);

// Homogeneous ideal determined by a nonzero degree-n0 sequence S:
// I(k) = ker M(S,k) for k <= n0, I(k) = V(k) above. n0 = 0 yields the
// maximal ideal. Asserts socle dimension 1 and codim = sum of ranks.
struct SocleOneIdeal {
    Subspace ideal;
    int n0 = 0;
    int codim = 0;
    std::vector<int> ranks; // rank M(S,k) for k = 0..n0
};

SocleOneIdeal ideal_from_sequence(const QuotRing& R, const std::vector<uint16_t>& S, int n0);

// All ideals with one-dimensional socle: one per projective class of S per
// n0 in 0..n-1 (n0 = 0 contributing the maximal ideal).
std::vector<SocleOneIdeal> enumerate_socle1(const QuotRing& R);

// Exact codimension enumerator F_n(z) as codim -> count, plus the stated
// bound and the tighter aggregated rank bound, evaluated on a z grid.
struct CodimEnumerator {
    std::map<int, long long> coeff;
    long long total() const;
    double eval(double z) const;
};

CodimEnumerator codim_enumerator(const QuotRing& R,
                                 const std::vector<SocleOneIdeal>& socle1);

struct BoundCheckRow {
    double z;
    double lhs, rhs;
    bool holds;
};

// F_n(z) <= z^{2 C(ceil(n/2)+v, v)} q^{C(n+v-2, v-1)} q/(q-1)^2 on the grid.
std::vector<BoundCheckRow> check_fn_bound(const QuotRing& R, const CodimEnumerator& F,
                                          const std::vector<double>& zs);

// Exponent of the tighter aggregated rank bound
// sum_k C(min(k, n-1-k)+v-1, v-1).
long long tight_codim_exponent(int n, int v);

// Enumerator in z^{codim of I ∩ x_T R inside x_T R} over socle-1 ideals,
// with the comparison bound q/(q-1)^2 q^{C(n+v-2,v-1)-C(n-|T|+v-2,v-1)}
// + F_{n-|T|}(z) (second term 0 when |T| >= n).
struct XTEnumeratorResult {
    std::map<int, long long> coeff;
    std::vector<BoundCheckRow> bound_rows;
};

XTEnumeratorResult codim_enumerator_xt(const QuotRing& R,
                                       const std::vector<SocleOneIdeal>& socle1,
                                       const std::vector<int>& T,
                                       const std::vector<double>& zs);

// Every x_i-closed subspace, by scanning all subspaces in echelon form.
std::vector<Subspace> brute_all_ideals(const QuotRing& R);

// All subspaces of F_q^dim (echelon-form enumeration); the building block
// for brute_all_ideals and test oracles.
std::vector<Subspace> all_subspaces(const QuotRing& R);

} // namespace rmdist
