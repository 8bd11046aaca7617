#pragma once

#include "rmdist/field.hpp"
#include "rmdist/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rmdist {

// Coefficient vector over the ring's graded-lex monomial basis.
using RingElt = std::vector<uint16_t>;

// F_q[x_1..x_v] / <monomials of total degree n>. The basis lists every
// exponent tuple with total degree <= n-1 in graded-lex order, so
// homogeneous components are contiguous slices.
class QuotRing {
public:
    QuotRing(const Field& f, int v, int n);

    const Field& field() const { return *f_; }
    int vars() const { return v_; }
    int trunc() const { return n_; }
    int dim() const { return dim_; }

    const std::vector<std::vector<uint8_t>>& basis() const { return basis_; }
    const std::vector<uint8_t>& mono(int i) const { return basis_[i]; }
    int mono_degree(int i) const { return deg_[i]; }
    // Index of an exponent tuple, or -1 when its degree is >= n.
    int mono_index(const std::vector<uint8_t>& t) const;
    // First basis index of degree k (slice [hom_begin(k), hom_begin(k+1))).
    int hom_begin(int k) const { return hom_begin_[k]; }
    int hom_dim(int k) const { return hom_begin_[k + 1] - hom_begin_[k]; }

    // Number of elements q^dim, valid while it fits in 64 bits.
    long long size() const;
    long long unit_count() const; // (q-1) q^{dim-1}

    RingElt zero() const { return RingElt(dim_, 0); }
    RingElt one() const;
    RingElt monomial_elt(int i) const;
    bool is_zero(const RingElt& a) const;
    bool is_unit(const RingElt& a) const { return a[0] != 0; }

    RingElt add(const RingElt& a, const RingElt& b) const;
    RingElt sub(const RingElt& a, const RingElt& b) const;
    RingElt scale(int c, const RingElt& a) const;
    RingElt mul(const RingElt& a, const RingElt& b) const;
    RingElt mul_mono(const RingElt& a, int mono_idx) const;
    // Inverse of a unit by the geometric series in the nilpotent part.
    RingElt invert(const RingElt& u) const;
    RingElt power(RingElt a, long long k) const;

    // Element enumeration: base-q digits over the basis, index in [0, size()).
    RingElt elt_from_index(long long idx) const;
    long long index_of_elt(const RingElt& a) const;

    // Support gcd factorization of a nonzero element: S is the basis index
    // of the unique monomial with S | c, S x_i ∤ c; red is the unit with
    // mono(S) * red == c.
    struct SRed { int s_mono; RingElt red; };
    SRed s_and_red(const RingElt& c) const;

    // Multiplicative order of a unit.
    long long unit_order(const RingElt& u) const;

private:
    const Field* f_;
    int v_, n_, dim_;
    std::vector<std::vector<uint8_t>> basis_;
    std::vector<int> deg_;
    std::vector<int> hom_begin_;
    std::map<std::vector<uint8_t>, int> index_;
    std::vector<int32_t> mulmono_; // dim x dim: product monomial index or -1
};

// F_q-subspace of a QuotRing in canonical (RREF) form. Values compare
// equal iff they are the same subspace.
struct Subspace {
    Mat basis; // RREF rows, width = ring dim

    int dim() const { return basis.rows; }
    int codim() const { return basis.cols - basis.rows; }
    bool contains(const RingElt& x) const { return rowspace_contains(basis, x); }
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const {
        return basis.rows == o.basis.rows && basis.a == o.basis.a;
    }
    bool operator<(const Subspace& o) const {
        if (basis.rows != o.basis.rows) return basis.rows < o.basis.rows;
        return basis.a < o.basis.a;
    }
    std::string key() const;
    // Every element, enumerated from the basis rows (q^dim of them).
    std::vector<RingElt> elements(const QuotRing& R) const;
};

Subspace subspace_from_rows(const QuotRing& R, const std::vector<RingElt>& rows);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace whole_ring(const QuotRing& R);
Subspace zero_subspace(const QuotRing& R);

// Closes the span of the generators under multiplication by each variable.
Subspace ideal_span(const QuotRing& R, const std::vector<RingElt>& gens);
bool is_ideal(const QuotRing& R, const Subspace& s);

// Dimension of {f in R/I : x_i f = 0 in R/I for all i}.
int socle_dim(const QuotRing& R, const Subspace& I);

} // namespace rmdist
