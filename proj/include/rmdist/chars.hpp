#pragma once

#include "rmdist/quotring.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace rmdist {

// Additive character psi_u(r) = zeta_p^{phase(r)} with
// phase(r) = sum_i tr(u_i r_i) over the ring basis; u ranges over F_q^dim,
// which enumerates the full dual of the additive group exactly once.
struct AdditiveChar {
    const QuotRing* ring = nullptr;
    std::vector<uint16_t> u;

    int phase(const RingElt& r) const; // in [0, p)
    std::complex<double> value(const RingElt& r) const;
    bool is_trivial() const;
    // Character a -> psi(c a).
    AdditiveChar shifted(const RingElt& c) const;
};

std::vector<AdditiveChar> additive_chars(const QuotRing& R);

// Largest ideal contained in ker(psi): {c : psi(c r) = 1 for all r}.
Subspace k_psi(const AdditiveChar& psi);

// Number of units d with psi(d c) = 1.
long long g_value(const AdditiveChar& psi, const RingElt& c);

// Cyclic decomposition of the unit group with a full discrete-log table.
struct UnitGroup {
    const QuotRing* ring = nullptr;
    std::vector<RingElt> generators;
    std::vector<long long> orders;           // product equals |units|
    std::vector<RingElt> units;              // enumeration order
    std::map<long long, int> unit_index;     // ring element index -> position
    std::vector<std::vector<int>> dlog;      // per unit, exponent vector

    long long size() const { return (long long)units.size(); }
    int index_of(const RingElt& u) const;
};

UnitGroup unit_group_decompose(const QuotRing& R);

// Multiplicative character determined by exponents against the generator
// decomposition. Phases are exact integers modulo phase_mod.
struct MultChar {
    const UnitGroup* ug = nullptr;
    std::vector<long long> k;
    long long phase_mod = 1; // lcm of generator orders

    long long phase(const RingElt& u) const; // in [0, phase_mod)
    std::complex<double> value(const RingElt& u) const;
    bool is_trivial() const;
    MultChar inverse() const;
};

// All characters of the unit group; optionally restricted to those trivial
// on the scalar subgroup F_q^* and/or on 1 + I.
std::vector<MultChar> mult_chars(const UnitGroup& ug,
                                 bool trivial_on_scalars = false,
                                 const Subspace* trivial_on_one_plus = nullptr);

std::complex<double> gauss_sum(const MultChar& chi, const AdditiveChar& psi);

// One row per nontrivial (chi, psi) pair. 'stated' is |R||K_psi| [chi(1+K)=1];
// 'refined' subtracts |m||J| [chi(1+J)=1] for K strictly below the maximal
// ideal, with J = (K : m), and equals |R||m| [chi(1+m)=1] when K = m.
struct GaussCheck {
    long long pairs = 0;
    long long stated_failures = 0;
    long long refined_failures = 0;
    double max_stated_err = 0, max_refined_err = 0;
};

GaussCheck verify_gauss_formula(const QuotRing& R, double tol_scale = 1e-6);

// Kernel-count check g(psi,c) = (p-1)|R|/p * [c in K_psi] over a chosen c
// scope, plus the exact piecewise form (always true) as a cross-check.
struct KernelCheck {
    long long cases = 0;
    long long stated_failures = 0;      // all c in R
    long long stated_failures_shift = 0; // c of the form unit - 1
    long long piecewise_failures = 0;
};

KernelCheck verify_kernel_lemma(const QuotRing& R);

// Groups the |R| additive characters by K_psi and compares each ideal's
// count with (|R|/|I|) * {1, 1-1/q, 0} keyed by socle dimension.
struct AdditiveCountCheck {
    long long ideals = 0;
    long long mismatches = 0;
};

AdditiveCountCheck verify_additive_count(const QuotRing& R,
                                         const std::vector<Subspace>& all_ideals);

} // namespace rmdist
