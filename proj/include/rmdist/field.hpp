#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rmdist {

// Table-based arithmetic for GF(p^e). Elements are indices in [0, q) that
// encode coordinate vectors over F_p in the polynomial basis: the element
// with index sum c_i * p^i has coordinates (c_0, ..., c_{e-1}), so index 0
// is the additive identity and index 1 is the multiplicative identity.
// Index c < p is the constant c, i.e. the prime subfield sits at the low
// indices.
class Field {
public:
    using elt = int;

    // Constructs GF(p^e). When no modulus is given, the monic irreducible
    // of degree e whose coefficient vector (c_0..c_{e-1}) is smallest as a
    // base-p integer is chosen, so encodings are reproducible.
    // The modulus, when given, lists (c_0, ..., c_{e-1}) of
    // x^e + c_{e-1} x^{e-1} + ... + c_0 and must be irreducible.
    Field(int p, int e, std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    elt add(elt a, elt b) const { return add_[a * q_ + b]; }
    elt sub(elt a, elt b) const { return add_[a * q_ + neg_[b]]; }
    elt neg(elt a) const { return neg_[a]; }
    elt mul(elt a, elt b) const { return mul_[a * q_ + b]; }
    elt inv(elt a) const;
    elt pow(elt a, long long n) const;

    // Trace to the prime subfield, returned as an integer in [0, p).
    int trace(elt a) const { return trace_[a]; }

    elt primitive_element() const { return primitive_; }

    const std::vector<int>& modulus() const { return modulus_; }

    // q x q evaluation matrix V[w][i] = w^i and its inverse, used by the
    // per-axis grid transforms.
    const std::vector<elt>& vandermonde() const { return vander_; }
    const std::vector<elt>& vandermonde_inv() const { return vander_inv_; }

private:
    int p_, e_, q_;
    std::vector<int> modulus_;
    std::vector<elt> add_, mul_, neg_, inv_, trace_;
    std::vector<elt> vander_, vander_inv_;
    elt primitive_;
};

} // namespace rmdist
