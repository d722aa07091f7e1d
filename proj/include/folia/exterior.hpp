#pragma once

#include <map>
#include <optional>
#include <vector>

#include "folia/ring.hpp"

namespace folia {

using IndexTuple = std::vector<int>;

// Polynomial vector field on the affine cone: sum of coeffs[i] * d/dx_i.
struct VectorField {
    WeightedRing ring;
    std::vector<Poly> coeffs;

    VectorField() = default;
    explicit VectorField(const WeightedRing& r);

    bool is_zero() const;
    bool operator==(const VectorField& o) const;

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator*(const Rat& c) const;

    // Derivation applied to a polynomial: sum coeffs[i] * dp/dx_i.
    Poly apply(const Poly& p) const;
};

// Homogeneous polynomial p-form on the affine cone. Components are keyed by
// strictly increasing index tuples; insertion normalizes order and sign.
class DiffForm {
public:
    DiffForm() = default;
    DiffForm(const WeightedRing& ring, int p);

    const WeightedRing& ring() const { return ring_; }
    int form_degree() const { return p_; }
    const std::map<IndexTuple, Poly>& components() const { return comps_; }

    bool is_zero() const { return comps_.empty(); }

    // Adds coef*poly * dx_{idx[0]} ^ ... ^ dx_{idx[p-1]}; idx may be
    // unsorted, repeated indices annihilate the term.
    void add_term(IndexTuple idx, const Poly& poly);

    Poly component(const IndexTuple& idx) const;

    DiffForm operator+(const DiffForm& o) const;
    DiffForm operator-(const DiffForm& o) const;
    DiffForm operator-() const;
    DiffForm operator*(const Poly& f) const;
    DiffForm operator*(const Rat& c) const;
    bool operator==(const DiffForm& o) const;
    bool operator!=(const DiffForm& o) const { return !(*this == o); }

    // Total weighted degree (poly degree + sum of dx weights) of a
    // homogeneous form. Throws on zero or inhomogeneous input.
    long total_degree() const;
    bool is_homogeneous() const;

private:
    WeightedRing ring_;
    int p_ = 0;
    std::map<IndexTuple, Poly> comps_;
};

DiffForm wedge(const DiffForm& u, const DiffForm& v);
DiffForm exterior_derivative(const DiffForm& u);
DiffForm exterior_derivative(const Poly& f); // d of a 0-form
DiffForm contract(const VectorField& X, const DiffForm& u);

VectorField radial_field(const WeightedRing& ring);

// i_R(u) == 0 for the radial field of u's ring. Input must be homogeneous.
bool descends(const DiffForm& u);

// dx_{i0} ^ ... ^ dx_{im} with unit coefficient.
DiffForm volume_form(const WeightedRing& ring);

VectorField lie_bracket(const VectorField& X, const VectorField& Y);

// Pullback along the polynomial tuple fs (target variable x_i -> fs[i]):
// coefficients are composed and dx_i becomes d(fs[i]). fs must be
// homogeneous of degrees k*e_i over a common source ring.
DiffForm pullback(std::span<const Poly> fs, const WeightedRing& target, const DiffForm& u);

} // namespace folia
