#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folia/errors.hpp"
#include "folia/rational.hpp"
#include "folia/rng.hpp"

namespace folia {

// Graded polynomial ring: coefficients are exact rationals, the grading is
// given by a strictly positive weight vector (all ones for ordinary
// projective space).
struct WeightedRing {
    std::vector<int> weights;

    WeightedRing() = default;
    explicit WeightedRing(std::vector<int> w);

    int nvars() const { return static_cast<int>(weights.size()); }

    bool operator==(const WeightedRing& o) const { return weights == o.weights; }
    bool operator!=(const WeightedRing& o) const { return !(*this == o); }
};

// Standard ring of P^n: n+1 variables, all weights 1.
WeightedRing projective_ring(int nvars);

using Expvec = std::vector<int>;

long weighted_degree_of(const WeightedRing& ring, const Expvec& e);

// Graded reverse lexicographic order, descending (so that map iteration
// visits the leading term first). Ties on weighted degree break on the
// last differing exponent; larger exponent there means smaller monomial.
struct GrevlexDesc {
    std::vector<int> weights;
    bool operator()(const Expvec& a, const Expvec& b) const;
};

class Poly {
public:
    using TermMap = std::map<Expvec, Rat, GrevlexDesc>;

    Poly() = default;
    explicit Poly(const WeightedRing& ring);
    Poly(const WeightedRing& ring, const Rat& constant);

    const WeightedRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    void add_term(const Expvec& exps, const Rat& coef);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Leading term w.r.t. grevlex. Precondition: nonzero.
    const Expvec& leading_exps() const;
    const Rat& leading_coef() const;

    bool is_homogeneous() const;

    // Weighted degree of a homogeneous polynomial. Throws
    // ZeroPolynomialError / InhomogeneousError.
    long weighted_degree() const;

    // Formal partial derivative w.r.t. variable i.
    Poly partial(int i) const;

    // Composite a(f_0,...,f_{m}); the f_i live in a common ring and must be
    // homogeneous of degree k*e_i for one k. Throws ArityError /
    // DegreeMismatchError.
    Poly substitute(std::span<const Poly> fs) const;

    std::string str(const std::string& varname = "x") const;

private:
    WeightedRing ring_;
    TermMap terms_;
};

Poly monomial(const WeightedRing& ring, const Expvec& exps, const Rat& coef = Rat(1));
Poly variable(const WeightedRing& ring, int i);

// Monomials of weighted degree delta in canonical (descending grevlex)
// order. Empty for delta < 0.
std::vector<Expvec> monomials_of_degree(const WeightedRing& ring, long delta);

// Number of monomials of weighted degree delta.
long graded_dimension(const WeightedRing& ring, long delta);

// Every monomial of degree delta gets a nonzero integer coefficient drawn
// from [-bound, bound]. Deterministic for a fixed Rng state.
Poly random_homogeneous(const WeightedRing& ring, long delta, Rng& rng, long bound = 9);

} // namespace folia
