#include "folia/catalog.hpp"

#include <numeric>

namespace folia {

WeightVector::WeightVector(std::vector<int> weights) : e(std::move(weights)) {
    if (e.empty()) throw ArityError("empty weight vector");
    for (int w : e)
        if (w <= 0) throw DegreeMismatchError("weights must be positive");
}

int WeightVector::gcd() const {
    int g = 0;
    for (int w : e) g = std::gcd(g, w);
    return g;
}

long WeightVector::sum() const {
    long s = 0;
    for (int w : e) s += w;
    return s;
}

long pullback_degree(long delta, long k) {
    if (k < 1) throw DegreeMismatchError("map degree must be positive");
    return k * delta;
}

GoodDegrees good_degrees(const WeightVector& e, long lo, long hi) {
    if (e.e.size() != 3) throw ArityError("need exactly three weights");
    GoodDegrees out;
    out.period = static_cast<long>(e.e[0]) * e.e[1] * e.e[2];
    const long s = e.sum();
    for (long delta = std::max(lo, s); delta <= hi; ++delta) {
        bool good = true;
        for (int i = 0; i < 3 && good; ++i) {
            bool some_j = false;
            for (int j = 0; j < 3 && !some_j; ++j)
                some_j = ((delta - s + e.e[j]) % e.e[i] == 0);
            good = some_j;
        }
        if (good) out.degrees.push_back(delta);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lie families

// Y_r = sum_i coeffs[i] * z_{i+r} d/dz_i on the (m+1)-variable ring.
static VectorField band_field(const WeightedRing& R, int r, const std::vector<Rat>& coeffs) {
    VectorField Y(R);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            Y.coeffs[i] = variable(R, static_cast<int>(i) + r) * coeffs[i];
    return Y;
}

static VectorField diag_field(const WeightedRing& R, const std::vector<Rat>& coeffs) {
    VectorField X(R);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) X.coeffs[i] = variable(R, static_cast<int>(i)) * coeffs[i];
    return X;
}

static void verify_brackets(const LieAlgebraSpec& spec) {
    const int dim = static_cast<int>(spec.generators.size());
    for (const BracketExpectation& b : spec.brackets) {
        if (b.lhs < 0 || b.rhs < 0 || b.lhs >= dim || b.rhs >= dim ||
            static_cast<int>(b.in_basis.size()) != dim)
            throw BracketMismatchError("malformed bracket expectation");
        VectorField expect(spec.generators[0].ring);
        for (int s = 0; s < dim; ++s)
            if (b.in_basis[s] != 0) expect = expect + spec.generators[s] * b.in_basis[s];
        const VectorField got = lie_bracket(spec.generators[b.lhs], spec.generators[b.rhs]);
        if (!(got == expect))
            throw BracketMismatchError("bracket [" + std::to_string(b.lhs) + "," +
                                       std::to_string(b.rhs) + "] disagrees");
    }
}

static std::vector<Rat> unit(int dim, int s, const Rat& c) {
    std::vector<Rat> v(dim, Rat(0));
    v[s] = c;
    return v;
}

LieAlgebraSpec lie_family(const std::string& name, int m) {
    LieAlgebraSpec spec;
    spec.name = name;
    if (name == "aff") {
        spec.m = 3;
        const WeightedRing R = projective_ring(4);
        spec.generators.push_back(diag_field(R, {0, 1, 2, 3}));
        spec.generators.push_back(band_field(R, 1, {1, 1, 1}));
        spec.brackets.push_back({0, 1, unit(2, 1, Rat(1))});
    } else if (name == "g(m)") {
        if (m < 3) throw ArityError("g(m) needs m >= 3");
        spec.m = m;
        const WeightedRing R = projective_ring(m + 1);
        std::vector<Rat> diag;
        for (int j = 0; j <= m; ++j) diag.push_back(Rat(m - 2 * j));
        spec.generators.push_back(diag_field(R, diag));
        const int dim = m - 1;
        for (int r = 1; r <= m - 2; ++r) {
            spec.generators.push_back(band_field(R, r, std::vector<Rat>(m - r + 1, Rat(1))));
            spec.brackets.push_back({0, r, unit(dim, r, Rat(-2 * r))});
        }
        for (int l = 1; l <= m - 2; ++l)
            for (int r = l + 1; r <= m - 2; ++r)
                spec.brackets.push_back({l, r, std::vector<Rat>(dim, Rat(0))});
    } else if (name == "g6") {
        spec.m = 6;
        const WeightedRing R = projective_ring(7);
        spec.generators.push_back(diag_field(R, {6, 4, 2, 0, -2, -4, -6}));
        spec.generators.push_back(band_field(R, 1, {1, 1, 1, 1, 1, 1}));
        spec.generators.push_back(band_field(R, 2, {9, -3, -7, -3, 9}));
        spec.generators.push_back(band_field(R, 3, {12, 4, -4, -12}));
        spec.generators.push_back(band_field(R, 4, {8, 8, 8}));
        const int dim = 5;
        for (int r = 1; r <= 4; ++r)
            spec.brackets.push_back({0, r, unit(dim, r, Rat(-2 * r))});
        spec.brackets.push_back({1, 2, unit(dim, 3, Rat(1))}); // [Y1,Y2] = Y3
        spec.brackets.push_back({1, 3, unit(dim, 4, Rat(1))}); // [Y1,Y3] = Y4
        spec.brackets.push_back({1, 4, std::vector<Rat>(dim, Rat(0))});
        spec.brackets.push_back({2, 3, std::vector<Rat>(dim, Rat(0))});
        spec.brackets.push_back({2, 4, std::vector<Rat>(dim, Rat(0))});
        spec.brackets.push_back({3, 4, std::vector<Rat>(dim, Rat(0))});
    } else if (name == "g7") {
        spec.m = 7;
        const WeightedRing R = projective_ring(8);
        spec.generators.push_back(diag_field(R, {7, 5, 3, 1, -1, -3, -5, -7}));
        spec.generators.push_back(band_field(R, 1, {0, 2, 2, 2, 2, 2, 2}));
        spec.generators.push_back(band_field(R, 2, {0, 0, Rat(-5, 2), -5, -10, -20}));
        spec.generators.push_back(band_field(R, 3, {0, 5, 5, 10, 20}));
        spec.generators.push_back(band_field(R, 4, {0, 0, -10, -20}));
        spec.generators.push_back(band_field(R, 5, {0, 20, 20}));
        const int dim = 6;
        for (int r = 1; r <= 5; ++r)
            spec.brackets.push_back({0, r, unit(dim, r, Rat(-2 * r))});
        spec.brackets.push_back({1, 2, unit(dim, 3, Rat(1))});      // [Y1,Y2] = Y3
        spec.brackets.push_back({1, 3, unit(dim, 4, Rat(1))});      // [Y1,Y3] = Y4
        spec.brackets.push_back({1, 4, unit(dim, 5, Rat(1))});      // [Y1,Y4] = Y5
        spec.brackets.push_back({1, 5, std::vector<Rat>(dim, Rat(0))});
        spec.brackets.push_back({2, 3, unit(dim, 5, Rat(-5) / 2)}); // [Y2,Y3] = -5/2 Y5
        spec.brackets.push_back({2, 4, std::vector<Rat>(dim, Rat(0))});
        spec.brackets.push_back({2, 5, std::vector<Rat>(dim, Rat(0))});
        spec.brackets.push_back({3, 4, std::vector<Rat>(dim, Rat(0))});
        spec.brackets.push_back({3, 5, std::vector<Rat>(dim, Rat(0))});
        spec.brackets.push_back({4, 5, std::vector<Rat>(dim, Rat(0))});
    } else {
        throw ParseError("unknown family: " + name);
    }
    if (static_cast<int>(spec.generators.size()) != spec.m - 1)
        throw ArityError("generator count");
    verify_brackets(spec);
    return spec;
}

Foliation lie_foliation(const LieAlgebraSpec& spec) {
    return split_form_from_fields(spec.generators).fol;
}

// ---------------------------------------------------------------------------
// census

static CensusRow lie_row(const std::string& family, int n_min, long k,
                         const LieAlgebraSpec& spec, const std::string& generic) {
    CensusRow row;
    row.family = family;
    row.n_min = n_min;
    row.k = k;
    row.degree = pullback_degree(spec.m + 1, k);
    const Foliation fol = lie_foliation(spec);
    row.status = (fol.delta == spec.m + 1) ? "ok" : "degree mismatch";
    row.generic_element = generic;
    return row;
}

static CensusRow log_row(int n, long k) {
    // Three linear factors on P^n with residues summing to zero against the
    // degrees; the simplest logarithmic representative.
    CensusRow row;
    row.family = "log";
    row.n_min = 4;
    row.k = 1;
    row.degree = 3;
    const WeightedRing R = projective_ring(n + 1);
    Poly f2(R);
    for (int i = 0; i <= n; ++i) f2 = f2 + variable(R, i);
    const Foliation fol =
        logarithmic_form({variable(R, 0), variable(R, 1), f2}, {Rat(1), Rat(2), Rat(-3)});
    row.status = (fol.delta == 3) ? "ok" : "degree mismatch";
    row.generic_element = "(f0 f1 f2) (df0/f0 + 2 df1/f1 - 3 df2/f2), deg f_i = 1";
    (void)k;
    return row;
}

static CensusRow make_row(const std::string& family, int n, long k) {
    if (family == "log") {
        if (n < 4) throw AmbientError("log family needs n >= 4");
        return log_row(n, k);
    }
    if (family == "E") {
        if (n < 5) throw AmbientError("E family needs n >= 5");
        return lie_row("E", 5, k, lie_family("aff"),
                       "F^*(omega(aff)), F: P^n --> P^3 of degree k");
    }
    if (family.rfind("g(", 0) == 0) {
        const int m = std::stoi(family.substr(2));
        if (n < m + 2) throw AmbientError("g(m) family needs n >= m+2");
        return lie_row(family, m + 2, k, lie_family("g(m)", m),
                       "F^*(omega(g(" + std::to_string(m) + "))), F: P^n --> P^" +
                           std::to_string(m) + " of degree k");
    }
    if (family == "g6") {
        if (n < 8) throw AmbientError("g6 family needs n >= 8");
        return lie_row("g6", 8, k, lie_family("g6"),
                       "F^*(omega(g6)), F: P^n --> P^6 of degree k");
    }
    if (family == "g7") {
        if (n < 9) throw AmbientError("g7 family needs n >= 9");
        return lie_row("g7", 9, k, lie_family("g7"),
                       "F^*(omega(g7)), F: P^n --> P^7 of degree k");
    }
    throw ParseError("unknown family: " + family);
}

std::vector<CensusRow> component_census(int n, long k, const std::string& family) {
    return {make_row(family, n, k)};
}

std::vector<CensusRow> component_census(int n, long k) {
    if (k < 1) throw DegreeMismatchError("map degree must be positive");
    std::vector<CensusRow> rows;
    if (n >= 4) rows.push_back(make_row("log", n, k));
    if (n >= 5) rows.push_back(make_row("E", n, k));
    for (int m = 3; m + 2 <= n && m <= 7; ++m)
        rows.push_back(make_row("g(" + std::to_string(m) + ")", n, k));
    if (n >= 8) rows.push_back(make_row("g6", n, k));
    if (n >= 9) rows.push_back(make_row("g7", n, k));
    return rows;
}

} // namespace folia
