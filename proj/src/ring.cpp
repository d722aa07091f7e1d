#include "folia/ring.hpp"

#include <algorithm>
#include <sstream>

namespace folia {

WeightedRing::WeightedRing(std::vector<int> w) : weights(std::move(w)) {
    if (weights.empty()) throw Error("ring needs at least one variable");
    for (int e : weights)
        if (e <= 0) throw Error("weights must be strictly positive");
}

WeightedRing projective_ring(int nvars) {
    return WeightedRing(std::vector<int>(nvars, 1));
}

long weighted_degree_of(const WeightedRing& ring, const Expvec& e) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(ring.weights[i]) * e[i];
    return d;
}

bool GrevlexDesc::operator()(const Expvec& a, const Expvec& b) const {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) da += static_cast<long>(weights[i]) * a[i];
    for (std::size_t i = 0; i < b.size(); ++i) db += static_cast<long>(weights[i]) * b[i];
    if (da != db) return da > db;
    // reverse lex: last differing exponent; larger there means smaller
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

Poly::Poly(const WeightedRing& ring) : ring_(ring), terms_(GrevlexDesc{ring.weights}) {}

Poly::Poly(const WeightedRing& ring, const Rat& constant) : Poly(ring) {
    if (constant != 0) terms_.emplace(Expvec(ring.nvars(), 0), constant);
}

void Poly::add_term(const Expvec& exps, const Rat& coef) {
    if (coef == 0) return;
    if (static_cast<int>(exps.size()) != ring_.nvars()) throw ArityError("exponent vector length");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    if (ring_ != o.ring_) throw RingMismatchError();
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (ring_ != o.ring_) throw RingMismatchError();
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (ring_ != o.ring_) throw RingMismatchError();
    Poly r(ring_);
    const int n = ring_.nvars();
    Expvec e(n);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (ring_ != o.ring_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

const Expvec& Poly::leading_exps() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of zero");
    return terms_.begin()->first;
}

const Rat& Poly::leading_coef() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading coefficient of zero");
    return terms_.begin()->second;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = weighted_degree_of(ring_, terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (weighted_degree_of(ring_, e) != d) return false;
    return true;
}

long Poly::weighted_degree() const {
    if (terms_.empty()) throw ZeroPolynomialError();
    long d = weighted_degree_of(ring_, terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (weighted_degree_of(ring_, e) != d) throw InhomogeneousError();
    return d;
}

Poly Poly::partial(int i) const {
    if (i < 0 || i >= ring_.nvars()) throw IndexError("partial: variable index");
    Poly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Expvec d = e;
        d[i] -= 1;
        r.add_term(d, c * Rat(e[i]));
    }
    return r;
}

Poly Poly::substitute(std::span<const Poly> fs) const {
    if (static_cast<int>(fs.size()) != ring_.nvars()) throw ArityError("substitute: tuple arity");
    if (fs.empty()) throw ArityError("substitute: empty tuple");
    const WeightedRing& out = fs[0].ring();
    // degree consistency: deg f_i = k*e_i for one k across nonzero entries
    std::optional<long> k;
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        if (fs[i].ring() != out) throw RingMismatchError("substitute: mixed source rings");
        if (fs[i].is_zero()) continue;
        long d = fs[i].weighted_degree();
        long e = ring_.weights[i];
        if (d % e != 0) throw DegreeMismatchError("substitute: deg f_i not a multiple of e_i");
        long ki = d / e;
        if (k && *k != ki) throw DegreeMismatchError("substitute: no common map degree");
        k = ki;
    }
    // cached powers per variable
    std::vector<std::vector<Poly>> pows(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) pows[i].push_back(Poly(out, Rat(1)));
    Poly result(out);
    for (const auto& [e, c] : terms_) {
        Poly term(out, c);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            while (static_cast<int>(pows[i].size()) <= e[i]) pows[i].push_back(pows[i].back() * fs[i]);
            if (e[i] > 0) term = term * pows[i][e[i]];
        }
        result = result + term;
    }
    return result;
}

std::string Poly::str(const std::string& varname) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        bool unit = (a == 1);
        bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (!unit || constant) os << rat_to_string(a);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!unit || !constant) os << "*";
            unit = false; constant = false;
            os << varname << i;
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

Poly monomial(const WeightedRing& ring, const Expvec& exps, const Rat& coef) {
    Poly p(ring);
    p.add_term(exps, coef);
    return p;
}

Poly variable(const WeightedRing& ring, int i) {
    if (i < 0 || i >= ring.nvars()) throw IndexError("variable index");
    Expvec e(ring.nvars(), 0);
    e[i] = 1;
    return monomial(ring, e);
}

static void enumerate_rec(const WeightedRing& ring, int var, long remaining, Expvec& cur,
                          std::vector<Expvec>& out) {
    if (var == ring.nvars() - 1) {
        if (remaining % ring.weights[var] == 0) {
            cur[var] = static_cast<int>(remaining / ring.weights[var]);
            out.push_back(cur);
            cur[var] = 0;
        }
        return;
    }
    for (long a = 0; a * ring.weights[var] <= remaining; ++a) {
        cur[var] = static_cast<int>(a);
        enumerate_rec(ring, var + 1, remaining - a * ring.weights[var], cur, out);
    }
    cur[var] = 0;
}

std::vector<Expvec> monomials_of_degree(const WeightedRing& ring, long delta) {
    std::vector<Expvec> out;
    if (delta < 0) return out;
    Expvec cur(ring.nvars(), 0);
    enumerate_rec(ring, 0, delta, cur, out);
    std::sort(out.begin(), out.end(), GrevlexDesc{ring.weights});
    return out;
}

long graded_dimension(const WeightedRing& ring, long delta) {
    if (delta < 0) return 0;
    return static_cast<long>(monomials_of_degree(ring, delta).size());
}

Poly random_homogeneous(const WeightedRing& ring, long delta, Rng& rng, long bound) {
    Poly p(ring);
    for (const Expvec& e : monomials_of_degree(ring, delta)) p.add_term(e, Rat(rng.nonzero(bound)));
    return p;
}

} // namespace folia
