#include "folia/exterior.hpp"

#include <algorithm>

namespace folia {

VectorField::VectorField(const WeightedRing& r) : ring(r), coeffs(r.nvars(), Poly(r)) {}

bool VectorField::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Poly& p) { return p.is_zero(); });
}

bool VectorField::operator==(const VectorField& o) const {
    return ring == o.ring && coeffs == o.coeffs;
}

VectorField VectorField::operator+(const VectorField& o) const {
    if (ring != o.ring) throw RingMismatchError();
    VectorField r(ring);
    for (int i = 0; i < ring.nvars(); ++i) r.coeffs[i] = coeffs[i] + o.coeffs[i];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    if (ring != o.ring) throw RingMismatchError();
    VectorField r(ring);
    for (int i = 0; i < ring.nvars(); ++i) r.coeffs[i] = coeffs[i] - o.coeffs[i];
    return r;
}

VectorField VectorField::operator*(const Rat& c) const {
    VectorField r(ring);
    for (int i = 0; i < ring.nvars(); ++i) r.coeffs[i] = coeffs[i] * c;
    return r;
}

Poly VectorField::apply(const Poly& p) const {
    Poly out(ring);
    for (int i = 0; i < ring.nvars(); ++i) {
        if (coeffs[i].is_zero()) continue;
        out = out + coeffs[i] * p.partial(i);
    }
    return out;
}

DiffForm::DiffForm(const WeightedRing& ring, int p) : ring_(ring), p_(p) {
    if (p < 0 || p > ring.nvars()) throw IndexError("form degree out of range");
}

// Sorts idx, counting transposition sign; returns 0 on repeated index.
static int normalize_tuple(IndexTuple& idx) {
    int sign = 1;
    // insertion sort with swap counting (tuples are tiny)
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

void DiffForm::add_term(IndexTuple idx, const Poly& poly) {
    if (static_cast<int>(idx.size()) != p_) throw IndexError("index tuple arity");
    if (poly.is_zero()) return;
    if (poly.ring() != ring_) throw RingMismatchError();
    for (int i : idx)
        if (i < 0 || i >= ring_.nvars()) throw IndexError("form index out of range");
    int sign = normalize_tuple(idx);
    if (sign == 0) return;
    Poly add = sign == 1 ? poly : -poly;
    auto it = comps_.find(idx);
    if (it == comps_.end()) {
        comps_.emplace(std::move(idx), std::move(add));
    } else {
        it->second = it->second + add;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

Poly DiffForm::component(const IndexTuple& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? Poly(ring_) : it->second;
}

DiffForm DiffForm::operator+(const DiffForm& o) const {
    if (ring_ != o.ring_) throw RingMismatchError();
    if (p_ != o.p_) throw IndexError("adding forms of different degree");
    DiffForm r = *this;
    for (const auto& [idx, poly] : o.comps_) r.add_term(idx, poly);
    return r;
}

DiffForm DiffForm::operator-(const DiffForm& o) const { return *this + (-o); }

DiffForm DiffForm::operator-() const {
    DiffForm r(ring_, p_);
    for (const auto& [idx, poly] : comps_) r.comps_.emplace(idx, -poly);
    return r;
}

DiffForm DiffForm::operator*(const Poly& f) const {
    DiffForm r(ring_, p_);
    for (const auto& [idx, poly] : comps_) r.add_term(idx, poly * f);
    return r;
}

DiffForm DiffForm::operator*(const Rat& c) const {
    DiffForm r(ring_, p_);
    if (c == 0) return r;
    for (const auto& [idx, poly] : comps_) r.comps_.emplace(idx, poly * c);
    return r;
}

bool DiffForm::operator==(const DiffForm& o) const {
    return ring_ == o.ring_ && p_ == o.p_ && comps_ == o.comps_;
}

bool DiffForm::is_homogeneous() const {
    std::optional<long> d;
    for (const auto& [idx, poly] : comps_) {
        if (!poly.is_homogeneous()) return false;
        long t = poly.weighted_degree();
        for (int i : idx) t += ring_.weights[i];
        if (d && *d != t) return false;
        d = t;
    }
    return true;
}

long DiffForm::total_degree() const {
    if (comps_.empty()) throw ZeroPolynomialError("zero form has no degree");
    std::optional<long> d;
    for (const auto& [idx, poly] : comps_) {
        long t = poly.weighted_degree();
        for (int i : idx) t += ring_.weights[i];
        if (d && *d != t) throw InhomogeneousError("form is not homogeneous");
        d = t;
    }
    return *d;
}

DiffForm wedge(const DiffForm& u, const DiffForm& v) {
    if (u.ring() != v.ring()) throw RingMismatchError();
    DiffForm r(u.ring(), u.form_degree() + v.form_degree());
    IndexTuple merged;
    for (const auto& [ia, pa] : u.components()) {
        for (const auto& [ib, pb] : v.components()) {
            merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            r.add_term(merged, pa * pb);
        }
    }
    return r;
}

DiffForm exterior_derivative(const DiffForm& u) {
    DiffForm r(u.ring(), u.form_degree() + 1);
    IndexTuple ext;
    for (const auto& [idx, poly] : u.components()) {
        for (int i = 0; i < u.ring().nvars(); ++i) {
            Poly d = poly.partial(i);
            if (d.is_zero()) continue;
            ext.clear();
            ext.push_back(i);
            ext.insert(ext.end(), idx.begin(), idx.end());
            r.add_term(ext, d);
        }
    }
    return r;
}

DiffForm exterior_derivative(const Poly& f) {
    DiffForm u(f.ring(), 0);
    u.add_term({}, f);
    return exterior_derivative(u);
}

DiffForm contract(const VectorField& X, const DiffForm& u) {
    if (X.ring != u.ring()) throw RingMismatchError();
    if (u.form_degree() == 0) return DiffForm(u.ring(), 0);
    DiffForm r(u.ring(), u.form_degree() - 1);
    for (const auto& [idx, poly] : u.components()) {
        for (std::size_t l = 0; l < idx.size(); ++l) {
            const Poly& b = X.coeffs[idx[l]];
            if (b.is_zero()) continue;
            IndexTuple rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t j = 0; j < idx.size(); ++j)
                if (j != l) rest.push_back(idx[j]);
            Poly term = poly * b;
            if (l % 2 == 1) term = -term;
            r.add_term(rest, term);
        }
    }
    return r;
}

VectorField radial_field(const WeightedRing& ring) {
    VectorField R(ring);
    for (int i = 0; i < ring.nvars(); ++i)
        R.coeffs[i] = variable(ring, i) * Rat(ring.weights[i]);
    return R;
}

bool descends(const DiffForm& u) {
    if (!u.is_homogeneous()) throw InhomogeneousError();
    return contract(radial_field(u.ring()), u).is_zero();
}

DiffForm volume_form(const WeightedRing& ring) {
    DiffForm v(ring, ring.nvars());
    IndexTuple all(ring.nvars());
    for (int i = 0; i < ring.nvars(); ++i) all[i] = i;
    v.add_term(all, Poly(ring, Rat(1)));
    return v;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    if (X.ring != Y.ring) throw RingMismatchError();
    VectorField r(X.ring);
    for (int i = 0; i < X.ring.nvars(); ++i)
        r.coeffs[i] = X.apply(Y.coeffs[i]) - Y.apply(X.coeffs[i]);
    return r;
}

DiffForm pullback(std::span<const Poly> fs, const WeightedRing& target, const DiffForm& u) {
    if (u.ring() != target) throw RingMismatchError("pullback: form not over the map's target");
    if (static_cast<int>(fs.size()) != target.nvars()) throw ArityError("pullback: tuple arity");
    const WeightedRing& source = fs[0].ring();
    std::vector<DiffForm> dfs;
    dfs.reserve(fs.size());
    for (const Poly& f : fs) dfs.push_back(exterior_derivative(f));
    DiffForm r(source, u.form_degree());
    for (const auto& [idx, poly] : u.components()) {
        DiffForm piece(source, 0);
        piece.add_term({}, poly.substitute(fs));
        for (int i : idx) piece = wedge(piece, dfs[i]);
        r = r + piece;
    }
    return r;
}

} // namespace folia
