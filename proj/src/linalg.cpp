#include "folia/linalg.hpp"

#include <algorithm>

namespace folia {

void RatMatrix::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw IndexError("matrix index");
    if (v == 0)
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

Rat RatMatrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw IndexError("matrix index");
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rat(0) : it->second;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
    return t;
}

RatMatrix RatMatrix::vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.cols_) throw AmbientMismatchError("vstack: column mismatch");
    RatMatrix s(a.rows_ + b.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) s.data_[r] = a.data_[r];
    for (int r = 0; r < b.rows_; ++r) s.data_[a.rows_ + r] = b.data_[r];
    return s;
}

// ---------------------------------------------------------------------------
// elimination core

// Multiplies a row by the lcm of denominators, then divides by the gcd of
// numerators. Keeps entries integral and primitive between combinations.
static void strip_content(std::map<int, Rat>& row) {
    if (row.empty()) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [c, v] : row) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    for (auto& [c, v] : row) {
        mpq_class w = v * den_lcm;
        w.canonicalize();
        v = w;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
    }
    if (num_gcd > 1) {
        for (auto& [c, v] : row) {
            mpq_class w = v / num_gcd;
            w.canonicalize();
            v = w;
        }
    }
}

int echelonize(std::vector<std::map<int, Rat>>& rows, int cols) {
    for (auto& r : rows) strip_content(r);
    int rank = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int col = 0; col < cols && rank < nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r) {
            auto it = rows[r].begin();
            if (it != rows[r].end() && it->first == col) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        const Rat p = rows[rank].begin()->second;
        for (int r = rank + 1; r < nrows; ++r) {
            auto it = rows[r].begin();
            if (it == rows[r].end() || it->first != col) continue;
            const Rat q = it->second;
            // fraction-free combination: p*row_r - q*row_pivot
            std::map<int, Rat> combined;
            for (const auto& [c, v] : rows[r]) combined[c] = v * p;
            for (const auto& [c, v] : rows[rank]) {
                auto jt = combined.find(c);
                if (jt == combined.end()) {
                    combined.emplace(c, -(v * q));
                } else {
                    jt->second -= v * q;
                    if (jt->second == 0) combined.erase(jt);
                }
            }
            strip_content(combined);
            rows[r] = std::move(combined);
        }
        ++rank;
    }
    return rank;
}

// Echelon -> reduced echelon with unit pivots.
static void back_substitute(std::vector<std::map<int, Rat>>& rows, int rank) {
    for (int i = rank - 1; i >= 0; --i) {
        const int pc = rows[i].begin()->first;
        const Rat inv = Rat(1) / rows[i].begin()->second;
        for (auto& [c, v] : rows[i]) {
            v *= inv;
            v.canonicalize();
        }
        for (int j = 0; j < i; ++j) {
            auto it = rows[j].find(pc);
            if (it == rows[j].end()) continue;
            const Rat f = it->second;
            for (const auto& [c, v] : rows[i]) {
                auto jt = rows[j].find(c);
                if (jt == rows[j].end()) {
                    Rat nv = -(v * f);
                    if (nv != 0) rows[j].emplace(c, nv);
                } else {
                    jt->second -= v * f;
                    if (jt->second == 0) rows[j].erase(jt);
                }
            }
        }
    }
}

static std::vector<std::map<int, Rat>> matrix_rows(const RatMatrix& M) {
    std::vector<std::map<int, Rat>> rows;
    rows.reserve(M.rows());
    for (int r = 0; r < M.rows(); ++r)
        if (!M.row(r).empty()) rows.push_back(M.row(r));
    return rows;
}

int rank(const RatMatrix& M) {
    auto rows = matrix_rows(M);
    return echelonize(rows, M.cols());
}

static std::vector<std::vector<Rat>> rref_rows_dense(std::vector<std::map<int, Rat>> rows, int cols) {
    int rk = echelonize(rows, cols);
    back_substitute(rows, rk);
    std::vector<std::vector<Rat>> out;
    out.reserve(rk);
    for (int i = 0; i < rk; ++i) {
        std::vector<Rat> v(cols, Rat(0));
        for (const auto& [c, val] : rows[i]) v[c] = val;
        out.push_back(std::move(v));
    }
    return out;
}

Subspace Subspace::from_vectors(int ambient, const std::vector<std::vector<Rat>>& vecs) {
    std::vector<std::map<int, Rat>> rows;
    for (const auto& v : vecs) {
        if (static_cast<int>(v.size()) != ambient) throw AmbientMismatchError("vector length");
        std::map<int, Rat> row;
        for (int c = 0; c < ambient; ++c)
            if (v[c] != 0) row.emplace(c, v[c]);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    Subspace s(ambient);
    int rk = echelonize(rows, ambient);
    back_substitute(rows, rk);
    for (int i = 0; i < rk; ++i) {
        std::vector<Rat> v(ambient, Rat(0));
        for (const auto& [c, val] : rows[i]) v[c] = val;
        s.basis_.push_back(std::move(v));
    }
    return s;
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw AmbientMismatchError();
    std::vector<Rat> w = v;
    for (const auto& b : basis_) {
        int pc = 0;
        while (pc < ambient_ && b[pc] == 0) ++pc;
        if (w[pc] == 0) continue;
        const Rat f = w[pc]; // pivot of b is 1
        for (int c = pc; c < ambient_; ++c)
            if (b[c] != 0) w[c] -= f * b[c];
    }
    return std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; });
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel_basis(const RatMatrix& M) {
    auto rows = matrix_rows(M);
    int rk = echelonize(rows, M.cols());
    back_substitute(rows, rk);
    std::vector<int> pivot_of_col(M.cols(), -1);
    for (int i = 0; i < rk; ++i) pivot_of_col[rows[i].begin()->first] = i;
    std::vector<std::vector<Rat>> kern;
    for (int c = 0; c < M.cols(); ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<Rat> v(M.cols(), Rat(0));
        v[c] = 1;
        for (int i = 0; i < rk; ++i) {
            auto it = rows[i].find(c);
            if (it != rows[i].end()) v[rows[i].begin()->first] = -it->second;
        }
        kern.push_back(std::move(v));
    }
    return Subspace::from_vectors(M.cols(), kern);
}

Subspace row_space(const RatMatrix& M) {
    auto rows = matrix_rows(M);
    std::vector<std::vector<Rat>> dense = rref_rows_dense(std::move(rows), M.cols());
    return Subspace::from_vectors(M.cols(), dense);
}

Subspace span_sum(const Subspace& U, const Subspace& V) {
    if (U.ambient_dim() != V.ambient_dim()) throw AmbientMismatchError();
    std::vector<std::vector<Rat>> all = U.basis();
    all.insert(all.end(), V.basis().begin(), V.basis().end());
    return Subspace::from_vectors(U.ambient_dim(), all);
}

} // namespace folia
