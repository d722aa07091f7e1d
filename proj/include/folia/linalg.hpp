#pragma once

#include <map>
#include <vector>

#include "folia/errors.hpp"
#include "folia/rational.hpp"

namespace folia {

// Sparse matrix over the rationals. Values are immutable after assembly.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rat& v);
    Rat get(int r, int c) const;
    const std::map<int, Rat>& row(int r) const { return data_[r]; }

    RatMatrix transpose() const;

    // Stacks another matrix below this one (same column count).
    static RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, Rat>> data_;
};

// Exact row-reduced subspace of Q^ambient. The basis is in reduced row
// echelon form with unit pivots, so equal subspaces compare bit-equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient) {}

    static Subspace from_vectors(int ambient, const std::vector<std::vector<Rat>>& vecs);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<Rat>>& basis() const { return basis_; }

    bool contains(const std::vector<Rat>& v) const;
    bool operator==(const Subspace& o) const;

private:
    int ambient_ = 0;
    std::vector<std::vector<Rat>> basis_; // RREF rows
    friend Subspace span_sum(const Subspace&, const Subspace&);
};

int rank(const RatMatrix& M);
Subspace kernel_basis(const RatMatrix& M);
Subspace row_space(const RatMatrix& M);
Subspace span_sum(const Subspace& U, const Subspace& V);

// Fraction-free forward elimination with per-row content stripping; rows
// are reduced in place to echelon form. Returns the rank. Deterministic:
// pivots are chosen first-nonzero in column-major order.
int echelonize(std::vector<std::map<int, Rat>>& rows, int cols);

} // namespace folia
