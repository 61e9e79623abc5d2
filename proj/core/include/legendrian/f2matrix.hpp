#pragma once

// Small dense GF(2) linear algebra: ranks, kernels, solving. Sizes here are
// tiny (tens of generators), so plain byte rows are fine.

#include <optional>
#include <vector>

namespace legendrian {

using F2Vec = std::vector<unsigned char>;

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, F2Vec(cols, 0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    unsigned char get(int r, int c) const { return a_[r][c]; }
    void set(int r, int c, int v) { a_[r][c] = static_cast<unsigned char>(v & 1); }
    void flip(int r, int c) { a_[r][c] ^= 1; }
    const F2Vec& row(int r) const { return a_[r]; }

    F2Vec apply(const F2Vec& x) const;        // y = A x
    int rank() const;
    std::vector<F2Vec> kernel_basis() const;  // vectors x with A x = 0
    std::vector<F2Vec> column_space_basis() const;
    std::optional<F2Vec> solve(const F2Vec& b) const;  // one solution of A x = b

    static F2Matrix from_columns(int rows, const std::vector<F2Vec>& cols);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<F2Vec> a_;
};

// Greedily extends `base` by vectors from `extra` keeping independence;
// returns indices into `extra` that were added.
std::vector<int> extend_basis(std::vector<F2Vec> base, const std::vector<F2Vec>& extra);

int rank_of(const std::vector<F2Vec>& vecs);

}  // namespace legendrian
