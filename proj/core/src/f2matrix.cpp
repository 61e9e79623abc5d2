#include "legendrian/f2matrix.hpp"

#include <algorithm>

namespace legendrian {

F2Vec F2Matrix::apply(const F2Vec& x) const {
    F2Vec y(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        unsigned char s = 0;
        for (int c = 0; c < cols_; ++c) s ^= a_[r][c] & x[c];
        y[r] = s;
    }
    return y;
}

namespace {
// row echelon over a copy; returns pivot column per reduced row
std::vector<int> echelon(std::vector<F2Vec>& m, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (m[i][c]) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        for (int i = 0; i < static_cast<int>(m.size()); ++i)
            if (i != r && m[i][c])
                for (int j = c; j < cols; ++j) m[i][j] ^= m[r][j];
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}
}  // namespace

int F2Matrix::rank() const {
    auto m = a_;
    return static_cast<int>(echelon(m, cols_).size());
}

std::vector<F2Vec> F2Matrix::kernel_basis() const {
    auto m = a_;
    auto pivots = echelon(m, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<F2Vec> out;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        F2Vec x(cols_, 0);
        x[c] = 1;
        for (size_t r = 0; r < m.size(); ++r)
            if (m[r][c]) x[pivots[r]] = 1;
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<F2Vec> F2Matrix::column_space_basis() const {
    std::vector<F2Vec> cols;
    for (int c = 0; c < cols_; ++c) {
        F2Vec v(rows_, 0);
        for (int r = 0; r < rows_; ++r) v[r] = a_[r][c];
        cols.push_back(std::move(v));
    }
    std::vector<F2Vec> base;
    auto idx = extend_basis({}, cols);
    for (int i : idx) base.push_back(cols[i]);
    return base;
}

std::optional<F2Vec> F2Matrix::solve(const F2Vec& b) const {
    // eliminate on [A | b]
    std::vector<F2Vec> m(rows_, F2Vec(cols_ + 1, 0));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m[r][c] = a_[r][c];
        m[r][cols_] = b[r];
    }
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (m[i][c]) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        for (int i = 0; i < rows_; ++i)
            if (i != r && m[i][c])
                for (int j = c; j <= cols_; ++j) m[i][j] ^= m[r][j];
        pivots.push_back(c);
        ++r;
    }
    for (int i = r; i < rows_; ++i)
        if (m[i][cols_]) return std::nullopt;
    F2Vec x(cols_, 0);
    for (int i = 0; i < r; ++i) x[pivots[i]] = m[i][cols_];
    return x;
}

F2Matrix F2Matrix::from_columns(int rows, const std::vector<F2Vec>& cols) {
    F2Matrix M(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        for (int r = 0; r < rows; ++r) M.set(r, c, cols[c][r]);
    return M;
}

std::vector<int> extend_basis(std::vector<F2Vec> base, const std::vector<F2Vec>& extra) {
    // maintain an echelonized copy of the growing span
    std::vector<F2Vec> ech;
    auto reduce = [&](F2Vec v) {
        for (const auto& e : ech) {
            int lead = -1;
            for (size_t j = 0; j < e.size(); ++j)
                if (e[j]) {
                    lead = static_cast<int>(j);
                    break;
                }
            if (lead >= 0 && v[lead])
                for (size_t j = 0; j < e.size(); ++j) v[j] ^= e[j];
        }
        return v;
    };
    auto insert = [&](const F2Vec& v) {
        F2Vec r = reduce(v);
        if (std::all_of(r.begin(), r.end(), [](unsigned char x) { return !x; })) return false;
        ech.push_back(r);
        return true;
    };
    for (const auto& v : base) insert(v);
    std::vector<int> added;
    for (int i = 0; i < static_cast<int>(extra.size()); ++i)
        if (insert(extra[i])) added.push_back(i);
    return added;
}

int rank_of(const std::vector<F2Vec>& vecs) { return static_cast<int>(extend_basis({}, vecs).size()); }

}  // namespace legendrian
