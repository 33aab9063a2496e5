#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dunkl {

// Row-sparse square matrix over an exact or floating scalar. Sizes here stay
// small (<= 4096) and operators are banded, so a plain row/(col,value) layout
// is enough.
template <class S>
class SpMat {
public:
    SpMat() = default;
    explicit SpMat(int n) : n_(n), rows_(n) {}

    static SpMat identity(int n) {
        SpMat m(n);
        for (int i = 0; i < n; ++i) m.rows_[i].push_back({i, S(1)});
        return m;
    }

    int size() const { return n_; }
    const std::vector<std::pair<int, S>>& row(int i) const { return rows_[i]; }

    void set(int i, int j, const S& v) {
        if (v == S(0)) return;
        auto& r = rows_[i];
        auto it = r.begin();
        while (it != r.end() && it->first < j) ++it;
        if (it != r.end() && it->first == j)
            it->second = v;
        else
            r.insert(it, {j, v});
    }

    S get(int i, int j) const {
        for (const auto& [c, v] : rows_[i])
            if (c == j) return v;
        return S(0);
    }

    SpMat operator+(const SpMat& o) const { return combined(o, S(1)); }
    SpMat operator-(const SpMat& o) const { return combined(o, S(-1)); }

    SpMat operator*(const S& s) const {
        SpMat out(n_);
        if (s == S(0)) return out;
        out.rows_ = rows_;
        for (auto& r : out.rows_)
            for (auto& [c, v] : r) v *= s;
        return out;
    }

    SpMat operator*(const SpMat& o) const {
        if (n_ != o.n_) throw std::invalid_argument("SpMat: size mismatch");
        SpMat out(n_);
        std::vector<S> acc(n_, S(0));
        std::vector<int> touched;
        for (int i = 0; i < n_; ++i) {
            touched.clear();
            for (const auto& [k, v] : rows_[i]) {
                for (const auto& [j, w] : o.rows_[k]) {
                    if (acc[j] == S(0)) touched.push_back(j);
                    acc[j] += v * w;
                }
            }
            std::sort(touched.begin(), touched.end());
            for (int j : touched) {
                if (acc[j] != S(0)) out.rows_[i].push_back({j, acc[j]});
                acc[j] = S(0);
            }
        }
        return out;
    }

    static SpMat kron(const SpMat& a, const SpMat& b) {
        SpMat out(a.n_ * b.n_);
        for (int ia = 0; ia < a.n_; ++ia)
            for (const auto& [ja, va] : a.rows_[ia])
                for (int ib = 0; ib < b.n_; ++ib)
                    for (const auto& [jb, vb] : b.rows_[ib])
                        out.rows_[ia * b.n_ + ib].push_back({ja * b.n_ + jb, va * vb});
        for (auto& r : out.rows_)
            std::sort(r.begin(), r.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    }

    // largest row - col over stored entries (0 for lowering/diagonal matrices)
    int raising_band() const {
        int band = 0;
        for (int i = 0; i < n_; ++i)
            for (const auto& [j, v] : rows_[i])
                if (i - j > band) band = i - j;
        return band;
    }

    // max |entry| over columns 0..last_col
    S max_abs_in_cols(int last_col) const {
        using std::abs;
        S best(0);
        for (int i = 0; i < n_; ++i)
            for (const auto& [j, v] : rows_[i]) {
                if (j > last_col) continue;
                S a = v < S(0) ? S(-v) : v;
                if (a > best) best = a;
            }
        return best;
    }

    bool operator==(const SpMat& o) const = default;

private:
    SpMat combined(const SpMat& o, const S& sign) const {
        if (n_ != o.n_) throw std::invalid_argument("SpMat: size mismatch");
        SpMat out(n_);
        for (int i = 0; i < n_; ++i) {
            auto a = rows_[i].begin(), ae = rows_[i].end();
            auto b = o.rows_[i].begin(), be = o.rows_[i].end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    out.rows_[i].push_back(*a++);
                } else if (a == ae || b->first < a->first) {
                    out.rows_[i].push_back({b->first, sign * b->second});
                    ++b;
                } else {
                    S v = a->second + sign * b->second;
                    if (v != S(0)) out.rows_[i].push_back({a->first, v});
                    ++a;
                    ++b;
                }
            }
        }
        return out;
    }

    int n_ = 0;
    std::vector<std::vector<std::pair<int, S>>> rows_;
};

} // namespace dunkl
