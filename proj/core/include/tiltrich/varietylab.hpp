#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "tiltrich/permcore.hpp"
#include "tiltrich/qbgraph.hpp"
#include "tiltrich/rpolyhecke.hpp"
#include "tiltrich/tiltorder.hpp"
#include "tiltrich/tiltwords.hpp"

namespace tiltrich {

using Rational = boost::multiprecision::mpq_rational;

// Element of F_p. A zero modulus marks a plain integer literal that adopts
// the modulus of the first operand it meets.
class ModP {
public:
    ModP(long long v = 0) : v_(v), p_(0) {}
    ModP(long long v, long long p);

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return p_ ? v_ % p_ == 0 : v_ == 0; }

    ModP operator+(const ModP& o) const;
    ModP operator-(const ModP& o) const;
    ModP operator*(const ModP& o) const;
    ModP operator/(const ModP& o) const;
    ModP operator-() const { return ModP(-v_, p_); }
    ModP& operator+=(const ModP& o) { return *this = *this + o; }
    ModP& operator-=(const ModP& o) { return *this = *this - o; }
    bool operator==(const ModP& o) const { return (*this - o).is_zero(); }
    std::string str() const { return std::to_string(v_); }

private:
    static long long join(long long a, long long b);
    long long v_;
    long long p_;
};

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const ModP& x) { return x.is_zero(); }
inline std::string to_text(const Rational& x) { return x.str(); }
inline std::string to_text(const ModP& x) { return x.str(); }

// n x n matrix over an exact field, 1-indexed access.
template <class F>
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n * n), F(0)) {}
    static ExactMatrix identity(int n) {
        ExactMatrix m(n);
        for (int i = 1; i <= n; ++i) m(i, i) = F(1);
        return m;
    }
    // 1 at (w_k, k).
    static ExactMatrix permutation(const Permutation& w) {
        ExactMatrix m(w.size());
        for (int k = 1; k <= w.size(); ++k) m(w(k), k) = F(1);
        return m;
    }

    int size() const { return n_; }
    F& operator()(int r, int c) { return e_[static_cast<std::size_t>((r - 1) * n_ + (c - 1))]; }
    const F& operator()(int r, int c) const { return e_[static_cast<std::size_t>((r - 1) * n_ + (c - 1))]; }

    ExactMatrix operator*(const ExactMatrix& o) const {
        ExactMatrix out(n_);
        for (int i = 1; i <= n_; ++i)
            for (int k = 1; k <= n_; ++k) {
                const F& a = (*this)(i, k);
                if (is_zero(a)) continue;
                for (int j = 1; j <= n_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }
    bool operator==(const ExactMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
    int n_ = 0;
    std::vector<F> e_;
};

// Determinant by fraction-free (Bareiss) elimination.
template <class F>
F bareiss_determinant(std::vector<std::vector<F>> a) {
    const std::size_t m = a.size();
    if (m == 0) return F(1);
    F sign(1);
    F prev(1);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (is_zero(a[k][k])) {
            std::size_t r = k + 1;
            while (r < m && is_zero(a[r][k])) ++r;
            if (r == m) return F(0);
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i)
            for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[m - 1][m - 1];
}

template <class F>
int matrix_rank(std::vector<std::vector<F>> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && is_zero(a[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (is_zero(a[i][c])) continue;
            const F f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

template <class F>
F determinant(const ExactMatrix<F>& m) {
    std::vector<std::vector<F>> a(static_cast<std::size_t>(m.size()));
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) a[static_cast<std::size_t>(i - 1)].push_back(m(i, j));
    return bareiss_determinant(std::move(a));
}

// Δ_I: rows I in the listed order against the first |I| columns.
template <class F>
F plucker(const ExactMatrix<F>& m, const std::vector<int>& rows) {
    for (int r : rows)
        if (r < 1 || r > m.size()) throw DomainError("Plücker index out of range");
    if (rows.size() > static_cast<std::size_t>(m.size())) throw DomainError("too many Plücker indices");
    std::vector<std::vector<F>> a;
    for (int r : rows) {
        std::vector<F> row;
        for (int c = 1; c <= static_cast<int>(rows.size()); ++c) row.push_back(m(r, c));
        a.push_back(std::move(row));
    }
    return bareiss_determinant(std::move(a));
}

// rank_S(F_k)
template <class F>
int region_rank(const ExactMatrix<F>& m, const std::vector<int>& rows, int k) {
    std::vector<std::vector<F>> a;
    for (int r : rows) {
        std::vector<F> row;
        for (int c = 1; c <= k; ++c) row.push_back(m(r, c));
        a.push_back(std::move(row));
    }
    return matrix_rank(std::move(a));
}

// Δ_w = Π_k Δ_{w[k]}
template <class F>
F multi_plucker(const ExactMatrix<F>& m, const Permutation& w) {
    F acc(1);
    for (int k = 1; k <= w.size(); ++k) {
        acc = acc * plucker(m, w.prefix(k).elems);
        if (is_zero(acc)) break;
    }
    return acc;
}

template <class F>
void require_invertible(const ExactMatrix<F>& m) {
    if (is_zero(determinant(m))) throw DomainError("flag matrix is singular");
}

// Rank conditions with a = witness_a(u,v).
template <class F>
bool in_tilted_richardson(const ExactMatrix<F>& m, const Permutation& u, const Permutation& v, bool open) {
    require_same_size(u, v);
    if (m.size() != u.size()) throw DomainError("matrix and permutation sizes differ");
    require_invertible(m);
    const int n = u.size();
    const SeqA a = witness_a(u, v);
    for (int k = 1; k <= n; ++k) {
        const SubsetK uk = u.prefix(k);
        const SubsetK vk = v.prefix(k);
        for (int i = 1; i <= n; ++i) {
            const auto low = cyclic_interval(n, a.at(k), i, true, false);
            const auto high = cyclic_interval(n, i, a.at(k), true, false);
            int bu = 0;
            for (int x : low) bu += uk.contains(x);
            int bv = 0;
            for (int x : high) bv += vk.contains(x);
            const int r1 = region_rank(m, low, k);
            const int r2 = region_rank(m, high, k);
            if (open ? (r1 != bu || r2 != bv) : (r1 > bu || r2 > bv)) return false;
        }
    }
    return true;
}

// Δ_w = 0 for all w outside [u,v]; open adds Δ_u Δ_v ≠ 0.
template <class F>
bool in_tilted_richardson_plucker(const ExactMatrix<F>& m, const Permutation& u, const Permutation& v, bool open) {
    require_same_size(u, v);
    if (m.size() != u.size()) throw DomainError("matrix and permutation sizes differ");
    require_invertible(m);
    const TiltedInterval iv = tilted_interval(u, v);
    for (const auto& w : Permutation::all(u.size()))
        if (!iv.contains(w) && !is_zero(multi_plucker(m, w))) return false;
    if (open && (is_zero(multi_plucker(m, u)) || is_zero(multi_plucker(m, v)))) return false;
    return true;
}

template <class F>
bool in_tilted_richardson_checked(const ExactMatrix<F>& m, const Permutation& u, const Permutation& v, bool open) {
    const bool a = in_tilted_richardson(m, u, v, open);
    if (a != in_tilted_richardson_plucker(m, u, v, open))
        throw ConsistencyError("rank and Plücker membership disagree for " + u.str() + ", " + v.str());
    return a;
}

// Cells (row, column).
using RotheDiagram = std::set<std::pair<int, int>>;

RotheDiagram tilted_rothe(const SeqA& a, const Permutation& w);
RotheDiagram tilted_rothe_op(const SeqA& a, const Permutation& w);

enum class CellKind { cell, opposite };

// 1 at (w_k,k), params on D_a(w) (cell) or D_a^op(w) (opposite) in row-major cell order.
template <class F>
ExactMatrix<F> canonical_cell_matrix(const SeqA& a, const Permutation& w, CellKind kind, const std::vector<F>& params) {
    const RotheDiagram d = kind == CellKind::cell ? tilted_rothe(a, w) : tilted_rothe_op(a, w);
    if (params.size() != d.size()) throw DomainError("canonical matrix needs one parameter per diagram cell");
    ExactMatrix<F> m = ExactMatrix<F>::permutation(w);
    std::size_t t = 0;
    for (const auto& [r, c] : d) m(r, c) = params[t++];
    return m;
}

// X°_{w,a} (cell) or Ω°_{w,a} (opposite) by the Plücker conditions.
template <class F>
bool in_tilted_cell(const ExactMatrix<F>& m, const SeqA& a, const Permutation& w, CellKind kind) {
    if (is_zero(multi_plucker(m, w))) return false;
    const RotheDiagram d = kind == CellKind::cell ? tilted_rothe_op(a, w) : tilted_rothe(a, w);
    for (const auto& [i, k] : d) {
        std::vector<int> rows = w.prefix(k - 1).elems;
        rows.push_back(i);
        std::sort(rows.begin(), rows.end());
        if (!is_zero(plucker(m, rows))) return false;
    }
    return true;
}

template <class F>
void apply_block(ExactMatrix<F>& m, int i, const F& a11, const F& a12, const F& a21, const F& a22) {
    // m <- m * φ_i([[a11, a12], [a21, a22]])
    for (int r = 1; r <= m.size(); ++r) {
        const F x = m(r, i);
        const F y = m(r, i + 1);
        m(r, i) = x * a11 + y * a21;
        m(r, i + 1) = x * a12 + y * a22;
    }
}

// g_1 ... g_l with ṡ on J^+, y(p) on J°, x(m) ṡ^{-1} on J^-.
template <class F>
ExactMatrix<F> deodhar_point(const TiltedWord& word_v, const Subword& sub, const std::vector<F>& p,
                             const std::vector<F>& mvals) {
    if (p.size() != sub.jcirc.size() || mvals.size() != sub.jminus.size())
        throw DomainError("Deodhar parameters do not match the subword index sets");
    for (const auto& x : p)
        if (is_zero(x)) throw DomainError("Deodhar parameters on J° must be nonzero");
    ExactMatrix<F> m = ExactMatrix<F>::identity(word_v.n());
    std::size_t ip = 0;
    std::size_t im = 0;
    for (std::size_t j = 0; j < word_v.factors.size(); ++j) {
        const int i = word_v.factors[j];
        if (i == TiltedWord::bar) continue;
        const int pos = static_cast<int>(j) + 1;
        if (ip < sub.jcirc.size() && sub.jcirc[ip] == pos) {
            apply_block(m, i, F(1), F(0), p[ip], F(1));
            ++ip;
        } else if (im < sub.jminus.size() && sub.jminus[im] == pos) {
            apply_block(m, i, F(1), mvals[im], F(0), F(1));
            apply_block(m, i, F(0), F(1), F(-1), F(0));
            ++im;
        } else {
            apply_block(m, i, F(0), F(-1), F(1), F(0));
        }
    }
    return m;
}

struct SignTrace {
    // One sign per J° position, in order.
    std::vector<int> param_signs;
    // sign^(0) ... sign^(l).
    std::vector<std::vector<int>> vectors;
};

SignTrace tnn_signs(const TiltedWord& word_v, const Subword& positive_sub);

// For every k, the Δ_I with I sorted by <_{a_k} share a sign.
bool is_tnn(const ExactMatrix<Rational>& m, const SeqA& a);

// #T°_{u,v}(F_p) by enumerating classical Schubert-cell matrices.
BigInt count_points_fq(const Permutation& u, const Permutation& v, long long p, unsigned workers = 1);
BigInt total_flags_fq(int n, long long p);

bool is_prime(long long p);

// Nonzero when asked: ±(1..9)/(1..5).
Rational random_rational(std::mt19937_64& rng, bool nonzero);
// Invertible, entries in [-5, 5].
ExactMatrix<Rational> random_invertible_matrix(int n, std::mt19937_64& rng);

struct DeodharSample {
    Subword sub;
    std::vector<Rational> p;
    std::vector<Rational> m;
    ExactMatrix<Rational> matrix;
};

// Regular word of v at witness_a(u,v); each draw picks a distinguished subword and parameters.
std::vector<DeodharSample> sample_deodhar(const Permutation& u, const Permutation& v, int count, std::uint64_t seed);

// Positive subword with parameters sign_j * t_j, t_j > 0; flip_index >= 0 negates one parameter.
DeodharSample sample_tnn(const Permutation& u, const Permutation& v, std::mt19937_64& rng, int flip_index = -1);

}  // namespace tiltrich
