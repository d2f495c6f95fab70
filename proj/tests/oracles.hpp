#pragma once

// Reference implementations written from the definitions on plain vectors, sharing no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // one-line notation, values 1..n
using Seq = std::vector<int>;   // a_1..a_n

inline std::vector<Perm> perms(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int length(const Perm& w) {
    int l = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) l += w[i] > w[j];
    return l;
}

inline Perm swap_pos(Perm w, int i, int j) {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]);
    return w;
}

inline Perm compose(const Perm& x, const Perm& y) {
    Perm out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[static_cast<std::size_t>(y[k] - 1)];
    return out;
}

inline Perm inverse(const Perm& w) {
    Perm out(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) out[static_cast<std::size_t>(w[k] - 1)] = static_cast<int>(k) + 1;
    return out;
}

// Tableau criterion.
inline bool bruhat_leq(const Perm& u, const Perm& v) {
    const int n = static_cast<int>(u.size());
    for (int k = 1; k < n; ++k) {
        std::vector<int> a(u.begin(), u.begin() + k);
        std::vector<int> b(v.begin(), v.begin() + k);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (int i = 0; i < k; ++i)
            if (a[static_cast<std::size_t>(i)] > b[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

// x in [a,b)_c
inline bool in_arc(int n, int a, int b, int x) {
    const int m = ((b - a) % n + n) % n;
    const int pos = ((x - a) % n + n) % n;
    return pos < m;
}

// Strong edges raise length by one; quantum edges drop it by 2(j-i)-1.
inline std::optional<std::vector<int>> qbg_edge(const Perm& w, int i, int j) {
    const int n = static_cast<int>(w.size());
    const Perm t = swap_pos(w, i, j);
    const int lw = length(w);
    const int lt = length(t);
    std::vector<int> d(static_cast<std::size_t>(n - 1), 0);
    if (lt == lw + 1) return d;
    if (lt == lw - 2 * (j - i) + 1) {
        for (int k = i; k < j; ++k) d[static_cast<std::size_t>(k - 1)] = 1;
        return d;
    }
    return std::nullopt;
}

struct Graph {
    int n = 0;
    std::vector<Perm> verts;
    std::map<Perm, int> index;
    // adjacency: (target index, weight)
    std::vector<std::vector<std::pair<int, std::vector<int>>>> adj;

    explicit Graph(int n_) : n(n_), verts(perms(n_)) {
        for (std::size_t k = 0; k < verts.size(); ++k) index[verts[k]] = static_cast<int>(k);
        adj.resize(verts.size());
        for (std::size_t k = 0; k < verts.size(); ++k)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (auto wt = qbg_edge(verts[k], i, j)) adj[k].push_back({index[swap_pos(verts[k], i, j)], *wt});
    }

    // Distances from s, and the set of weights of all shortest paths to each vertex.
    std::pair<std::vector<int>, std::vector<std::set<std::vector<int>>>> bfs(int s) const {
        std::vector<int> dist(verts.size(), -1);
        std::vector<std::set<std::vector<int>>> weights(verts.size());
        dist[static_cast<std::size_t>(s)] = 0;
        weights[static_cast<std::size_t>(s)].insert(std::vector<int>(static_cast<std::size_t>(n - 1), 0));
        std::vector<int> layer{s};
        while (!layer.empty()) {
            std::vector<int> next;
            for (int x : layer)
                for (const auto& [y, wt] : adj[static_cast<std::size_t>(x)]) {
                    auto& dy = dist[static_cast<std::size_t>(y)];
                    if (dy == -1) {
                        dy = dist[static_cast<std::size_t>(x)] + 1;
                        next.push_back(y);
                    }
                    if (dy == dist[static_cast<std::size_t>(x)] + 1)
                        for (auto w : weights[static_cast<std::size_t>(x)]) {
                            for (std::size_t t = 0; t < w.size(); ++t) w[t] += wt[t];
                            weights[static_cast<std::size_t>(y)].insert(w);
                        }
                }
            layer = next;
        }
        return {dist, weights};
    }

    std::vector<std::vector<int>> all_distances() const {
        std::vector<std::vector<int>> d;
        for (std::size_t s = 0; s < verts.size(); ++s) d.push_back(bfs(static_cast<int>(s)).first);
        return d;
    }
};

// Sorted by <_r, compared entrywise.
inline bool shifted_gale(int n, int r, std::vector<int> a, std::vector<int> b) {
    auto key = [&](int x) { return ((x - r) % n + n) % n; };
    auto cmp = [&](int x, int y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (key(a[i]) > key(b[i])) return false;
    return true;
}

inline int at(const Seq& a, int k) { return k == static_cast<int>(a.size()) + 1 ? 1 : a[static_cast<std::size_t>(k - 1)]; }

inline bool leq_a(const Seq& a, const Perm& u, const Perm& v) {
    const int n = static_cast<int>(u.size());
    for (int k = 1; k <= n; ++k)
        if (!shifted_gale(n, at(a, k), {u.begin(), u.begin() + k}, {v.begin(), v.begin() + k})) return false;
    return true;
}

inline bool sim_a(const Seq& a, const Perm& u, const Perm& v) {
    const int n = static_cast<int>(u.size());
    for (int k = 1; k <= n; ++k) {
        int cu = 0;
        int cv = 0;
        for (int t = 0; t < k; ++t) {
            cu += in_arc(n, at(a, k), at(a, k + 1), u[static_cast<std::size_t>(t)]);
            cv += in_arc(n, at(a, k), at(a, k + 1), v[static_cast<std::size_t>(t)]);
        }
        if (cu != cv) return false;
    }
    return true;
}

inline bool lesssim_a(const Seq& a, const Perm& u, const Perm& v) { return leq_a(a, u, v) && sim_a(a, u, v); }

inline std::vector<int> jumps(const Seq& a) {
    std::vector<int> out;
    for (int j = 1; j <= static_cast<int>(a.size()); ++j)
        if (at(a, j) != at(a, j + 1)) out.push_back(j);
    return out;
}

inline Seq flatten(const Seq& a) {
    const int j = jumps(a).front();
    Seq out = a;
    for (int t = 0; t < j; ++t) out[static_cast<std::size_t>(t)] = at(a, j + 1);
    return out;
}

inline bool flattenable(const Seq& a, const Perm& w) {
    const int n = static_cast<int>(w.size());
    const int j = jumps(a).front();
    for (int p = 0; p <= j; ++p) {
        bool ok = true;
        for (int i = 1; i <= j && ok; ++i) {
            const int x = w[static_cast<std::size_t>(i - 1)];
            ok = i <= p ? in_arc(n, at(a, 1), at(a, j + 1), x) : in_arc(n, at(a, j + 1), at(a, 1), x);
        }
        if (ok) return true;
    }
    return false;
}

// Minimum over flattenable w' with w'^{-1} w in the parabolic subgroup of non-jump generators.
inline int word_length(const Seq& a, const Perm& w, std::map<std::pair<Seq, Perm>, int>& memo) {
    const auto js = jumps(a);
    if (js.empty()) return length(w);
    auto it = memo.find({a, w});
    if (it != memo.end()) return it->second;
    const int n = static_cast<int>(w.size());
    // block id per position: positions between consecutive jumps
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    int b = 0;
    for (int p = 1; p <= n; ++p) {
        block[static_cast<std::size_t>(p - 1)] = b;
        if (std::find(js.begin(), js.end(), p) != js.end()) ++b;
    }
    const Seq fa = flatten(a);
    int best = 1 << 29;
    for (const auto& wp : perms(n)) {
        if (!flattenable(a, wp)) continue;
        const Perm x = compose(inverse(wp), w);
        bool parabolic = true;
        for (int p = 1; p <= n && parabolic; ++p)
            parabolic = block[static_cast<std::size_t>(x[static_cast<std::size_t>(p - 1)] - 1)] == block[static_cast<std::size_t>(p - 1)];
        if (!parabolic) continue;
        best = std::min(best, word_length(fa, wp, memo) + 1 + length(x));
    }
    memo[{a, w}] = best;
    return best;
}

struct SubwordShape {
    int jcirc = 0;
    int jminus = 0;
    auto operator<=>(const SubwordShape&) const = default;
};

// factors: 0 for a bar, i for s_i. Enumerates every keep mask.
inline std::vector<SubwordShape> distinguished(const Seq& a, const std::vector<int>& factors, const Perm& u) {
    const int n = static_cast<int>(u.size());
    const int len = static_cast<int>(factors.size());
    std::vector<Seq> level(static_cast<std::size_t>(len));
    Seq cur = a;
    for (int j = len - 1; j >= 0; --j) {
        level[static_cast<std::size_t>(j)] = cur;
        if (factors[static_cast<std::size_t>(j)] == 0) cur = flatten(cur);
    }
    std::vector<int> gens;
    for (int j = 0; j < len; ++j)
        if (factors[static_cast<std::size_t>(j)] != 0) gens.push_back(j);
    Perm v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (int f : factors)
        if (f) v = swap_pos(v, f, f + 1);
    std::vector<SubwordShape> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << gens.size()); ++mask) {
        Perm w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        SubwordShape shape;
        bool ok = true;
        std::size_t g = 0;
        for (int j = 0; j < len && ok; ++j) {
            const int f = factors[static_cast<std::size_t>(j)];
            const Seq& lv = level[static_cast<std::size_t>(j)];
            if (f == 0) {
                ok = flattenable(lv, w);
                continue;
            }
            const bool keep = (mask >> g++) & 1;
            const Perm ws = swap_pos(w, f, f + 1);
            if (keep) {
                if (!leq_a(lv, w, ws)) ++shape.jminus;
                w = ws;
            } else {
                if (!leq_a(lv, w, ws)) ok = false;
                ++shape.jcirc;
            }
        }
        if (ok && w == u && sim_a(a, u, v)) out.push_back(shape);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Rank of a matrix over F_p (rows given as vectors).
inline int rank_mod(std::vector<std::vector<long long>> m, long long p) {
    int r = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    auto inv = [&](long long x) {
        long long res = 1;
        long long e = p - 2;
        x %= p;
        while (e) {
            if (e & 1) res = res * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return res;
    };
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = r;
        while (piv < rows && m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(piv)]);
        const long long iv = inv(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        for (int i = r + 1; i < rows; ++i) {
            const long long f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * iv % p;
            for (int j = c; j < cols; ++j) {
                auto& x = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                x = ((x - f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        ++r;
    }
    return r;
}

// rank_{[a,i)_c}(F_k) and rank_{[i,a)_c}(F_k) for every a, i, k, indexed [a][i][k][side].
struct RegionRanks {
    int n;
    std::vector<int> r;
    int get(int a, int i, int k, int side) const {
        return r[static_cast<std::size_t>((((a - 1) * n + (i - 1)) * n + (k - 1)) * 2 + side)];
    }
};

inline RegionRanks region_ranks(const std::vector<std::vector<long long>>& m, long long p) {
    const int n = static_cast<int>(m.size());
    RegionRanks out{n, std::vector<int>(static_cast<std::size_t>(n * n * n * 2), 0)};
    for (int a = 1; a <= n; ++a)
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k)
                for (int side = 0; side < 2; ++side) {
                    std::vector<std::vector<long long>> sub;
                    for (int row = 1; row <= n; ++row) {
                        const bool in = side == 0 ? in_arc(n, a, i, row) : in_arc(n, i, a, row);
                        if (!in) continue;
                        sub.emplace_back(m[static_cast<std::size_t>(row - 1)].begin(), m[static_cast<std::size_t>(row - 1)].begin() + k);
                    }
                    out.r[static_cast<std::size_t>((((a - 1) * n + (i - 1)) * n + (k - 1)) * 2 + side)] = rank_mod(sub, p);
                }
    return out;
}

// Open variety for a given a, equalities in all region conditions.
inline bool open_member(const RegionRanks& rr, const Seq& a, const Perm& u, const Perm& v) {
    const int n = rr.n;
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i) {
            int bu = 0;
            int bv = 0;
            for (int t = 0; t < k; ++t) {
                bu += in_arc(n, at(a, k), i, u[static_cast<std::size_t>(t)]);
                bv += in_arc(n, i, at(a, k), v[static_cast<std::size_t>(t)]);
            }
            if (rr.get(at(a, k), i, k, 0) != bu || rr.get(at(a, k), i, k, 1) != bv) return false;
        }
    return true;
}

// Visits every invertible n x n matrix over F_p.
inline void for_each_gl(int n, long long p, const std::function<void(const std::vector<std::vector<long long>>&)>& f) {
    const int cells = n * n;
    std::vector<long long> digits(static_cast<std::size_t>(cells), 0);
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    while (true) {
        for (int t = 0; t < cells; ++t) m[static_cast<std::size_t>(t / n)][static_cast<std::size_t>(t % n)] = digits[static_cast<std::size_t>(t)];
        if (rank_mod(m, p) == n) f(m);
        int t = 0;
        while (t < cells && ++digits[static_cast<std::size_t>(t)] == p) digits[static_cast<std::size_t>(t++)] = 0;
        if (t == cells) break;
    }
}

// |B(F_p)| for upper-triangular invertible matrices.
inline long long borel_order(int n, long long p) {
    long long b = 1;
    for (int i = 0; i < n; ++i) b *= p - 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) b *= p;
    return b;
}

// Chains of Bruhat covers w -> w t_ab with a <= k < b.
inline bool k_bruhat_leq(const Perm& u, const Perm& v, int k) {
    const int n = static_cast<int>(u.size());
    std::set<Perm> seen{u};
    std::vector<Perm> stack{u};
    while (!stack.empty()) {
        const Perm w = stack.back();
        stack.pop_back();
        if (w == v) return true;
        for (int a = 1; a <= k; ++a)
            for (int b = k + 1; b <= n; ++b) {
                const Perm t = swap_pos(w, a, b);
                if (length(t) != length(w) + 1 || length(t) > length(v)) continue;
                if (seen.insert(t).second) stack.push_back(t);
            }
    }
    return false;
}

}  // namespace oracle
