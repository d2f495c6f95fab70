#include "tiltrich/qbgraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "tiltrich/config.hpp"

namespace tiltrich {

DegreeVec DegreeVec::interval(int n, int i, int j) {
    DegreeVec d = zero(n);
    for (int k = i; k < j; ++k) d.d[static_cast<std::size_t>(k - 1)] = 1;
    return d;
}

bool DegreeVec::is_zero() const {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

int DegreeVec::total() const {
    int s = 0;
    for (int x : d) s += x;
    return s;
}

bool DegreeVec::leq(const DegreeVec& other) const {
    if (d.size() != other.d.size()) throw DomainError("degree vectors of different sizes");
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k] > other.d[k]) return false;
    return true;
}

DegreeVec DegreeVec::operator+(const DegreeVec& other) const {
    if (d.size() != other.d.size()) throw DomainError("degree vectors of different sizes");
    DegreeVec out = *this;
    for (std::size_t k = 0; k < d.size(); ++k) out.d[k] += other.d[k];
    return out;
}

std::string DegreeVec::monomial() const {
    std::string s;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k] == 0) continue;
        s += "q" + std::to_string(k + 1);
        if (d[k] > 1) s += "^" + std::to_string(d[k]);
    }
    return s.empty() ? "1" : s;
}

std::optional<DegreeVec> edge_weight(const Permutation& w, int i, int j) {
    const int n = w.size();
    if (i < 1 || j > n || i >= j) throw DomainError("edge needs 1 <= i < j <= n");
    for (int k = i + 1; k < j; ++k)
        if (cyclic_interval_contains(n, w(i), w(j), w(k), false, false)) return std::nullopt;
    if (w(i) < w(j)) return DegreeVec::zero(n);
    return DegreeVec::interval(n, i, j);
}

std::optional<DegreeVec> edge_weight_by_length(const Permutation& w, int i, int j) {
    const int n = w.size();
    const int l0 = w.length();
    const int l1 = w.swap_positions(i, j).length();
    if (l1 == l0 + 1) return DegreeVec::zero(n);
    if (l1 == l0 + 1 - 2 * (j - i)) return DegreeVec::interval(n, i, j);
    return std::nullopt;
}

std::vector<QbgEdge> out_edges(const Permutation& w) {
    std::vector<QbgEdge> out;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (auto wt = edge_weight(w, i, j)) out.push_back(QbgEdge{w, i, j, *wt});
    return out;
}

std::vector<QbgEdge> graph_edges(int n) {
    std::vector<QbgEdge> out;
    for (const auto& w : Permutation::all(n)) {
        auto e = out_edges(w);
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

namespace {

std::mutex graph_mutex;
std::map<int, std::unique_ptr<QbgGraph>> graph_cache;

std::mutex dist_mutex;
std::map<std::pair<int, std::size_t>, std::shared_ptr<const std::vector<int>>> from_cache;
std::map<std::pair<int, std::size_t>, std::shared_ptr<const std::vector<int>>> to_cache;
std::size_t cached_entries = 0;
constexpr std::size_t cache_limit = std::size_t{1} << 25;

std::shared_ptr<const std::vector<int>> bfs(const QbgGraph& g, std::size_t src, bool forward) {
    auto dist = std::make_shared<std::vector<int>>(g.vertices.size(), -1);
    std::deque<std::size_t> queue{src};
    (*dist)[src] = 0;
    const auto& adj = forward ? g.out : g.in;
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (const auto& arc : adj[x]) {
            if ((*dist)[arc.other] >= 0) continue;
            (*dist)[arc.other] = (*dist)[x] + 1;
            queue.push_back(arc.other);
        }
    }
    return dist;
}

std::shared_ptr<const std::vector<int>> cached_bfs(const Permutation& p, bool forward) {
    const QbgGraph& g = qbg(p.size());
    const auto key = std::make_pair(p.size(), p.rank());
    auto& cache = forward ? from_cache : to_cache;
    {
        std::lock_guard<std::mutex> lock(dist_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto dist = bfs(g, key.second, forward);
    std::lock_guard<std::mutex> lock(dist_mutex);
    if (cached_entries + dist->size() > cache_limit) {
        from_cache.clear();
        to_cache.clear();
        cached_entries = 0;
    }
    cached_entries += dist->size();
    cache.emplace(key, dist);
    return dist;
}

}  // namespace

const QbgGraph& qbg(int n) {
    require_gate(n, gates().max_bfs_n, "quantum Bruhat graph");
    std::lock_guard<std::mutex> lock(graph_mutex);
    auto it = graph_cache.find(n);
    if (it != graph_cache.end()) return *it->second;
    auto g = std::make_unique<QbgGraph>();
    g->n = n;
    g->vertices = Permutation::all(n);
    g->out.resize(g->vertices.size());
    g->in.resize(g->vertices.size());
    for (std::size_t x = 0; x < g->vertices.size(); ++x) {
        const Permutation& w = g->vertices[x];
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                auto wt = edge_weight(w, i, j);
                if (!wt) continue;
                const auto y = static_cast<std::uint32_t>(w.swap_positions(i, j).rank());
                const bool q = !wt->is_zero();
                g->out[x].push_back(QbgArc{y, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), q});
                g->in[y].push_back(
                    QbgArc{static_cast<std::uint32_t>(x), static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), q});
            }
        }
    }
    auto& slot = graph_cache[n];
    slot = std::move(g);
    return *slot;
}

std::shared_ptr<const std::vector<int>> distances_from(const Permutation& u) { return cached_bfs(u, true); }
std::shared_ptr<const std::vector<int>> distances_to(const Permutation& v) { return cached_bfs(v, false); }

void clear_distance_cache() {
    std::lock_guard<std::mutex> lock(dist_mutex);
    from_cache.clear();
    to_cache.clear();
    cached_entries = 0;
}

int ell(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    const int d = (*distances_from(u))[v.rank()];
    if (d < 0) throw ConsistencyError("quantum Bruhat graph is not strongly connected");
    return d;
}

std::vector<QbgEdge> shortest_path(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    const QbgGraph& g = qbg(u.size());
    const auto dist = distances_from(u);
    std::vector<QbgEdge> path;
    std::size_t x = v.rank();
    while ((*dist)[x] > 0) {
        bool stepped = false;
        for (const auto& arc : g.in[x]) {
            if ((*dist)[arc.other] != (*dist)[x] - 1) continue;
            const Permutation& src = g.vertices[arc.other];
            path.push_back(QbgEdge{src, arc.i, arc.j, *edge_weight(src, arc.i, arc.j)});
            x = arc.other;
            stepped = true;
            break;
        }
        if (!stepped) throw ConsistencyError("broken BFS predecessor chain");
    }
    std::reverse(path.begin(), path.end());
    return path;
}

DegreeVec path_weight(const std::vector<QbgEdge>& path, int n) {
    DegreeVec d = DegreeVec::zero(n);
    for (const auto& e : path) d = d + e.weight;
    return d;
}

std::vector<int> lattice_heights(const SubsetK& a, const SubsetK& b) {
    if (a.n != b.n || a.size() != b.size()) throw DomainError("lattice path needs equal-size subsets");
    std::vector<int> h{0};
    for (int i = 1; i <= a.n; ++i) {
        const bool in_a = a.contains(i);
        const bool in_b = b.contains(i);
        h.push_back(h.back() + (in_a && !in_b ? 1 : 0) - (in_b && !in_a ? 1 : 0));
    }
    return h;
}

int lattice_depth(const SubsetK& a, const SubsetK& b) {
    const auto h = lattice_heights(a, b);
    return -*std::min_element(h.begin(), h.end());
}

std::vector<int> min_set(const SubsetK& a, const SubsetK& b) {
    const auto h = lattice_heights(a, b);
    const int lo = *std::min_element(h.begin(), h.end());
    std::vector<int> out;
    for (int r = 1; r <= a.n; ++r)
        if (h[static_cast<std::size_t>(r - 1)] == lo) out.push_back(r);
    return out;
}

DegreeVec min_degree(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    DegreeVec d = DegreeVec::zero(u.size());
    for (int k = 1; k < u.size(); ++k) d.d[static_cast<std::size_t>(k - 1)] = lattice_depth(u.prefix(k), v.prefix(k));
    return d;
}

DegreeVec min_degree_by_path(const Permutation& u, const Permutation& v) {
    return path_weight(shortest_path(u, v), u.size());
}

DegreeVec min_degree_checked(const Permutation& u, const Permutation& v) {
    const DegreeVec a = min_degree(u, v);
    const DegreeVec b = min_degree_by_path(u, v);
    if (a != b)
        throw ConsistencyError("minimal degree mismatch for " + u.str() + "," + v.str() + ": depth " + a.monomial() +
                               " vs path " + b.monomial());
    return a;
}

bool TiltedInterval::precedes(const Permutation& x, const Permutation& y) const {
    if (!contains(x) || !contains(y)) return false;
    return rank.at(x) + ell(x, y) + (length - rank.at(y)) == length;
}

std::vector<std::pair<Permutation, Permutation>> TiltedInterval::hasse_edges() const {
    std::vector<std::pair<Permutation, Permutation>> out;
    for (const auto& x : members)
        for (const auto& y : members)
            if (rank.at(y) == rank.at(x) + 1 && precedes(x, y)) out.emplace_back(x, y);
    return out;
}

TiltedInterval tilted_interval(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    const QbgGraph& g = qbg(u.size());
    const auto from = distances_from(u);
    const auto to = distances_to(v);
    TiltedInterval iv;
    iv.u = u;
    iv.v = v;
    iv.length = (*from)[v.rank()];
    for (std::size_t x = 0; x < g.vertices.size(); ++x) {
        if ((*from)[x] + (*to)[x] != iv.length) continue;
        iv.members.push_back(g.vertices[x]);
        iv.rank.emplace(g.vertices[x], (*from)[x]);
    }
    return iv;
}

ReflectionOrder reflection_order_from_word(int n, const std::vector<int>& w0_word) {
    if (static_cast<int>(w0_word.size()) != n * (n - 1) / 2) throw DomainError("word for w0 has the wrong length");
    if (word_product(n, w0_word) != Permutation::longest(n)) throw DomainError("word is not a reduced word for w0");
    ReflectionOrder order;
    for (std::size_t j = 0; j < w0_word.size(); ++j) {
        int a = w0_word[j];
        int b = w0_word[j] + 1;
        for (std::size_t t = j; t-- > 0;) {
            const int s = w0_word[t];
            auto act = [s](int x) { return x == s ? s + 1 : (x == s + 1 ? s : x); };
            a = act(a);
            b = act(b);
        }
        if (a > b) throw DomainError("reflection ordering produced a negative root");
        order.push_back(Root{a, b});
    }
    return order;
}

ReflectionOrder default_reflection_order(int n) {
    std::vector<int> word;
    for (int top = n - 1; top >= 1; --top)
        for (int i = 1; i <= top; ++i) word.push_back(i);
    return reflection_order_from_word(n, word);
}

bool is_reflection_order(int n, const ReflectionOrder& order) {
    std::map<Root, int> pos;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Root& r = order[k];
        if (r.i < 1 || r.j > n || r.i >= r.j) return false;
        if (!pos.emplace(r, static_cast<int>(k)).second) return false;
    }
    if (static_cast<int>(pos.size()) != n * (n - 1) / 2) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                const int a = pos[Root{i, j}];
                const int b = pos[Root{j, k}];
                const int c = pos[Root{i, k}];
                if (!((a < c && c < b) || (b < c && c < a))) return false;
            }
    return true;
}

std::vector<std::vector<QbgEdge>> increasing_paths(const Permutation& u, const Permutation& v,
                                                   const ReflectionOrder& order) {
    require_same_size(u, v);
    const int n = u.size();
    if (!is_reflection_order(n, order)) throw DomainError("invalid reflection ordering");
    std::vector<std::vector<QbgEdge>> found;
    std::vector<QbgEdge> path;
    std::function<void(const Permutation&, std::size_t)> dfs = [&](const Permutation& w, std::size_t next) {
        if (w == v) found.push_back(path);
        for (std::size_t k = next; k < order.size(); ++k) {
            const Root& r = order[k];
            auto wt = edge_weight(w, r.i, r.j);
            if (!wt) continue;
            path.push_back(QbgEdge{w, r.i, r.j, *wt});
            dfs(w.swap_positions(r.i, r.j), k + 1);
            path.pop_back();
        }
    };
    dfs(u, 0);
    return found;
}

std::vector<QbgEdge> increasing_path(const Permutation& u, const Permutation& v, const ReflectionOrder& order) {
    auto paths = increasing_paths(u, v, order);
    if (paths.size() != 1)
        throw ConsistencyError("expected a unique increasing path from " + u.str() + " to " + v.str() + ", found " +
                               std::to_string(paths.size()));
    return paths.front();
}

Permutation rotate(const Permutation& w) { return Permutation::long_cycle(w.size()).compose(w); }

std::optional<ClassicalTranslate> find_classical_translate(const Permutation& u, const Permutation& v) {
    const TiltedInterval iv = tilted_interval(u, v);
    const int n = u.size();
    for (const auto& w : Permutation::all(n)) {
        const Permutation winv = w.inverse();
        std::vector<Permutation> t;
        t.reserve(iv.members.size());
        for (const auto& x : iv.members) t.push_back(winv.compose(x));
        auto by_len = [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); };
        const Permutation lo = *std::min_element(t.begin(), t.end(), by_len);
        const Permutation hi = *std::max_element(t.begin(), t.end(), by_len);
        bool ok = true;
        for (const auto& x : t)
            if (!bruhat_leq(lo, x) || !bruhat_leq(x, hi)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (bruhat_interval(lo, hi).size() == t.size()) return ClassicalTranslate{w, lo, hi};
    }
    return std::nullopt;
}

std::string graph_dot(int n) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (const auto& w : Permutation::all(n)) os << "  \"" << w.str() << "\";\n";
    for (const auto& e : graph_edges(n)) {
        os << "  \"" << e.source.str() << "\" -> \"" << e.target().str() << "\"";
        if (e.quantum()) os << " [style=dashed, label=\"" << e.weight.monomial() << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string interval_dot(const TiltedInterval& iv) {
    std::ostringstream os;
    os << "digraph interval {\n  rankdir=BT;\n";
    for (const auto& w : iv.members) os << "  \"" << w.str() << "\";\n";
    for (const auto& [x, y] : iv.hasse_edges()) os << "  \"" << x.str() << "\" -> \"" << y.str() << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace tiltrich
