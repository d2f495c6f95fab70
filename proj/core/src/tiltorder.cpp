#include "tiltrich/tiltorder.hpp"

#include <algorithm>
#include <deque>

#include "tiltrich/qbgraph.hpp"

namespace tiltrich {

namespace {

int count_in(const SubsetK& s, int lo, int hi) {
    int c = 0;
    for (int x : s.elems)
        if (cyclic_interval_contains(s.n, lo, hi, x, true, false)) ++c;
    return c;
}

void require_seq(const SeqA& a, const Permutation& w) {
    if (a.n() != w.size()) throw DomainError("sequence a has length " + std::to_string(a.n()) + ", expected " +
                                             std::to_string(w.size()));
}

}  // namespace

SeqA::SeqA(std::vector<int> values) : a(std::move(values)) {
    if (a.empty()) throw DomainError("empty sequence a");
    for (int x : a)
        if (x < 1 || x > n()) throw DomainError("entry of a outside [1,n]");
}

SeqA SeqA::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') t.push_back(c);
    std::vector<int> vals;
    if (t.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= t.size()) {
            const std::size_t end = t.find(',', start);
            const std::string tok = t.substr(start, end == std::string::npos ? std::string::npos : end - start);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw DomainError("bad sequence text '" + std::string(text) + "'");
            vals.push_back(std::stoi(tok));
            if (end == std::string::npos) break;
            start = end + 1;
        }
    } else {
        for (char c : t) {
            if (c < '1' || c > '9') throw DomainError("bad sequence text '" + std::string(text) + "'");
            vals.push_back(c - '0');
        }
    }
    return SeqA(std::move(vals));
}

std::vector<SeqA> SeqA::all(int n) {
    std::vector<SeqA> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 1);
    while (true) {
        out.emplace_back(cur);
        int k = n - 1;
        while (k >= 0 && cur[static_cast<std::size_t>(k)] == n) cur[static_cast<std::size_t>(k--)] = 1;
        if (k < 0) break;
        ++cur[static_cast<std::size_t>(k)];
    }
    return out;
}

std::string SeqA::str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(a[k]);
    }
    return s + ")";
}

bool a_leq(const SeqA& a, const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    require_seq(a, u);
    for (int k = 1; k < u.size(); ++k)
        if (!shifted_gale_leq(a.at(k), u.prefix(k), v.prefix(k))) return false;
    return true;
}

bool a_sim(const SeqA& a, const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    require_seq(a, u);
    for (int k = 1; k <= u.size(); ++k)
        if (count_in(u.prefix(k), a.at(k), a.at(k + 1)) != count_in(v.prefix(k), a.at(k), a.at(k + 1))) return false;
    return true;
}

bool a_lesssim(const SeqA& a, const Permutation& u, const Permutation& v) { return a_leq(a, u, v) && a_sim(a, u, v); }

bool a_lesssim_alt(const SeqA& a, const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    require_seq(a, u);
    for (int k = 1; k < u.size(); ++k) {
        const SubsetK uk = u.prefix(k);
        const SubsetK vk = v.prefix(k);
        if (!shifted_gale_leq(a.at(k), uk, vk) || !shifted_gale_leq(a.at(k + 1), uk, vk)) return false;
    }
    return true;
}

bool a_lesssim_checked(const SeqA& a, const Permutation& u, const Permutation& v) {
    const bool x = a_lesssim(a, u, v);
    if (x != a_lesssim_alt(a, u, v))
        throw ConsistencyError("the two formulations of ≲_a disagree for a=" + a.str() + ", " + u.str() + ", " +
                               v.str());
    return x;
}

SeqA witness_a(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    const int n = u.size();
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k < n; ++k) m[static_cast<std::size_t>(k)] = min_set(u.prefix(k), v.prefix(k));
    for (int x = 1; x <= n; ++x) m[static_cast<std::size_t>(n)].push_back(x);
    std::vector<int> a(static_cast<std::size_t>(n));
    a[0] = m[1].front();
    for (int k = 2; k <= n; ++k) {
        std::vector<int> both;
        std::set_intersection(m[static_cast<std::size_t>(k - 1)].begin(), m[static_cast<std::size_t>(k - 1)].end(),
                              m[static_cast<std::size_t>(k)].begin(), m[static_cast<std::size_t>(k)].end(),
                              std::back_inserter(both));
        if (both.empty())
            throw ConsistencyError("consecutive min-sets do not meet for " + u.str() + ", " + v.str());
        a[static_cast<std::size_t>(k - 1)] = both.front();
    }
    SeqA out(std::move(a));
    if (!a_lesssim(out, u, v)) throw ConsistencyError("witness fails ≲_a for " + u.str() + ", " + v.str());
    return out;
}

SeqA witness_a_leq(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    const int n = u.size();
    std::vector<int> a(static_cast<std::size_t>(n), 1);
    for (int k = 1; k < n; ++k) a[static_cast<std::size_t>(k - 1)] = min_set(u.prefix(k), v.prefix(k)).front();
    return SeqA(std::move(a));
}

bool in_tilted_interval(const Permutation& u, const Permutation& v, const Permutation& w) {
    const SeqA a = witness_a(u, v);
    return a_lesssim(a, u, w) && a_lesssim(a, w, v);
}

CoverKind covers(const SeqA& a, const Permutation& w, int i, int j, OrderMode mode) {
    require_seq(a, w);
    const int n = w.size();
    if (i < 1 || j > n || i >= j) throw DomainError("covers needs 1 <= i < j <= n");
    const int last = mode == OrderMode::leq ? j - 1 : j;
    for (int k = i; k <= last; ++k)
        if (cyclic_interval_contains(n, w(i), w(j), a.at(k), false, true)) return CoverKind::incomparable;
    for (int k = i + 1; k < j; ++k)
        if (cyclic_interval_contains(n, w(i), w(j), w(k), false, false)) return CoverKind::comparable;
    return CoverKind::cover;
}

int a_length(const SeqA& a, const Permutation& w) {
    require_seq(a, w);
    const int n = w.size();
    int count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (shifted_key(n, a.at(i), w(i)) > shifted_key(n, a.at(i), w(j))) ++count;
    return count;
}

DesAsc a_des_asc(const SeqA& a, const Permutation& w, int i) {
    require_seq(a, w);
    const int n = w.size();
    if (i < 1 || i >= n) throw DomainError("descent index out of range");
    if (a.at(i) != a.at(i + 1)) return DesAsc::not_applicable;
    return shifted_key(n, a.at(i), w(i)) > shifted_key(n, a.at(i), w(i + 1)) ? DesAsc::descent : DesAsc::ascent;
}

std::vector<int> a_descents(const SeqA& a, const Permutation& w) {
    std::vector<int> out;
    for (int i = 1; i < w.size(); ++i)
        if (a_des_asc(a, w, i) == DesAsc::descent) out.push_back(i);
    return out;
}

std::vector<int> a_ascents(const SeqA& a, const Permutation& w) {
    std::vector<int> out;
    for (int i = 1; i < w.size(); ++i)
        if (a_des_asc(a, w, i) == DesAsc::ascent) out.push_back(i);
    return out;
}

bool interval_s_invariant(const Permutation& u, const Permutation& v, int i) {
    if (i < 1 || i >= u.size()) throw DomainError("simple transposition index out of range");
    const TiltedInterval iv = tilted_interval(u, v);
    for (const auto& x : iv.members)
        if (!iv.contains(x.times_simple(i))) return false;
    return true;
}

bool strong_lifting_criterion(const Permutation& u, const Permutation& v, int i) {
    require_same_size(u, v);
    if (u.size() > 6) throw DomainError("strong lifting search is limited to n <= 6");
    for (const auto& a : SeqA::all(u.size())) {
        if (a_des_asc(a, v, i) != DesAsc::descent || a_des_asc(a, u, i) != DesAsc::ascent) continue;
        if (a_lesssim(a, u, v)) return true;
    }
    return false;
}

bool k_tilted_leq(const Permutation& u, const Permutation& v, int k) {
    require_same_size(u, v);
    if (k < 1 || k >= u.size()) throw DomainError("k outside [1,n-1]");
    const QbgGraph& g = qbg(u.size());
    std::vector<int> dist(g.vertices.size(), -1);
    std::deque<std::size_t> queue{u.rank()};
    dist[u.rank()] = 0;
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (const auto& arc : g.out[x]) {
            if (!(arc.i <= k && k < arc.j) || dist[arc.other] >= 0) continue;
            dist[arc.other] = dist[x] + 1;
            queue.push_back(arc.other);
        }
    }
    const int d = dist[v.rank()];
    return d >= 0 && d == ell(u, v);
}

}  // namespace tiltrich
