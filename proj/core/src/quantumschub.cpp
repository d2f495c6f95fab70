#include "tiltrich/quantumschub.hpp"

#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include <boost/multiprecision/gmp.hpp>

#include "tiltrich/config.hpp"
#include "tiltrich/tiltorder.hpp"

namespace tiltrich {

namespace {

using Rational = boost::multiprecision::mpq_rational;

std::mutex schubert_mutex;
std::map<Permutation, MultiPoly> schubert_cache;

MultiPoly::Key make_key(int n, const DegreeVec& q, const std::vector<int>& x) {
    if (static_cast<int>(q.d.size()) != n - 1 || static_cast<int>(x.size()) != n)
        throw DomainError("monomial exponent vectors have the wrong length");
    MultiPoly::Key key = q.d;
    key.insert(key.end(), x.begin(), x.end());
    return key;
}

}  // namespace

MultiPoly MultiPoly::constant(int n, const BigInt& c) {
    return x_monomial(n, std::vector<int>(static_cast<std::size_t>(n), 0), c);
}

MultiPoly MultiPoly::monomial(int n, const DegreeVec& q, const std::vector<int>& x, const BigInt& c) {
    MultiPoly p(n);
    p.add_term(make_key(n, q, x), c);
    return p;
}

MultiPoly MultiPoly::x_monomial(int n, const std::vector<int>& x, const BigInt& c) {
    return monomial(n, DegreeVec::zero(n), x, c);
}

MultiPoly MultiPoly::variable(int n, int i) {
    if (i < 1 || i > n) throw DomainError("variable index out of range");
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    x[static_cast<std::size_t>(i - 1)] = 1;
    return x_monomial(n, x);
}

void MultiPoly::add_term(const Key& key, const BigInt& c) {
    if (c == 0) return;
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

BigInt MultiPoly::coeff(const DegreeVec& q, const std::vector<int>& x) const {
    auto it = t_.find(make_key(n_, q, x));
    return it == t_.end() ? BigInt(0) : it->second;
}

DegreeVec MultiPoly::q_part(int n, const Key& key) {
    return DegreeVec(std::vector<int>(key.begin(), key.begin() + (n - 1)));
}

std::vector<int> MultiPoly::x_part(int n, const Key& key) {
    return std::vector<int>(key.begin() + (n - 1), key.end());
}

MultiPoly MultiPoly::q_coefficient(const DegreeVec& d) const {
    MultiPoly out(n_);
    for (const auto& [key, c] : t_)
        if (q_part(n_, key) == d) out.add_term(make_key(n_, DegreeVec::zero(n_), x_part(n_, key)), c);
    return out;
}

std::vector<DegreeVec> MultiPoly::q_degrees() const {
    std::set<DegreeVec> seen;
    for (const auto& [key, c] : t_) seen.insert(q_part(n_, key));
    return {seen.begin(), seen.end()};
}

std::pair<MultiPoly::Key, BigInt> MultiPoly::revlex_leading() const {
    if (t_.empty()) throw DomainError("zero polynomial has no leading term");
    return *t_.begin();
}

MultiPoly MultiPoly::swap_x(int i) const {
    if (i < 1 || i >= n_) throw DomainError("simple reflection index out of range");
    MultiPoly out(n_);
    const std::size_t a = static_cast<std::size_t>(n_ - 2 + i);
    for (const auto& [key, c] : t_) {
        Key k = key;
        std::swap(k[a], k[a + 1]);
        out.add_term(k, c);
    }
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    if (out.n_ == 0) out.n_ = o.n_;
    for (const auto& [k, c] : o.t_) out.add_term(k, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    if (out.n_ == 0) out.n_ = o.n_;
    for (const auto& [k, c] : o.t_) out.add_term(k, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (n_ != o.n_) throw DomainError("multiplying polynomials in different rings");
    MultiPoly out(n_);
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            Key k = ka;
            for (std::size_t t = 0; t < k.size(); ++t) k[t] += kb[t];
            out.add_term(k, ca * cb);
        }
    return out;
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : t_) {
        std::string mono;
        for (int k = 0; k < n_ - 1; ++k) {
            const int e = key[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            mono += "q" + std::to_string(k + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        for (int k = 0; k < n_; ++k) {
            const int e = key[static_cast<std::size_t>(n_ - 1 + k)];
            if (e == 0) continue;
            mono += "x" + std::to_string(k + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) os << a;
        else {
            if (a != 1) os << a;
            os << mono;
        }
    }
    return os.str();
}

MultiPoly divided_difference(int i, const MultiPoly& p) {
    const int n = p.n();
    if (i < 1 || i >= n) throw DomainError("divided difference index out of range");
    const std::size_t a = static_cast<std::size_t>(n - 2 + i);
    MultiPoly out(n);
    for (const auto& [key, c] : p.terms()) {
        const int ea = key[a];
        const int eb = key[a + 1];
        if (ea == eb) continue;
        const int lo = std::min(ea, eb);
        const int hi = std::max(ea, eb);
        const BigInt sign = ea > eb ? 1 : -1;
        // (x^hi y^lo - x^lo y^hi) / (x - y) = Σ x^{hi-1-t} y^{lo+t}
        for (int t = 0; t < hi - lo; ++t) {
            MultiPoly::Key k = key;
            k[a] = hi - 1 - t;
            k[a + 1] = lo + t;
            out.add_term(k, sign * c);
        }
    }
    return out;
}

MultiPoly schubert_poly(const Permutation& w) {
    {
        std::lock_guard<std::mutex> lock(schubert_mutex);
        auto it = schubert_cache.find(w);
        if (it != schubert_cache.end()) return it->second;
    }
    const int n = w.size();
    MultiPoly out;
    int asc = 0;
    for (int i = 1; i < n && asc == 0; ++i)
        if (w(i) < w(i + 1)) asc = i;
    if (asc == 0) {
        std::vector<int> rho(static_cast<std::size_t>(n), 0);
        for (int k = 1; k <= n; ++k) rho[static_cast<std::size_t>(k - 1)] = n - k;
        out = MultiPoly::x_monomial(n, rho);
    } else {
        out = divided_difference(asc, schubert_poly(w.times_simple(asc)));
    }
    std::lock_guard<std::mutex> lock(schubert_mutex);
    schubert_cache.emplace(w, out);
    return out;
}

QuantumExpansion quantum_chevalley(int k, const Permutation& w) {
    const int n = w.size();
    if (k < 1 || k >= n) throw DomainError("Chevalley index out of range");
    QuantumExpansion out;
    for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= n; ++j)
            if (auto wt = edge_weight(w, i, j)) out[{w.swap_positions(i, j), *wt}] += 1;
    return out;
}

MultiPoly path_schubert(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    const int n = u.size();
    require_gate(n, gates().max_path_n, "path Schubert polynomial");
    const auto dist = distances_to(v);
    // capacity[k] = Σ_{k' > k} (n - k')
    std::vector<int> capacity(static_cast<std::size_t>(n + 1), 0);
    for (int k = n - 2; k >= 0; --k) capacity[static_cast<std::size_t>(k)] = capacity[static_cast<std::size_t>(k + 1)] + (n - k - 1);
    MultiPoly out(n);
    std::vector<int> beta(static_cast<std::size_t>(n), 0);

    std::function<void(int, int, int, const Permutation&, const DegreeVec&)> dfs =
        [&](int k, int last_a, int used_b, const Permutation& cur, const DegreeVec& wt) {
            const int steps = beta[static_cast<std::size_t>(k - 1)];
            const int room = (n - k - steps) + capacity[static_cast<std::size_t>(k)];
            if ((*dist)[cur.rank()] > room) return;
            if (k == n - 1) {
                if (cur == v) {
                    std::vector<int> x(static_cast<std::size_t>(n), 0);
                    for (int t = 1; t < n; ++t) x[static_cast<std::size_t>(t - 1)] = n - t - beta[static_cast<std::size_t>(t - 1)];
                    out.add_term(make_key(n, wt, x), 1);
                }
            } else {
                dfs(k + 1, 1, 0, cur, wt);
            }
            for (int a = last_a; a <= k; ++a)
                for (int b = k + 1; b <= n; ++b) {
                    if (used_b & (1 << b)) continue;
                    const auto ew = edge_weight(cur, a, b);
                    if (!ew) continue;
                    ++beta[static_cast<std::size_t>(k - 1)];
                    dfs(k, a, used_b | (1 << b), cur.swap_positions(a, b), wt + *ew);
                    --beta[static_cast<std::size_t>(k - 1)];
                }
        };
    if (n == 1) return MultiPoly::constant(1, 1);
    dfs(1, 1, 0, u, DegreeVec::zero(n));
    return out;
}

BigInt SchubertExpansion::at(const Permutation& w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? BigInt(0) : it->second;
}

std::string SchubertExpansion::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : coeffs) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        BigInt a = abs(c);
        if (a != 1) os << a;
        os << "σ_{" << w.str() << "}";
    }
    return os.str();
}

SchubertExpansion schubert_expand(const MultiPoly& p) {
    const int n = p.n();
    for (const auto& [key, c] : p.terms())
        if (!MultiPoly::q_part(n, key).is_zero()) throw DomainError("Schubert expansion needs a q-free polynomial");
    const auto basis = Permutation::all(n);
    std::vector<MultiPoly> polys;
    std::map<MultiPoly::Key, std::size_t> rows;
    for (const auto& w : basis) {
        polys.push_back(schubert_poly(w));
        for (const auto& [key, c] : polys.back().terms()) rows.emplace(key, 0);
    }
    for (const auto& [key, c] : p.terms()) rows.emplace(key, 0);
    std::size_t r = 0;
    for (auto& [key, idx] : rows) idx = r++;
    const std::size_t cols = basis.size();
    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t c = 0; c < cols; ++c)
        for (const auto& [key, coef] : polys[c].terms()) m[rows.at(key)][c] = Rational(coef);
    for (const auto& [key, coef] : p.terms()) m[rows.at(key)][cols] = Rational(coef);

    std::vector<std::size_t> pivot_col;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < m.size(); ++c) {
        std::size_t piv = prow;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[prow], m[piv]);
        const Rational lead = m[prow][c];
        for (std::size_t j = c; j <= cols; ++j) m[prow][j] /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == prow || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[prow][j];
        }
        pivot_col.push_back(c);
        ++prow;
    }
    if (pivot_col.size() != cols) throw ConsistencyError("Schubert polynomials are not independent");
    for (std::size_t i = prow; i < m.size(); ++i)
        if (m[i][cols] != 0) throw ConsistencyError("polynomial is outside the span of Schubert polynomials");
    SchubertExpansion out;
    out.d = DegreeVec::zero(n);
    for (std::size_t i = 0; i < prow; ++i) {
        const Rational& val = m[i][cols];
        if (val == 0) continue;
        if (denominator(val) != 1) throw ConsistencyError("fractional Schubert coefficient " + val.str());
        out.coeffs[basis[pivot_col[i]]] = numerator(val);
    }
    return out;
}

SchubertExpansion gw_min_degree(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    const int n = u.size();
    require_gate(n, gates().max_gw_n, "Gromov-Witten expansion");
    const DegreeVec d = min_degree(u, v);
    const SchubertExpansion e = schubert_expand(path_schubert(u, v).q_coefficient(d));
    const Permutation w0 = Permutation::longest(n);
    SchubertExpansion out;
    out.d = d;
    for (const auto& [x, c] : e.coeffs) {
        if (c < 0) throw ConsistencyError("negative Gromov-Witten invariant for " + u.str() + ", " + v.str());
        out.coeffs[w0.compose(x)] = c;
    }
    return out;
}

SchubertExpansion cohomology_class_T(const Permutation& u, const Permutation& v) {
    const SchubertExpansion gw = gw_min_degree(u, v);
    const Permutation w0 = Permutation::longest(u.size());
    SchubertExpansion out;
    out.d = gw.d;
    for (const auto& [w, c] : gw.coeffs) out.coeffs[w0.compose(w)] = c;
    return out;
}

DescentCyclingReport check_descent_cycling(const Permutation& u, const Permutation& v, int i) {
    require_same_size(u, v);
    const int n = u.size();
    require_gate(n, gates().max_descent_cycling_n, "descent cycling");
    if (i < 1 || i >= n) throw DomainError("simple reflection index out of range");
    if (!interval_s_invariant(u, v, i))
        throw DomainError("[" + u.str() + "," + v.str() + "] is not invariant under s_" + std::to_string(i));
    DescentCyclingReport rep;
    rep.u = u;
    rep.v = v;
    rep.i = i;
    const SchubertExpansion base = gw_min_degree(u, v);
    const SchubertExpansion left = gw_min_degree(u.times_simple(i), v);
    const SchubertExpansion right = gw_min_degree(u, v.times_simple(i));
    for (const auto& w : Permutation::all(n)) {
        const Permutation ws = w.times_simple(i);
        if (ws.length() < w.length()) continue;
        ++rep.checked;
        if (base.at(w) != 0)
            rep.violations.push_back("c_{u,w} = " + base.at(w).str() + " is nonzero at w = " + w.str());
        const BigInt a = base.at(ws);
        const BigInt b = left.at(w);
        const BigInt c = right.at(w);
        if (a != b || b != c)
            rep.violations.push_back("w = " + w.str() + ": " + a.str() + ", " + b.str() + ", " + c.str());
    }
    return rep;
}

void clear_schubert_caches() {
    std::lock_guard<std::mutex> lock(schubert_mutex);
    schubert_cache.clear();
}

}  // namespace tiltrich
