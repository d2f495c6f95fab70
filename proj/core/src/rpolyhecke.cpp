#include "tiltrich/rpolyhecke.hpp"

#include <cctype>
#include <mutex>
#include <tuple>

#include "tiltrich/qbgraph.hpp"
#include "tiltrich/tiltorder.hpp"
#include "tiltrich/tiltwords.hpp"

namespace tiltrich {

LaurentPoly LaurentPoly::monomial(int exp, const BigInt& c) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

void LaurentPoly::add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = c_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

int LaurentPoly::degree() const {
    if (c_.empty()) throw DomainError("degree of the zero polynomial");
    return c_.rbegin()->first;
}

int LaurentPoly::min_degree() const {
    if (c_.empty()) throw DomainError("degree of the zero polynomial");
    return c_.begin()->first;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::eval(const BigInt& x) const {
    if (!is_polynomial()) throw DomainError("evaluating a Laurent polynomial with negative exponents");
    BigInt acc = 0;
    if (c_.empty()) return acc;
    for (int e = degree(); e >= 0; --e) acc = acc * x + coeff(e);
    return acc;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw DomainError("negative power");
    LaurentPoly out(1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) out.c_.emplace(e + k, c);
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.c_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) out.c_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

namespace {

std::string render(const std::map<int, BigInt>& terms, const std::string& var, bool paren) {
    if (terms.empty()) return "0";
    std::string s;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const int e = it->first;
        BigInt c = it->second;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        std::string mono;
        if (e != 0) {
            mono = paren ? "(" + var + ")" : var;
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (c != 1 || e == 0) s += c.str();
        s += mono;
    }
    return s;
}

}  // namespace

std::string LaurentPoly::str() const { return render(c_, "q", false); }

std::string LaurentPoly::str_q_minus_one() const {
    if (!is_polynomial()) throw DomainError("(q-1) expansion needs a polynomial");
    // Taylor expansion at q = 1 via repeated synthetic division.
    std::vector<BigInt> a;
    if (!c_.empty())
        for (int e = 0; e <= degree(); ++e) a.push_back(coeff(e));
    std::map<int, BigInt> shifted_terms;
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t i = a.size() - 1; i > k; --i) a[i - 1] += a[i];
        if (a[k] != 0) shifted_terms.emplace(static_cast<int>(k), a[k]);
    }
    return render(shifted_terms, "q-1", true);
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (c != ' ') t.push_back(c);
    if (t.empty()) throw DomainError("empty polynomial text");
    LaurentPoly out;
    std::size_t k = 0;
    while (k < t.size()) {
        int sign = 1;
        if (t[k] == '+' || t[k] == '-') {
            sign = t[k] == '-' ? -1 : 1;
            ++k;
        }
        std::size_t e = k;
        while (e < t.size() && std::isdigit(static_cast<unsigned char>(t[e]))) ++e;
        const bool had_digits = e > k;
        BigInt c = had_digits ? BigInt(t.substr(k, e - k)) : BigInt(1);
        k = e;
        int exp = 0;
        if (k < t.size() && t[k] == 'q') {
            ++k;
            exp = 1;
            if (k < t.size() && t[k] == '^') {
                ++k;
                std::size_t f = k;
                if (f < t.size() && t[f] == '-') ++f;
                while (f < t.size() && std::isdigit(static_cast<unsigned char>(t[f]))) ++f;
                if (f == k) throw DomainError("missing exponent in polynomial text");
                exp = std::stoi(t.substr(k, f - k));
                k = f;
            }
        } else if (!had_digits) {
            throw DomainError("bad polynomial text '" + std::string(text) + "'");
        }
        if (k < t.size() && t[k] != '+' && t[k] != '-')
            throw DomainError("bad polynomial text '" + std::string(text) + "'");
        out.add_term(exp, sign * c);
    }
    return out;
}

HeckeElt HeckeElt::basis(const Permutation& w) {
    HeckeElt h(w.size());
    h.add(w, LaurentPoly(1));
    return h;
}

void HeckeElt::add(const Permutation& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

LaurentPoly HeckeElt::coeff(const Permutation& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? LaurentPoly() : it->second;
}

HeckeElt HeckeElt::times_generator(int i) const {
    HeckeElt out(n_);
    const LaurentPoly q = LaurentPoly::q();
    for (const auto& [w, c] : t_) {
        const Permutation ws = w.times_simple(i);
        if (w(i) < w(i + 1)) {
            out.add(ws, c);
        } else {
            out.add(w, c * LaurentPoly::q_minus_one());
            out.add(ws, c * q);
        }
    }
    return out;
}

HeckeElt HeckeElt::generator_times(int i) const {
    HeckeElt out(n_);
    const LaurentPoly q = LaurentPoly::q();
    const Permutation s = Permutation::simple(n_, i);
    for (const auto& [w, c] : t_) {
        const Permutation sw = s.compose(w);
        if (sw.length() > w.length()) {
            out.add(sw, c);
        } else {
            out.add(w, c * LaurentPoly::q_minus_one());
            out.add(sw, c * q);
        }
    }
    return out;
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
    HeckeElt out = *this;
    if (out.n_ == 0) out.n_ = o.n_;
    for (const auto& [w, c] : o.t_) out.add(w, c);
    return out;
}

HeckeElt HeckeElt::operator*(const LaurentPoly& c) const {
    HeckeElt out(n_);
    for (const auto& [w, x] : t_) out.add(w, x * c);
    return out;
}

HeckeElt hecke_mul(const HeckeElt& x, const HeckeElt& y) {
    if (x.n() != y.n()) throw DomainError("Hecke elements of different ranks");
    HeckeElt out(x.n());
    for (const auto& [w, c] : y.terms()) {
        HeckeElt z = x * c;
        for (int i : reduced_word(w)) z = z.times_generator(i);
        out = out + z;
    }
    return out;
}

HeckeElt hecke_gen_inverse(int n, int i) {
    const LaurentPoly qinv = LaurentPoly::monomial(-1);
    return HeckeElt::generator(n, i) * qinv + HeckeElt::one(n) * (qinv - LaurentPoly(1));
}

LaurentPoly trace(const HeckeElt& x) { return x.coeff(Permutation::identity(x.n())); }

HeckeElt hecke_word(int n, const std::vector<int>& gens) {
    HeckeElt h = HeckeElt::one(n);
    for (int i : gens) h = h.times_generator(i);
    return h;
}

HeckeElt hecke_word_inverse(int n, const std::vector<int>& gens) {
    HeckeElt h = HeckeElt::one(n);
    const LaurentPoly qinv = LaurentPoly::monomial(-1);
    const LaurentPoly c0 = qinv - LaurentPoly(1);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) h = h.times_generator(*it) * qinv + h * c0;
    return h;
}

namespace {

std::mutex r_mutex;
std::map<std::pair<Permutation, Permutation>, QPoly> classical_cache;
std::map<std::tuple<Permutation, Permutation, SeqA>, QPoly> tilted_cache;

template <class Key>
bool lookup(const std::map<Key, QPoly>& cache, const Key& key, QPoly& out) {
    std::lock_guard<std::mutex> lock(r_mutex);
    auto it = cache.find(key);
    if (it == cache.end()) return false;
    out = it->second;
    return true;
}

template <class Key>
void store(std::map<Key, QPoly>& cache, const Key& key, const QPoly& value) {
    std::lock_guard<std::mutex> lock(r_mutex);
    if (cache.size() > 2000000) cache.clear();
    cache.emplace(key, value);
}

QPoly tilted_rec(const Permutation& u, const Permutation& v, const SeqA& a, int budget) {
    if (u == v) return QPoly(1);
    if (!a_lesssim(a, u, v)) return QPoly();
    if (budget <= 0) throw ConsistencyError("tilted R-polynomial recursion did not terminate");
    const auto key = std::make_tuple(u, v, a);
    QPoly cached;
    if (lookup(tilted_cache, key, cached)) return cached;
    QPoly out;
    const auto des = a_descents(a, v);
    if (!des.empty()) {
        const int i = des.front();
        const Permutation us = u.times_simple(i);
        const Permutation vs = v.times_simple(i);
        if (a_des_asc(a, u, i) == DesAsc::descent) {
            out = tilted_rec(us, vs, a, budget - 1);
        } else {
            out = LaurentPoly::q() * tilted_rec(us, vs, a, budget - 1) +
                  LaurentPoly::q_minus_one() * tilted_rec(u, vs, a, budget - 1);
        }
    } else {
        if (jumps(a).empty() || !flattenable(a, v))
            throw ConsistencyError("no descent and no flattening step for " + v.str() + " at a=" + a.str());
        out = tilted_rec(u, v, flatten(a), budget - 1);
    }
    store(tilted_cache, key, out);
    return out;
}

QPoly require_polynomial(const LaurentPoly& p, const std::string& what) {
    if (!p.is_polynomial()) throw ConsistencyError(what + " produced negative powers of q: " + p.str());
    return p;
}

}  // namespace

QPoly classical_r(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    if (u == v) return QPoly(1);
    if (!bruhat_leq(u, v)) return QPoly();
    const auto key = std::make_pair(u, v);
    QPoly cached;
    if (lookup(classical_cache, key, cached)) return cached;
    const int i = v.descents().front();
    const Permutation us = u.times_simple(i);
    const Permutation vs = v.times_simple(i);
    QPoly out;
    if (u(i) > u(i + 1)) {
        out = classical_r(us, vs);
    } else {
        out = LaurentPoly::q() * classical_r(us, vs) + LaurentPoly::q_minus_one() * classical_r(u, vs);
    }
    store(classical_cache, key, out);
    return out;
}

QPoly classical_r_hecke(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    if (!bruhat_leq(u, v)) return QPoly();
    const int n = u.size();
    const HeckeElt x = hecke_mul(hecke_word_inverse(n, reduced_word(v)), HeckeElt::basis(u));
    const int d = v.length() - u.length();
    const LaurentPoly r = trace(x).shifted(d);
    return require_polynomial(d % 2 == 0 ? r : -r, "classical Hecke formula");
}

QPoly rtilt_deodhar(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    const SeqA a = witness_a(u, v);
    const TiltedWord word = regular_tilted_reduced_word(a, v);
    QPoly out;
    for (const auto& sub : distinguished_subwords(word, u)) {
        out += LaurentPoly::q_minus_one().pow(static_cast<int>(sub.jcirc.size())) *
               LaurentPoly::q().pow(static_cast<int>(sub.jminus.size()));
    }
    return out;
}

QPoly rtilt_recursive(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    const SeqA a = witness_a(u, v);
    return tilted_rec(u, v, a, word_length(a, v) + 1);
}

QPoly rtilt_hecke(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    const int n = u.size();
    const SeqA a = witness_a(u, v);
    const auto gu = tilted_reduced_word(a, u).generators();
    const auto gv = tilted_reduced_word(a, v).generators();
    HeckeElt x = hecke_word_inverse(n, gv);
    for (int i : gu) x = x.times_generator(i);
    const int d = ell(u, v);
    const LaurentPoly r = trace(x).shifted(d);
    return require_polynomial(d % 2 == 0 ? r : -r, "tilted Hecke formula");
}

void clear_rpoly_caches() {
    std::lock_guard<std::mutex> lock(r_mutex);
    classical_cache.clear();
    tilted_cache.clear();
}

}  // namespace tiltrich
