#include "tiltrich/varietylab.hpp"

#include <tuple>

#include "tiltrich/config.hpp"

namespace tiltrich {

namespace {

long long normalize(long long v, long long p) {
    if (p == 0) return v;
    long long r = v % p;
    return r < 0 ? r + p : r;
}

long long inverse_mod(long long v, long long p) {
    long long r0 = p;
    long long r1 = normalize(v, p);
    long long t0 = 0;
    long long t1 = 1;
    while (r1 != 0) {
        const long long qt = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - qt * t1);
    }
    if (r0 != 1) throw DomainError("element is not invertible modulo " + std::to_string(p));
    return normalize(t0, p);
}

}  // namespace

ModP::ModP(long long v, long long p) : v_(normalize(v, p)), p_(p) {
    if (p < 0) throw DomainError("negative modulus");
}

long long ModP::join(long long a, long long b) {
    if (a && b && a != b) throw DomainError("mixing different prime fields");
    return a ? a : b;
}

ModP ModP::operator+(const ModP& o) const {
    const long long p = join(p_, o.p_);
    return ModP(normalize(v_, p) + normalize(o.v_, p), p);
}

ModP ModP::operator-(const ModP& o) const {
    const long long p = join(p_, o.p_);
    return ModP(normalize(v_, p) - normalize(o.v_, p), p);
}

ModP ModP::operator*(const ModP& o) const {
    const long long p = join(p_, o.p_);
    return ModP(normalize(v_, p) * normalize(o.v_, p), p);
}

ModP ModP::operator/(const ModP& o) const {
    const long long p = join(p_, o.p_);
    if (o.is_zero() || (p == 0 && v_ % o.v_ != 0)) throw DomainError("inexact division");
    if (p == 0) return ModP(v_ / o.v_, 0);
    return ModP(normalize(v_, p) * inverse_mod(o.v_, p), p);
}

RotheDiagram tilted_rothe(const SeqA& a, const Permutation& w) {
    if (a.n() != w.size()) throw DomainError("sequence and permutation sizes differ");
    const int n = w.size();
    RotheDiagram d;
    for (int k = 1; k <= n; ++k)
        for (int i = k + 1; i <= n; ++i)
            if (shifted_less(n, a.at(k), w(i), w(k))) d.insert({w(i), k});
    return d;
}

RotheDiagram tilted_rothe_op(const SeqA& a, const Permutation& w) {
    if (a.n() != w.size()) throw DomainError("sequence and permutation sizes differ");
    const int n = w.size();
    RotheDiagram d;
    for (int k = 1; k <= n; ++k)
        for (int i = k + 1; i <= n; ++i)
            if (shifted_less(n, a.at(k), w(k), w(i))) d.insert({w(i), k});
    return d;
}

SignTrace tnn_signs(const TiltedWord& word_v, const Subword& sub) {
    if (!sub.distinguished || !sub.jminus.empty())
        throw DomainError("sign vectors need the positive distinguished subword");
    if (sub.keep.size() != word_v.factors.size()) throw DomainError("subword does not match the word");
    const int n = word_v.n();
    const auto levels = word_v.levels();
    const auto prefixes = word_v.prefixes();
    SignTrace out;
    std::vector<int> sign(static_cast<std::size_t>(n), 1);
    out.vectors.push_back(sign);
    for (std::size_t j = 0; j < word_v.factors.size(); ++j) {
        const int i = word_v.factors[j];
        if (i == TiltedWord::bar) {
            const SeqA& lv = levels[j];
            const auto js = jumps(lv);
            if (js.empty()) throw DomainError("bar at a constant level");
            const int q = js.front();
            const SubsetK vq = prefixes[j + 1].prefix(q);
            int p = 0;
            for (int x : cyclic_interval(n, lv.at(1), lv.at(q + 1), true, false)) p += vq.contains(x);
            if (p % 2 == 1)
                for (int t = p + 1; t <= q; ++t) sign[static_cast<std::size_t>(t - 1)] *= -1;
        } else if (sub.keep[j]) {
            std::swap(sign[static_cast<std::size_t>(i - 1)], sign[static_cast<std::size_t>(i)]);
        } else {
            out.param_signs.push_back(sign[static_cast<std::size_t>(i - 1)] * sign[static_cast<std::size_t>(i)]);
        }
        out.vectors.push_back(sign);
    }
    return out;
}

bool is_tnn(const ExactMatrix<Rational>& m, const SeqA& a) {
    const int n = m.size();
    if (a.n() != n) throw DomainError("sequence and matrix sizes differ");
    for (int k = 1; k <= n; ++k) {
        int seen = 0;
        std::vector<int> pick(static_cast<std::size_t>(n), 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        std::sort(pick.begin(), pick.end());
        do {
            std::vector<int> rows;
            for (int r = 1; r <= n; ++r)
                if (pick[static_cast<std::size_t>(r - 1)]) rows.push_back(r);
            const auto sorted = shifted_sorted(a.at(k), SubsetK(n, rows));
            const Rational d = plucker(m, sorted);
            const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
            if (s == 0) continue;
            if (seen == 0) seen = s;
            else if (seen != s) return false;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return true;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BigInt total_flags_fq(int n, long long p) {
    BigInt total = 0;
    for (const auto& w : Permutation::all(n)) total += boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(w.length()));
    return total;
}

BigInt count_points_fq(const Permutation& u, const Permutation& v, long long p, unsigned workers) {
    require_same_size(u, v);
    const int n = u.size();
    require_gate(n, gates().max_count_n, "point counting");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p > gates().max_prime) throw DomainError("prime " + std::to_string(p) + " exceeds the configured limit");
    const SeqA ones = SeqA::ones(n);
    const auto perms = Permutation::all(n);
    std::vector<long long> counts(perms.size(), 0);
    parallel_for(perms.size(), workers, [&](std::size_t idx) {
        const Permutation& w = perms[idx];
        const std::size_t cells = tilted_rothe(ones, w).size();
        std::vector<long long> digits(cells, 0);
        std::vector<ModP> params(cells);
        long long count = 0;
        while (true) {
            for (std::size_t t = 0; t < cells; ++t) params[t] = ModP(digits[t], p);
            const auto m = canonical_cell_matrix(ones, w, CellKind::cell, params);
            if (in_tilted_richardson(m, u, v, true)) ++count;
            std::size_t t = 0;
            while (t < cells && ++digits[t] == p) digits[t++] = 0;
            if (t == cells) break;
        }
        counts[idx] = count;
    });
    BigInt total = 0;
    for (long long c : counts) total += c;
    return total;
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(nonzero ? 1 : 0, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::bernoulli_distribution neg(0.5);
    Rational r(num(rng), den(rng));
    return neg(rng) ? Rational(-r) : r;
}

ExactMatrix<Rational> random_invertible_matrix(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-5, 5);
    while (true) {
        ExactMatrix<Rational> m(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m(i, j) = Rational(entry(rng));
        if (determinant(m) != 0) return m;
    }
}

std::vector<DeodharSample> sample_deodhar(const Permutation& u, const Permutation& v, int count, std::uint64_t seed) {
    const SeqA a = witness_a(u, v);
    const TiltedWord word = regular_tilted_reduced_word(a, v);
    const auto subs = distinguished_subwords(word, u);
    if (subs.empty()) throw ConsistencyError("no distinguished subword for " + u.str() + ", " + v.str());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    std::vector<DeodharSample> out;
    for (int t = 0; t < count; ++t) {
        DeodharSample s;
        s.sub = subs[pick(rng)];
        for (std::size_t j = 0; j < s.sub.jcirc.size(); ++j) s.p.push_back(random_rational(rng, true));
        for (std::size_t j = 0; j < s.sub.jminus.size(); ++j) s.m.push_back(random_rational(rng, false));
        s.matrix = deodhar_point(word, s.sub, s.p, s.m);
        out.push_back(std::move(s));
    }
    return out;
}

DeodharSample sample_tnn(const Permutation& u, const Permutation& v, std::mt19937_64& rng, int flip_index) {
    const SeqA a = witness_a(u, v);
    const TiltedWord word = regular_tilted_reduced_word(a, v);
    DeodharSample s;
    s.sub = positive_distinguished_subword(word, u);
    const SignTrace signs = tnn_signs(word, s.sub);
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (std::size_t j = 0; j < signs.param_signs.size(); ++j) {
        Rational t(num(rng), den(rng));
        if (signs.param_signs[j] < 0) t = -t;
        if (static_cast<int>(j) == flip_index) t = -t;
        s.p.push_back(t);
    }
    s.matrix = deodhar_point(word, s.sub, s.p, s.m);
    return s;
}

}  // namespace tiltrich
