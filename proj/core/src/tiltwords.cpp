#include "tiltrich/tiltwords.hpp"

#include <algorithm>
#include <functional>

namespace tiltrich {

namespace {

Permutation sort_prefix(const Permutation& w, int m, int r) {
    std::vector<int> x = w.oneline();
    const int n = w.size();
    std::sort(x.begin(), x.begin() + m, [&](int p, int q) { return shifted_key(n, r, p) < shifted_key(n, r, q); });
    return Permutation(std::move(x));
}

void append_segment(std::vector<int>& factors, const Permutation& from, const Permutation& to) {
    const auto word = reduced_word(from.inverse().compose(to));
    factors.insert(factors.end(), word.begin(), word.end());
}

bool valid_rec(const SeqA& a, const std::vector<int>& f) {
    const auto jump = jumps(a);
    const auto bars = static_cast<std::size_t>(std::count(f.begin(), f.end(), TiltedWord::bar));
    if (bars != jump.size()) return false;
    if (jump.empty()) return true;
    const auto last = static_cast<std::size_t>(std::find(f.rbegin(), f.rend(), TiltedWord::bar).base() - f.begin()) - 1;
    for (std::size_t k = last + 1; k < f.size(); ++k)
        if (std::find(jump.begin(), jump.end(), f[k]) != jump.end()) return false;
    std::vector<int> prefix(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(last));
    std::vector<int> gens;
    for (int x : prefix)
        if (x != TiltedWord::bar) gens.push_back(x);
    if (!flattenable(a, word_product(a.n(), gens))) return false;
    return valid_rec(flatten(a), prefix);
}

bool decreases(const SeqA& level, const Permutation& w, int i) {
    const int r = level.at(i);
    const int n = w.size();
    return shifted_key(n, r, w(i + 1)) < shifted_key(n, r, w(i));
}

}  // namespace

std::vector<int> jumps(const SeqA& a) {
    std::vector<int> out;
    for (int j = 1; j <= a.n(); ++j)
        if (a.at(j) != a.at(j + 1)) out.push_back(j);
    return out;
}

SeqA flatten(const SeqA& a) {
    const auto jump = jumps(a);
    if (jump.empty()) throw DomainError("flatten needs a nonempty jump set");
    const int jmin = jump.front();
    SeqA out = a;
    for (int k = 1; k <= jmin; ++k) out.a[static_cast<std::size_t>(k - 1)] = a.at(jmin + 1);
    return out;
}

SeqA back_flatten(const SeqA& a) {
    const int n = a.n();
    int jmax = n - 1;
    while (jmax >= 1 && a.at(jmax) == a.at(n)) --jmax;
    if (jmax == 0) throw DomainError("back_flatten needs a non-constant sequence");
    SeqA out = a;
    for (int k = jmax + 1; k <= n; ++k) out.a[static_cast<std::size_t>(k - 1)] = a.at(jmax);
    return out;
}

std::optional<int> flattenable(const SeqA& a, const Permutation& w) {
    const auto jump = jumps(a);
    if (jump.empty()) throw DomainError("flattenable needs a nonempty jump set");
    const int jmin = jump.front();
    const int n = w.size();
    const int lo = a.at(1);
    const int hi = a.at(jmin + 1);
    int p = 0;
    while (p < jmin && cyclic_interval_contains(n, lo, hi, w(p + 1), true, false)) ++p;
    for (int i = p + 1; i <= jmin; ++i)
        if (!cyclic_interval_contains(n, hi, lo, w(i), true, false)) return std::nullopt;
    return p;
}

Permutation bigrassmannian(int n, int a, int b) {
    if (a < 0 || b < 0 || a + b > n) throw DomainError("bi-Grassmannian parameters out of range");
    std::vector<int> w;
    for (int i = a + 1; i <= a + b; ++i) w.push_back(i);
    for (int i = 1; i <= a; ++i) w.push_back(i);
    for (int i = a + b + 1; i <= n; ++i) w.push_back(i);
    return Permutation(std::move(w));
}

Permutation TiltedWord::target() const { return word_product(n(), generators()); }

std::vector<int> TiltedWord::generators() const {
    std::vector<int> g;
    for (int x : factors)
        if (x != bar) g.push_back(x);
    return g;
}

std::vector<SeqA> TiltedWord::levels() const {
    std::vector<SeqA> out(factors.size());
    SeqA cur = a;
    for (std::size_t j = factors.size(); j-- > 0;) {
        out[j] = cur;
        if (factors[j] == bar) cur = flatten(cur);
    }
    return out;
}

std::vector<Permutation> TiltedWord::prefixes() const {
    std::vector<Permutation> out{Permutation::identity(n())};
    for (int x : factors) out.push_back(x == bar ? out.back() : out.back().times_simple(x));
    return out;
}

std::string TiltedWord::str() const {
    std::string s;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j) s += " ";
        s += factors[j] == bar ? "|" : "s" + std::to_string(factors[j]);
    }
    return s;
}

TiltedWord TiltedWord::parse(const SeqA& a, std::string_view text) {
    TiltedWord w{a, {}};
    std::size_t k = 0;
    while (k < text.size()) {
        const char c = text[k];
        if (c == ' ' || c == '\t') {
            ++k;
        } else if (c == '|') {
            w.factors.push_back(bar);
            ++k;
        } else if (c == 's') {
            std::size_t e = k + 1;
            while (e < text.size() && text[e] >= '0' && text[e] <= '9') ++e;
            if (e == k + 1) throw DomainError("generator without index in word text");
            const int i = std::stoi(std::string(text.substr(k + 1, e - k - 1)));
            if (i < 1 || i >= a.n()) throw DomainError("generator index out of range in word text");
            w.factors.push_back(i);
            k = e;
        } else {
            throw DomainError(std::string("unexpected character '") + c + "' in word text");
        }
    }
    return w;
}

TiltedWord tilted_reduced_word(const SeqA& a, const Permutation& w) {
    if (a.n() != w.size()) throw DomainError("sequence a and permutation sizes differ");
    const auto jump = jumps(a);
    const std::size_t t = jump.size();
    std::vector<Permutation> chain(t + 2, w);
    for (std::size_t k = 1; k <= t; ++k) chain[k] = sort_prefix(w, jump[k - 1], a.at(jump[k - 1]));
    chain[t + 1] = Permutation::identity(w.size());
    TiltedWord out{a, {}};
    for (std::size_t k = t + 1; k-- > 0;) {
        append_segment(out.factors, chain[k + 1], chain[k]);
        if (k > 0) out.factors.push_back(TiltedWord::bar);
    }
    return out;
}

TiltedWord regular_tilted_reduced_word(const SeqA& a, const Permutation& w) {
    if (a.n() != w.size()) throw DomainError("sequence a and permutation sizes differ");
    const auto jump = jumps(a);
    std::vector<Permutation> seq{Permutation::identity(w.size())};
    for (std::size_t k = jump.size(); k >= 1; --k) {
        seq.push_back(sort_prefix(w, jump[k - 1], a.at(jump[k - 1] + 1)));
        seq.push_back(sort_prefix(w, jump[k - 1], a.at(jump[k - 1])));
    }
    seq.push_back(w);
    TiltedWord out{a, {}};
    for (std::size_t s = 1; s < seq.size(); ++s) {
        append_segment(out.factors, seq[s - 1], seq[s]);
        if (s % 2 == 0 && s <= 2 * jump.size()) out.factors.push_back(TiltedWord::bar);
    }
    return out;
}

int word_length(const SeqA& a, const Permutation& w) { return tilted_reduced_word(a, w).length(); }

bool is_valid(const TiltedWord& word) {
    for (int x : word.factors)
        if (x != TiltedWord::bar && (x < 1 || x >= word.n())) return false;
    return valid_rec(word.a, word.factors);
}

bool is_regular(const TiltedWord& word) {
    if (!is_valid(word)) return false;
    const auto levels = word.levels();
    const auto pre = word.prefixes();
    const int n = word.n();
    for (std::size_t j = 0; j < word.factors.size(); ++j) {
        if (word.factors[j] != TiltedWord::bar) continue;
        const SeqA& level = levels[j];
        const int q = jumps(level).front();
        const Permutation& v = pre[j];
        int p = 0;
        for (int k = 1; k <= q; ++k)
            if (cyclic_interval_contains(n, level.at(1), level.at(q + 1), v(k), true, false)) ++p;
        const auto need = static_cast<std::size_t>(p * (q - p));
        if (need > j) return false;
        std::vector<int> tail(word.factors.begin() + static_cast<std::ptrdiff_t>(j - need),
                              word.factors.begin() + static_cast<std::ptrdiff_t>(j));
        if (std::count(tail.begin(), tail.end(), TiltedWord::bar) != 0) return false;
        if (word_product(n, tail) != bigrassmannian(n, q - p, p)) return false;
    }
    return true;
}

bool is_reduced(const TiltedWord& word) {
    return is_valid(word) && word.length() == word_length(word.a, word.target());
}

std::string Subword::str(const TiltedWord& parent) const {
    std::string s;
    for (std::size_t j = 0; j < parent.factors.size(); ++j) {
        if (j) s += " ";
        const int f = parent.factors[j];
        if (f == TiltedWord::bar) {
            s += "|";
        } else if (!keep[j]) {
            s += "1";
        } else {
            const bool minus = std::find(jminus.begin(), jminus.end(), static_cast<int>(j) + 1) != jminus.end();
            s += (minus ? "~s" : "s") + std::to_string(f);
        }
    }
    return s;
}

Subword classify_subword(const TiltedWord& word, const std::vector<bool>& keep) {
    if (keep.size() != word.factors.size()) throw DomainError("subword mask size mismatch");
    const auto levels = word.levels();
    Subword sub;
    sub.keep = keep;
    sub.distinguished = true;
    Permutation cur = Permutation::identity(word.n());
    for (std::size_t j = 0; j < word.factors.size(); ++j) {
        const int i = word.factors[j];
        if (i == TiltedWord::bar) {
            sub.keep[j] = true;
            continue;
        }
        const bool down = decreases(levels[j], cur, i);
        const int pos = static_cast<int>(j) + 1;
        if (keep[j]) {
            (down ? sub.jminus : sub.jplus).push_back(pos);
            cur = cur.times_simple(i);
        } else {
            sub.jcirc.push_back(pos);
            if (down) sub.distinguished = false;
        }
    }
    sub.target = cur;
    return sub;
}

bool subword_is_valid(const TiltedWord& word, const std::vector<bool>& keep) {
    TiltedWord kept{word.a, {}};
    for (std::size_t j = 0; j < word.factors.size(); ++j)
        if (word.factors[j] == TiltedWord::bar || keep[j]) kept.factors.push_back(word.factors[j]);
    return is_valid(kept);
}

std::vector<Subword> distinguished_subwords(const TiltedWord& word_v, const Permutation& u, bool prune) {
    const Permutation v = word_v.target();
    require_same_size(u, v);
    if (!a_sim(word_v.a, u, v)) throw DomainError(u.str() + " is not ∼_a-equivalent to " + v.str());
    const auto levels = word_v.levels();
    const std::size_t len = word_v.factors.size();
    std::vector<int> remaining(len + 1, 0);
    for (std::size_t j = len; j-- > 0;) remaining[j] = remaining[j + 1] + (word_v.factors[j] != TiltedWord::bar);
    std::vector<Subword> out;
    std::vector<bool> keep(len, true);
    std::function<void(std::size_t, const Permutation&)> dfs = [&](std::size_t j, const Permutation& cur) {
        if (prune && cur.inverse().compose(u).length() > remaining[j]) return;
        if (j == len) {
            if (cur == u) out.push_back(classify_subword(word_v, keep));
            return;
        }
        const int i = word_v.factors[j];
        if (i == TiltedWord::bar) {
            if (!flattenable(levels[j], cur)) return;
            keep[j] = true;
            dfs(j + 1, cur);
            return;
        }
        keep[j] = true;
        dfs(j + 1, cur.times_simple(i));
        if (!decreases(levels[j], cur, i)) {
            keep[j] = false;
            dfs(j + 1, cur);
            keep[j] = true;
        }
    };
    dfs(0, Permutation::identity(u.size()));
    return out;
}

Subword positive_distinguished_subword(const TiltedWord& word_v, const Permutation& u) {
    const Permutation v = word_v.target();
    require_same_size(u, v);
    if (!a_lesssim(word_v.a, u, v))
        throw DomainError(u.str() + " is not ≲_a " + v.str() + " for a=" + word_v.a.str());
    const auto levels = word_v.levels();
    std::vector<bool> keep(word_v.factors.size(), true);
    Permutation cur = u;
    for (std::size_t j = word_v.factors.size(); j-- > 0;) {
        const int i = word_v.factors[j];
        if (i == TiltedWord::bar) continue;
        if (a_des_asc(levels[j], cur, i) == DesAsc::descent) {
            cur = cur.times_simple(i);
        } else {
            keep[j] = false;
        }
    }
    if (!cur.is_identity()) throw ConsistencyError("positive subword construction did not reach the identity");
    Subword sub = classify_subword(word_v, keep);
    if (!sub.distinguished || !sub.jminus.empty() || sub.target != u)
        throw ConsistencyError("positive subword construction produced an invalid subword");
    return sub;
}

}  // namespace tiltrich
