#include "tiltrich/permcore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tiltrich {

namespace {

void check_value(int n, int x) {
    if (x < 1 || x > n) throw DomainError("value " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
}

std::vector<int> split_ints(std::string_view text) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            out.push_back(std::stoi(cur));
        } catch (const std::exception&) {
            throw DomainError("bad integer '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') {
            flush();
        } else if (c >= '0' && c <= '9') {
            cur.push_back(c);
        } else {
            throw DomainError(std::string("unexpected character '") + c + "'");
        }
    }
    flush();
    return out;
}

}  // namespace

SubsetK::SubsetK(int n_, std::vector<int> e) : n(n_), elems(std::move(e)) {
    std::sort(elems.begin(), elems.end());
    for (int x : elems) check_value(n, x);
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) throw DomainError("repeated subset element");
}

bool SubsetK::contains(int x) const { return std::binary_search(elems.begin(), elems.end(), x); }

std::string SubsetK::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(elems[i]);
    }
    return s + "}";
}

SubsetK SubsetK::parse(int n, std::string_view text) {
    std::string t(text);
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '{' || c == '}'; }), t.end());
    return SubsetK(n, split_ints(t));
}

Permutation::Permutation(std::vector<int> oneline) : w_(std::move(oneline)) {
    const int n = size();
    if (n == 0) throw DomainError("empty permutation");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int x : w_) {
        check_value(n, x);
        if (seen[static_cast<std::size_t>(x)]) throw DomainError("not a bijection");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = n - k;
    return Permutation(std::move(w));
}

Permutation Permutation::long_cycle(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k + 2 > n ? 1 : k + 2;
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n) throw DomainError("simple transposition index out of range");
    return identity(n).swap_positions(i, i + 1);
}

Permutation Permutation::transposition(int n, int i, int j) { return identity(n).swap_positions(i, j); }

Permutation Permutation::parse(std::string_view text) {
    std::string t(text);
    while (!t.empty() && t.back() == ' ') t.pop_back();
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    if (t.empty()) throw DomainError("empty permutation text");
    if (t.find(',') != std::string::npos) return Permutation(split_ints(t));
    std::vector<int> w;
    for (char c : t) {
        if (c < '1' || c > '9') throw DomainError("bad permutation text '" + t + "'");
        w.push_back(c - '0');
    }
    return Permutation(std::move(w));
}

Permutation Permutation::unrank(int n, std::size_t r) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    w.reserve(pool.size());
    for (int k = n; k >= 1; --k) {
        const std::size_t f = factorial(k - 1);
        const std::size_t idx = r / f;
        r %= f;
        w.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(w));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::string Permutation::str() const {
    std::string s;
    const bool commas = size() > 9;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        if (commas && k) s += ",";
        s += std::to_string(w_[k]);
    }
    return s;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

std::vector<int> Permutation::descents() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
        if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
    return d;
}

bool Permutation::is_identity() const {
    for (int k = 1; k <= size(); ++k)
        if ((*this)(k) != k) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(w_.size());
    for (int k = 1; k <= size(); ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& x) const {
    require_same_size(*this, x);
    std::vector<int> out(w_.size());
    for (int k = 1; k <= size(); ++k) out[static_cast<std::size_t>(k - 1)] = (*this)(x(k));
    return Permutation(std::move(out));
}

Permutation Permutation::swap_positions(int i, int j) const {
    check_value(size(), i);
    check_value(size(), j);
    Permutation out = *this;
    std::swap(out.w_[static_cast<std::size_t>(i - 1)], out.w_[static_cast<std::size_t>(j - 1)]);
    return out;
}

SubsetK Permutation::prefix(int k) const {
    if (k < 0 || k > size()) throw DomainError("prefix length out of range");
    return SubsetK(size(), std::vector<int>(w_.begin(), w_.begin() + k));
}

std::size_t Permutation::rank() const {
    const int n = size();
    std::size_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (w_[static_cast<std::size_t>(j)] < w_[static_cast<std::size_t>(i)]) ++smaller;
        r += static_cast<std::size_t>(smaller) * factorial(n - 1 - i);
    }
    return r;
}

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
    return f;
}

bool cyclic_interval_contains(int n, int a, int b, int x, bool left_closed, bool right_closed) {
    check_value(n, a);
    check_value(n, b);
    check_value(n, x);
    const int pos = ((x - a) % n + n) % n;
    int m = ((b - a) % n + n) % n;
    if (!left_closed) {
        if (m == 0) m = n;
        return pos > 0 && (right_closed ? pos <= m : pos < m);
    }
    return right_closed ? pos <= m : pos < m;
}

std::vector<int> cyclic_interval(int n, int a, int b, bool left_closed, bool right_closed) {
    std::vector<int> out;
    for (int x = 1; x <= n; ++x)
        if (cyclic_interval_contains(n, a, b, x, left_closed, right_closed)) out.push_back(x);
    return out;
}

int shifted_key(int n, int r, int x) { return ((x - r) % n + n) % n; }

bool shifted_less(int n, int r, int x, int y) {
    check_value(n, r);
    check_value(n, x);
    check_value(n, y);
    return shifted_key(n, r, x) < shifted_key(n, r, y);
}

std::vector<int> shifted_sorted(int r, const SubsetK& a) {
    std::vector<int> out = a.elems;
    std::sort(out.begin(), out.end(),
              [&](int x, int y) { return shifted_key(a.n, r, x) < shifted_key(a.n, r, y); });
    return out;
}

bool shifted_gale_leq(int r, const SubsetK& a, const SubsetK& b) {
    if (a.n != b.n || a.size() != b.size()) throw DomainError("shifted Gale order needs equal sizes");
    const auto sa = shifted_sorted(r, a);
    const auto sb = shifted_sorted(r, b);
    for (std::size_t i = 0; i < sa.size(); ++i)
        if (shifted_key(a.n, r, sa[i]) > shifted_key(a.n, r, sb[i])) return false;
    return true;
}

bool gale_leq(const SubsetK& a, const SubsetK& b) { return shifted_gale_leq(1, a, b); }

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    require_same_size(u, v);
    for (int k = 1; k < u.size(); ++k)
        if (!gale_leq(u.prefix(k), v.prefix(k))) return false;
    return true;
}

std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v) {
    std::vector<Permutation> out;
    if (!bruhat_leq(u, v)) return out;
    for (const auto& w : Permutation::all(u.size()))
        if (bruhat_leq(u, w) && bruhat_leq(w, v)) out.push_back(w);
    return out;
}

void require_same_size(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw DomainError("permutations of different sizes");
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> x = w.oneline();
    std::vector<int> swaps;
    const int n = w.size();
    for (int value = n; value >= 1; --value) {
        int p = static_cast<int>(std::find(x.begin(), x.end(), value) - x.begin()) + 1;
        while (p < value) {
            std::swap(x[static_cast<std::size_t>(p - 1)], x[static_cast<std::size_t>(p)]);
            swaps.push_back(p);
            ++p;
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

Permutation word_product(int n, const std::vector<int>& word) {
    Permutation w = Permutation::identity(n);
    for (int i : word) w = w.times_simple(i);
    return w;
}

}  // namespace tiltrich
