#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tiltrich {

// Invalid input: bad permutation text, size mismatch, gate exceeded.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagreed.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sorted subset of [n], used for w[k] = {w_1, ..., w_k}.
struct SubsetK {
    int n = 0;
    std::vector<int> elems;

    SubsetK() = default;
    SubsetK(int n, std::vector<int> elems);

    int size() const { return static_cast<int>(elems.size()); }
    bool contains(int x) const;
    std::string str() const;
    static SubsetK parse(int n, std::string_view text);

    auto operator<=>(const SubsetK&) const = default;
};

// Permutation of [n] in one-line notation, 1-indexed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> oneline);

    static Permutation identity(int n);
    static Permutation longest(int n);
    static Permutation long_cycle(int n);
    static Permutation simple(int n, int i);
    static Permutation transposition(int n, int i, int j);
    static Permutation parse(std::string_view text);
    static Permutation unrank(int n, std::size_t r);
    static std::vector<Permutation> all(int n);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int k) const { return w_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<int>& oneline() const { return w_; }

    std::string str() const;
    int length() const;
    std::vector<int> descents() const;
    bool is_identity() const;
    int sign() const { return length() % 2 == 0 ? 1 : -1; }

    Permutation inverse() const;
    // (w x)(k) = w(x(k))
    Permutation compose(const Permutation& x) const;
    // w t_ij: swap positions i and j
    Permutation swap_positions(int i, int j) const;
    Permutation times_simple(int i) const { return swap_positions(i, i + 1); }
    // w[k]
    SubsetK prefix(int k) const;
    // Lexicographic index in S_n.
    std::size_t rank() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> w_;
};

std::size_t factorial(int n);

bool cyclic_interval_contains(int n, int a, int b, int x, bool left_closed, bool right_closed);
// [a,b)_c and friends as sorted vectors.
std::vector<int> cyclic_interval(int n, int a, int b, bool left_closed, bool right_closed);

// Position of x in the order r <_r r+1 <_r ... <_r n <_r 1 <_r ... <_r r-1.
int shifted_key(int n, int r, int x);
bool shifted_less(int n, int r, int x, int y);
std::vector<int> shifted_sorted(int r, const SubsetK& a);
bool shifted_gale_leq(int r, const SubsetK& a, const SubsetK& b);
bool gale_leq(const SubsetK& a, const SubsetK& b);

bool bruhat_leq(const Permutation& u, const Permutation& v);
std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v);

void require_same_size(const Permutation& u, const Permutation& v);

// Reduced word for w: indices i with w = s_{i_1} ... s_{i_l}.
std::vector<int> reduced_word(const Permutation& w);
Permutation word_product(int n, const std::vector<int>& word);

}  // namespace tiltrich

template <>
struct std::hash<tiltrich::Permutation> {
    std::size_t operator()(const tiltrich::Permutation& w) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int x : w.oneline()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        return h;
    }
};
