#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tiltrich/permcore.hpp"

namespace tiltrich {

// Sequence a = (a_1, ..., a_n) in [n]^n, with a_{n+1} = 1.
struct SeqA {
    std::vector<int> a;

    SeqA() = default;
    explicit SeqA(std::vector<int> values);
    static SeqA ones(int n) { return SeqA(std::vector<int>(static_cast<std::size_t>(n), 1)); }
    // "(2,2,2)", "2,2,2" or "222".
    static SeqA parse(std::string_view text);
    static std::vector<SeqA> all(int n);

    int n() const { return static_cast<int>(a.size()); }
    int at(int k) const { return k == n() + 1 ? 1 : a[static_cast<std::size_t>(k - 1)]; }
    std::string str() const;

    auto operator<=>(const SeqA&) const = default;
};

bool a_leq(const SeqA& a, const Permutation& u, const Permutation& v);
bool a_sim(const SeqA& a, const Permutation& u, const Permutation& v);
bool a_lesssim(const SeqA& a, const Permutation& u, const Permutation& v);
// u[k] <=_{a_k} v[k] and u[k] <=_{a_{k+1}} v[k] for k in [n-1].
bool a_lesssim_alt(const SeqA& a, const Permutation& u, const Permutation& v);
// Both formulations, throwing ConsistencyError on disagreement.
bool a_lesssim_checked(const SeqA& a, const Permutation& u, const Permutation& v);

// Some a with u ≲_a v; smallest element of each min-set intersection.
SeqA witness_a(const Permutation& u, const Permutation& v);
// Some a with u <=_a v; smallest element of each min-set.
SeqA witness_a_leq(const Permutation& u, const Permutation& v);

// u ≲_a w ≲_a v for a = witness_a(u,v).
bool in_tilted_interval(const Permutation& u, const Permutation& v, const Permutation& w);

enum class OrderMode { leq, lesssim };
// Relation of w below w t_ij.
enum class CoverKind { incomparable, comparable, cover };
CoverKind covers(const SeqA& a, const Permutation& w, int i, int j, OrderMode mode);

int a_length(const SeqA& a, const Permutation& w);

enum class DesAsc { not_applicable, ascent, descent };
DesAsc a_des_asc(const SeqA& a, const Permutation& w, int i);
std::vector<int> a_descents(const SeqA& a, const Permutation& w);
std::vector<int> a_ascents(const SeqA& a, const Permutation& w);

// [u,v] s_i = [u,v] as sets.
bool interval_s_invariant(const Permutation& u, const Permutation& v, int i);
// Exists a with u ≲_a v and i in Des_a(v) ∩ Asc_a(u), searched over all of [n]^n.
bool strong_lifting_criterion(const Permutation& u, const Permutation& v, int i);

// A shortest path from u to v using only edges t_cd with c <= k < d.
bool k_tilted_leq(const Permutation& u, const Permutation& v, int k);

}  // namespace tiltrich
