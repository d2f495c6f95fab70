#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiltrich/permcore.hpp"

namespace tiltrich {

// Exponent vector of q_1 ... q_{n-1}.
struct DegreeVec {
    std::vector<int> d;

    DegreeVec() = default;
    explicit DegreeVec(std::vector<int> d_) : d(std::move(d_)) {}
    static DegreeVec zero(int n) { return DegreeVec(std::vector<int>(static_cast<std::size_t>(n - 1), 0)); }
    // Indicator of [i,j) in S_n.
    static DegreeVec interval(int n, int i, int j);

    bool is_zero() const;
    int total() const;
    bool leq(const DegreeVec& other) const;
    DegreeVec operator+(const DegreeVec& other) const;
    // "q1q2^2", or "1" for the zero vector.
    std::string monomial() const;

    auto operator<=>(const DegreeVec&) const = default;
};

struct QbgEdge {
    Permutation source;
    int i = 0;
    int j = 0;
    DegreeVec weight;

    Permutation target() const { return source.swap_positions(i, j); }
    bool quantum() const { return !weight.is_zero(); }
};

// Edge w -> w t_ij, by the cyclic-interval criterion.
std::optional<DegreeVec> edge_weight(const Permutation& w, int i, int j);
// Same edge, by the two length conditions.
std::optional<DegreeVec> edge_weight_by_length(const Permutation& w, int i, int j);

std::vector<QbgEdge> out_edges(const Permutation& w);
std::vector<QbgEdge> graph_edges(int n);

// Γ_n with vertices indexed by lexicographic rank.
struct QbgArc {
    std::uint32_t other = 0;
    std::uint8_t i = 0;
    std::uint8_t j = 0;
    bool quantum = false;
};

struct QbgGraph {
    int n = 0;
    std::vector<Permutation> vertices;
    std::vector<std::vector<QbgArc>> out;
    std::vector<std::vector<QbgArc>> in;
};

const QbgGraph& qbg(int n);

// BFS distances from u (forward) or to v (backward), memoized per endpoint.
std::shared_ptr<const std::vector<int>> distances_from(const Permutation& u);
std::shared_ptr<const std::vector<int>> distances_to(const Permutation& v);
void clear_distance_cache();

int ell(const Permutation& u, const Permutation& v);
std::vector<QbgEdge> shortest_path(const Permutation& u, const Permutation& v);
DegreeVec path_weight(const std::vector<QbgEdge>& path, int n);

std::vector<int> lattice_heights(const SubsetK& a, const SubsetK& b);
int lattice_depth(const SubsetK& a, const SubsetK& b);
std::vector<int> min_set(const SubsetK& a, const SubsetK& b);

// d_k(u,v) = depth(u[k], v[k]).
DegreeVec min_degree(const Permutation& u, const Permutation& v);
// Weight of one BFS shortest path.
DegreeVec min_degree_by_path(const Permutation& u, const Permutation& v);
// Both, throwing ConsistencyError on disagreement.
DegreeVec min_degree_checked(const Permutation& u, const Permutation& v);

struct TiltedInterval {
    Permutation u;
    Permutation v;
    int length = 0;
    std::vector<Permutation> members;
    std::map<Permutation, int> rank;

    bool contains(const Permutation& w) const { return rank.count(w) != 0; }
    int size() const { return static_cast<int>(members.size()); }
    // x ⪯ y
    bool precedes(const Permutation& x, const Permutation& y) const;
    // Pairs x ⪯ y with rank(y) = rank(x) + 1.
    std::vector<std::pair<Permutation, Permutation>> hasse_edges() const;
};

TiltedInterval tilted_interval(const Permutation& u, const Permutation& v);

// Root e_i - e_j with i < j.
struct Root {
    int i = 0;
    int j = 0;
    auto operator<=>(const Root&) const = default;
};
using ReflectionOrder = std::vector<Root>;

ReflectionOrder reflection_order_from_word(int n, const std::vector<int>& w0_word);
ReflectionOrder default_reflection_order(int n);
bool is_reflection_order(int n, const ReflectionOrder& order);

// The unique path whose labels increase in the given order.
std::vector<QbgEdge> increasing_path(const Permutation& u, const Permutation& v, const ReflectionOrder& order);
// All label-increasing paths from u to v.
std::vector<std::vector<QbgEdge>> increasing_paths(const Permutation& u, const Permutation& v,
                                                   const ReflectionOrder& order);

// τ w with τ = 23...n1.
Permutation rotate(const Permutation& w);

// A left translate [u,v] = w [u',v'] of a classical Bruhat interval.
struct ClassicalTranslate {
    Permutation w;
    Permutation lower;
    Permutation upper;
};
std::optional<ClassicalTranslate> find_classical_translate(const Permutation& u, const Permutation& v);

std::string graph_dot(int n);
std::string interval_dot(const TiltedInterval& iv);

}  // namespace tiltrich
