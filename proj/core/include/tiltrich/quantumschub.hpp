#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tiltrich/permcore.hpp"
#include "tiltrich/qbgraph.hpp"
#include "tiltrich/rpolyhecke.hpp"

namespace tiltrich {

// Polynomial in q_1..q_{n-1}, x_1..x_n; keys are the concatenated exponents [q..., x...].
class MultiPoly {
public:
    using Key = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(int n) : n_(n) {}
    static MultiPoly constant(int n, const BigInt& c);
    static MultiPoly monomial(int n, const DegreeVec& q, const std::vector<int>& x, const BigInt& c = 1);
    static MultiPoly x_monomial(int n, const std::vector<int>& x, const BigInt& c = 1);
    static MultiPoly variable(int n, int i);

    int n() const { return n_; }
    const std::map<Key, BigInt>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    BigInt coeff(const DegreeVec& q, const std::vector<int>& x) const;
    void add_term(const Key& key, const BigInt& c);

    static DegreeVec q_part(int n, const Key& key);
    static std::vector<int> x_part(int n, const Key& key);

    // Coefficient of q^d as a polynomial in x.
    MultiPoly q_coefficient(const DegreeVec& d) const;
    std::vector<DegreeVec> q_degrees() const;
    // Largest monomial in the order where, at the first differing exponent, the larger exponent is smaller.
    std::pair<Key, BigInt> revlex_leading() const;
    // Swap x_i and x_{i+1}.
    MultiPoly swap_x(int i) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && t_ == o.t_; }

    // "x1^2x2 + q1x1", "0" when empty.
    std::string str() const;

private:
    int n_ = 0;
    std::map<Key, BigInt> t_;
};

MultiPoly divided_difference(int i, const MultiPoly& p);
MultiPoly schubert_poly(const Permutation& w);

// σ_{s_k} ⋆ σ_w as {(w t_ij, degree) -> coefficient}.
using QuantumExpansion = std::map<std::pair<Permutation, DegreeVec>, BigInt>;
QuantumExpansion quantum_chevalley(int k, const Permutation& w);

MultiPoly path_schubert(const Permutation& u, const Permutation& v);

// Finite Schubert-basis expansion; d records the quantum degree it was taken at.
struct SchubertExpansion {
    std::map<Permutation, BigInt> coeffs;
    DegreeVec d;

    BigInt at(const Permutation& w) const;
    // "σ_{123} + 2σ_{213}"
    std::string str() const;
};

// P = Σ c_w 𝔖_w for a q-free P; ConsistencyError when P leaves the span or a coefficient is fractional.
SchubertExpansion schubert_expand(const MultiPoly& p);

// {w -> c_{u,w}^{v,d_{u,v}}}
SchubertExpansion gw_min_degree(const Permutation& u, const Permutation& v);
// [T_{u,v}] = Σ c_{u,w}^{v,d_{u,v}} σ_{w_0 w}, keyed by w_0 w.
SchubertExpansion cohomology_class_T(const Permutation& u, const Permutation& v);

struct DescentCyclingReport {
    Permutation u;
    Permutation v;
    int i = 0;
    int checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

DescentCyclingReport check_descent_cycling(const Permutation& u, const Permutation& v, int i);

void clear_schubert_caches();

}  // namespace tiltrich
