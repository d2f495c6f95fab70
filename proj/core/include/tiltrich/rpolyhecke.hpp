#pragma once

#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "tiltrich/permcore.hpp"

namespace tiltrich {

using BigInt = boost::multiprecision::mpz_int;

// Integer Laurent polynomial in q.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { add_term(0, BigInt(c)); }
    static LaurentPoly monomial(int exp, const BigInt& c = 1);
    static LaurentPoly q() { return monomial(1); }
    static LaurentPoly q_minus_one() { return monomial(1) - LaurentPoly(1); }

    const std::map<int, BigInt>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_polynomial() const { return c_.empty() || c_.begin()->first >= 0; }
    int degree() const;
    int min_degree() const;
    BigInt coeff(int exp) const;
    BigInt leading_coeff() const { return coeff(degree()); }
    // Value at an integer point; requires is_polynomial().
    BigInt eval(const BigInt& x) const;
    LaurentPoly pow(int k) const;
    LaurentPoly shifted(int k) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

    // "q^2 - 2q + 1", highest power first.
    std::string str() const;
    // Expansion in powers of (q-1): "(q-1)^2 + 2(q-1)"; requires is_polynomial().
    std::string str_q_minus_one() const;
    static LaurentPoly parse(std::string_view text);

private:
    void add_term(int exp, const BigInt& c);
    std::map<int, BigInt> c_;
};

// R-polynomials live in Z[q]; the alias marks where nonnegative exponents are guaranteed.
using QPoly = LaurentPoly;

// Sparse element of the Hecke algebra of S_n over Z[q, q^-1].
class HeckeElt {
public:
    HeckeElt() = default;
    explicit HeckeElt(int n) : n_(n) {}
    static HeckeElt basis(const Permutation& w);
    static HeckeElt one(int n) { return basis(Permutation::identity(n)); }
    static HeckeElt generator(int n, int i) { return basis(Permutation::simple(n, i)); }

    int n() const { return n_; }
    const std::map<Permutation, LaurentPoly>& terms() const { return t_; }
    LaurentPoly coeff(const Permutation& w) const;

    HeckeElt times_generator(int i) const;
    HeckeElt generator_times(int i) const;
    HeckeElt operator+(const HeckeElt& o) const;
    HeckeElt operator*(const LaurentPoly& c) const;
    bool operator==(const HeckeElt& o) const { return n_ == o.n_ && t_ == o.t_; }

private:
    void add(const Permutation& w, const LaurentPoly& c);
    int n_ = 0;
    std::map<Permutation, LaurentPoly> t_;
};

HeckeElt hecke_mul(const HeckeElt& x, const HeckeElt& y);
HeckeElt hecke_gen_inverse(int n, int i);
LaurentPoly trace(const HeckeElt& x);
// Product of T_i over the listed generators.
HeckeElt hecke_word(int n, const std::vector<int>& gens);
HeckeElt hecke_word_inverse(int n, const std::vector<int>& gens);

QPoly classical_r(const Permutation& u, const Permutation& v);
// (-1)^{l(v)-l(u)} q^{l(v)-l(u)} ε(T_v^{-1} T_u)
QPoly classical_r_hecke(const Permutation& u, const Permutation& v);

QPoly rtilt_deodhar(const Permutation& u, const Permutation& v);
QPoly rtilt_recursive(const Permutation& u, const Permutation& v);
// (-1)^{l(u,v)} q^{l(u,v)} ε(T_v^{-1} T_u) with a-tilted reduced words
QPoly rtilt_hecke(const Permutation& u, const Permutation& v);

void clear_rpoly_caches();

}  // namespace tiltrich
