#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "tiltrich/varietylab.hpp"

using namespace tiltrich;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

Rational laplace(const std::vector<std::vector<Rational>>& m) {
    if (m.size() == 1) return m[0][0];
    Rational acc = 0;
    for (std::size_t c = 0; c < m.size(); ++c) {
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < m.size(); ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < m.size(); ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const Rational term = m[0][c] * laplace(minor);
        acc += c % 2 == 0 ? term : Rational(-term);
    }
    return acc;
}

ExactMatrix<Rational> random_matrix(int n, std::mt19937_64& rng) {
    ExactMatrix<Rational> m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m(i, j) = random_rational(rng, false);
    return m;
}

ExactMatrix<ModP> to_modp(const std::vector<std::vector<long long>>& m, long long p) {
    ExactMatrix<ModP> out(static_cast<int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = ModP(m[i][j], p);
    return out;
}

// One representative per F_p-flag of Fl_n.
std::vector<ExactMatrix<ModP>> all_flags(int n, long long p) {
    std::vector<ExactMatrix<ModP>> out;
    for (const auto& w : Permutation::all(n)) {
        const std::size_t cells = tilted_rothe(SeqA::ones(n), w).size();
        std::vector<long long> digits(cells, 0);
        while (true) {
            std::vector<ModP> params;
            for (long long d : digits) params.emplace_back(d, p);
            out.push_back(canonical_cell_matrix(SeqA::ones(n), w, CellKind::cell, params));
            std::size_t t = 0;
            while (t < cells && ++digits[t] == p) digits[t++] = 0;
            if (t == cells) break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    const ModP a(3, 5);
    CHECK((a / ModP(2, 5)).value() == 4);
    CHECK((a * 2).value() == 1);
    CHECK((ModP(1) - a).value() == 3);
    CHECK((-a).is_zero() == false);
    CHECK_THROWS_AS(a + ModP(1, 7), DomainError);
    CHECK_THROWS_AS(a / ModP(0, 5), DomainError);
    CHECK((ModP(6) / ModP(3)).value() == 2);
    CHECK_THROWS_AS(ModP(5) / ModP(3), DomainError);
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("determinants agree with cofactor expansion") {
    std::mt19937_64 rng(1);
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t < 10; ++t) {
            const auto m = random_matrix(n, rng);
            std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) rows[static_cast<std::size_t>(i - 1)].push_back(m(i, j));
            CHECK(determinant(m) == laplace(rows));
        }
    ExactMatrix<Rational> singular(3);
    singular(1, 1) = 1;
    singular(2, 1) = 2;
    CHECK(determinant(singular) == 0);
    CHECK(matrix_rank(std::vector<std::vector<Rational>>{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("Plücker coordinates") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        const auto m = random_invertible_matrix(4, rng);
        CHECK(plucker(m, {2, 1}) == -plucker(m, {1, 2}));
        CHECK(plucker(m, {3, 1, 4}) == plucker(m, {1, 3, 4}) * -1);
        // Three-term relation in Gr(2,4).
        CHECK(plucker(m, {1, 3}) * plucker(m, {2, 4}) ==
              plucker(m, {1, 2}) * plucker(m, {3, 4}) + plucker(m, {1, 4}) * plucker(m, {2, 3}));
        // Incidence relation between F_1 and F_2.
        CHECK(plucker(m, {1}) * plucker(m, {2, 3}) - plucker(m, {2}) * plucker(m, {1, 3}) + plucker(m, {3}) * plucker(m, {1, 2}) ==
              0);
        CHECK(plucker(m, {1, 2, 3, 4}) == determinant(m));
    }
    CHECK_THROWS_AS(plucker(ExactMatrix<Rational>::identity(3), {4}), DomainError);
}

TEST_CASE("permutation matrices lie in the closed variety exactly on the interval") {
    for (const auto& u : Permutation::all(3))
        for (const auto& v : Permutation::all(3)) {
            const auto iv = tilted_interval(u, v);
            for (const auto& x : Permutation::all(3)) {
                const auto m = ExactMatrix<Rational>::permutation(x);
                CHECK(in_tilted_richardson_checked(m, u, v, false) == iv.contains(x));
                CHECK(in_tilted_richardson_checked(m, u, v, true) == (u == v && x == u));
            }
        }
}

TEST_CASE("rank and Plücker routes agree on random flags") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 40; ++t) {
        const auto m = random_invertible_matrix(3, rng);
        for (const auto& u : Permutation::all(3))
            for (const auto& v : Permutation::all(3)) CHECK_NOTHROW(in_tilted_richardson_checked(m, u, v, false));
    }
    CHECK_THROWS_AS(in_tilted_richardson(ExactMatrix<Rational>(3), P("123"), P("123"), true), DomainError);
}

TEST_CASE("tilted Rothe diagrams") {
    const SeqA a({4, 4, 2, 2});
    CHECK(tilted_rothe(a, P("4321")) == RotheDiagram{{1, 2}, {2, 2}});
    CHECK(tilted_rothe_op(a, P("4321")) == RotheDiagram{{1, 1}, {2, 1}, {3, 1}, {1, 3}});
    for (const auto& b : SeqA::all(4))
        for (const auto& w : Permutation::all(4)) {
            const int d = static_cast<int>(tilted_rothe(b, w).size());
            CHECK(d == a_length(b, w));
            CHECK(d + static_cast<int>(tilted_rothe_op(b, w).size()) == 6);
        }
    for (const auto& w : Permutation::all(4)) CHECK(static_cast<int>(tilted_rothe(SeqA::ones(4), w).size()) == w.length());
}

TEST_CASE("canonical matrices lie in their tilted cells") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> pick(1, 4);
    for (int t = 0; t < 15; ++t) {
        const SeqA a(std::vector<int>{pick(rng), pick(rng), pick(rng), pick(rng)});
        for (const auto& w : Permutation::all(4))
            for (CellKind kind : {CellKind::cell, CellKind::opposite}) {
                const auto d = kind == CellKind::cell ? tilted_rothe(a, w) : tilted_rothe_op(a, w);
                std::vector<Rational> params;
                for (std::size_t k = 0; k < d.size(); ++k) params.push_back(random_rational(rng, false));
                const auto m = canonical_cell_matrix(a, w, kind, params);
                CHECK(in_tilted_cell(m, a, w, kind));
                for (const auto& x : Permutation::all(4))
                    if (x != w) CHECK_FALSE(in_tilted_cell(m, a, x, kind));
            }
    }
    CHECK_THROWS_AS(canonical_cell_matrix(SeqA::ones(3), P("321"), CellKind::cell, std::vector<Rational>{}), DomainError);
}

TEST_CASE("open variety is the intersection of two tilted cells over F_2") {
    const auto flags = all_flags(3, 2);
    CHECK(flags.size() == 21);
    for (const auto& u : Permutation::all(3))
        for (const auto& v : Permutation::all(3)) {
            const SeqA a = witness_a(u, v);
            for (const auto& m : flags)
                CHECK(in_tilted_richardson(m, u, v, true) ==
                      (in_tilted_cell(m, a, v, CellKind::cell) && in_tilted_cell(m, a, u, CellKind::opposite)));
        }
}

TEST_CASE("closed variety is stratified by subintervals") {
    for (long long p : {2LL, 3LL}) {
        const auto flags = all_flags(3, p);
        for (const auto& u : Permutation::all(3))
            for (const auto& v : Permutation::all(3)) {
                const auto iv = tilted_interval(u, v);
                for (const auto& m : flags) {
                    int strata = 0;
                    for (const auto& x : iv.members)
                        for (const auto& y : iv.members)
                            if (iv.precedes(x, y) && in_tilted_richardson(m, x, y, true)) ++strata;
                    CHECK(strata == (in_tilted_richardson(m, u, v, false) ? 1 : 0));
                }
            }
    }
}

TEST_CASE("point counts agree with a brute-force GL_n(F_p) oracle") {
    for (long long p : {2LL, 3LL}) {
        std::map<std::pair<Permutation, Permutation>, long long> tally;
        const auto all = Permutation::all(3);
        oracle::for_each_gl(3, p, [&](const std::vector<std::vector<long long>>& m) {
            const auto rr = oracle::region_ranks(m, p);
            for (const auto& u : all)
                for (const auto& v : all)
                    if (oracle::open_member(rr, witness_a(u, v).a, u.oneline(), v.oneline())) ++tally[{u, v}];
        });
        const long long borel = oracle::borel_order(3, p);
        for (const auto& u : all)
            for (const auto& v : all) {
                CHECK(tally[{u, v}] % borel == 0);
                CHECK(count_points_fq(u, v, p) == tally[{u, v}] / borel);
            }
        CHECK(total_flags_fq(3, p) == static_cast<long long>(all_flags(3, p).size()));
    }
    CHECK(total_flags_fq(3, 2) == 21);
}

TEST_CASE("point counts determine a polynomial of degree l(u,v)") {
    for (const auto& u : Permutation::all(3))
        for (const auto& v : Permutation::all(3)) {
            const QPoly r = rtilt_recursive(u, v);
            CHECK(r.degree() == ell(u, v));
            for (long long p : {2LL, 3LL, 5LL, 7LL}) CHECK(count_points_fq(u, v, p) == r.eval(p));
        }
    CHECK(count_points_fq(P("1234"), P("1234"), 2) == 1);
    CHECK_THROWS_AS(count_points_fq(P("123"), P("123"), 4), DomainError);
    CHECK_THROWS_AS(count_points_fq(P("12345"), P("12345"), 2), DomainError);
}

TEST_CASE("Deodhar cell sizes add up to the point count") {
    for (const auto& u : Permutation::all(3))
        for (const auto& v : Permutation::all(3)) {
            const SeqA a = witness_a(u, v);
            const auto subs = distinguished_subwords(regular_tilted_reduced_word(a, v), u);
            for (long long p : {2LL, 3LL}) {
                BigInt total = 0;
                for (const auto& s : subs)
                    total += boost::multiprecision::pow(BigInt(p - 1), static_cast<unsigned>(s.jcirc.size())) *
                             boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(s.jminus.size()));
                CHECK(total == count_points_fq(u, v, p));
            }
        }
}

TEST_CASE("Deodhar points lie in the open variety") {
    for (const auto& u : Permutation::all(3))
        for (const auto& v : Permutation::all(3))
            for (const auto& s : sample_deodhar(u, v, 40, 99)) CHECK(in_tilted_richardson_checked(s.matrix, u, v, true));
}

TEST_CASE("positive parametrization of the 4231, 3142 example") {
    const SeqA a({4, 4, 2, 2});
    const TiltedWord word = regular_tilted_reduced_word(a, P("3142"));
    const Subword pos = positive_distinguished_subword(word, P("4231"));
    const SignTrace trace = tnn_signs(word, pos);
    CHECK(trace.param_signs == std::vector<int>{1, 1, -1, -1});
    const std::vector<int> pppp{1, 1, 1, 1};
    const std::vector<int> pppm{1, 1, 1, -1};
    const std::vector<int> pmpm{1, -1, 1, -1};
    CHECK(trace.vectors == std::vector<std::vector<int>>{pppp, pppp, pppp, pppp, pppm, pppm, pppm, pppm, pppm, pppm, pmpm, pmpm});

    const std::vector<Rational> p{2, 3, -5, -7};
    const auto m = deodhar_point(word, pos, p, std::vector<Rational>{});
    const std::vector<std::vector<int>> expected{{5, 0, 0, -1}, {7, -1, 0, 0}, {14, -2, -1, 0}, {1, 0, -3, 0}};
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(m(i, j) == expected[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
    CHECK(is_tnn(m, a));
    CHECK(in_tilted_richardson_checked(m, P("4231"), P("3142"), true));
    for (std::size_t k = 0; k < p.size(); ++k) {
        auto flipped = p;
        flipped[k] = -flipped[k];
        CHECK_FALSE(is_tnn(deodhar_point(word, pos, flipped, std::vector<Rational>{}), a));
    }
}

TEST_CASE("sign-corrected samples are totally nonnegative") {
    std::mt19937_64 rng(8);
    for (const auto& u : Permutation::all(3))
        for (const auto& v : Permutation::all(3))
            for (int t = 0; t < 10; ++t) {
                const auto s = sample_tnn(u, v, rng);
                CHECK(is_tnn(s.matrix, witness_a(u, v)));
                CHECK(in_tilted_richardson(s.matrix, u, v, true));
            }
}

TEST_CASE("Deodhar parameters are validated") {
    const TiltedWord word = regular_tilted_reduced_word(SeqA({4, 4, 2, 2}), P("3142"));
    const Subword pos = positive_distinguished_subword(word, P("4231"));
    CHECK_THROWS_AS(deodhar_point(word, pos, std::vector<Rational>{1, 2}, std::vector<Rational>{}), DomainError);
    CHECK_THROWS_AS(deodhar_point(word, pos, std::vector<Rational>{1, 2, 0, 3}, std::vector<Rational>{}), DomainError);
}
