#include "verify.hpp"

#include <optional>
#include <random>

#include "matrix_io.hpp"
#include "tiltrich/config.hpp"
#include "tiltrich/qbgraph.hpp"
#include "tiltrich/quantumschub.hpp"
#include "tiltrich/rpolyhecke.hpp"
#include "tiltrich/tiltorder.hpp"
#include "tiltrich/tiltwords.hpp"
#include "tiltrich/varietylab.hpp"

namespace tiltrich::cli {

namespace {

using Json = nlohmann::ordered_json;
using Check = std::function<std::optional<Json>(std::size_t)>;

struct Suite {
    bool full = false;
    int n = 3;
    unsigned workers = 1;
    Json entries = Json::array();
    bool all_pass = true;

    // Runs check over [0, count); the first failing index in order is the reported counterexample.
    void property(const std::string& name, int max_n_fast, int max_n_full, std::size_t count, const Check& check) {
        Json e;
        e["name"] = name;
        if (n > (full ? max_n_full : max_n_fast)) {
            e["pass"] = true;
            e["skipped"] = true;
            e["checked"] = 0;
            entries.push_back(e);
            return;
        }
        std::vector<std::optional<Json>> results(count);
        parallel_for(count, workers, [&](std::size_t i) {
            try {
                results[i] = check(i);
            } catch (const std::exception& ex) {
                results[i] = Json{{"index", i}, {"error", ex.what()}};
            }
        });
        bool pass = true;
        for (const auto& r : results)
            if (r) {
                pass = false;
                e["counterexample"] = *r;
                break;
            }
        e["pass"] = pass;
        e["skipped"] = false;
        e["checked"] = count;
        all_pass = all_pass && pass;
        entries.push_back(e);
    }
};

std::vector<std::pair<Permutation, Permutation>> all_pairs(int n) {
    const auto perms = Permutation::all(n);
    std::vector<std::pair<Permutation, Permutation>> out;
    for (const auto& u : perms)
        for (const auto& v : perms) out.emplace_back(u, v);
    return out;
}

Json pair_json(const Permutation& u, const Permutation& v) { return Json{{"u", u.str()}, {"v", v.str()}}; }

}  // namespace

Json run_verify(const std::string& level, int n, std::uint64_t seed, unsigned workers) {
    if (level != "fast" && level != "full") throw DomainError("level must be fast or full");
    if (n < 2) throw DomainError("verify needs n >= 2");
    require_gate(n, gates().max_bfs_n, "verify");
    Suite s;
    s.full = level == "full";
    s.n = n;
    s.workers = workers;
    const auto perms = Permutation::all(n);
    const auto pairs = n <= 5 ? all_pairs(n) : std::vector<std::pair<Permutation, Permutation>>{};
    const int samples = s.full ? 500 : 10;
    const int matrices = s.full ? 1000 : 50;

    s.property("qbg.edge-criteria", 7, 8, perms.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& w = perms[idx];
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (edge_weight(w, i, j) != edge_weight_by_length(w, i, j))
                    return Json{{"w", w.str()}, {"i", i}, {"j", j}};
        return std::nullopt;
    });

    s.property("qbg.rotation-automorphism", 7, 8, perms.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& w = perms[idx];
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const bool e1 = edge_weight(w, i, j).has_value();
                const bool e2 = edge_weight(rotate(w), i, j).has_value();
                if (e1 != e2) return Json{{"w", w.str()}, {"i", i}, {"j", j}};
            }
        return std::nullopt;
    });

    s.property("qbg.min-degree", 4, 5, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        if (min_degree(u, v) != min_degree_by_path(u, v)) return pair_json(u, v);
        return std::nullopt;
    });

    s.property("order.witness", 5, 5, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        const SeqA a = witness_a(u, v);
        if (!a_lesssim(a, u, v) || !a_lesssim_alt(a, u, v)) return pair_json(u, v);
        return std::nullopt;
    });

    s.property("interval.criterion", 4, 4, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        const TiltedInterval iv = tilted_interval(u, v);
        for (const auto& w : perms)
            if (in_tilted_interval(u, v, w) != iv.contains(w)) {
                Json j = pair_json(u, v);
                j["w"] = w.str();
                return j;
            }
        return std::nullopt;
    });

    s.property("interval.thin", 4, 5, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        if (ell(u, v) != 2) return std::nullopt;
        const TiltedInterval iv = tilted_interval(u, v);
        if (iv.size() != 4 || iv.hasse_edges().size() != 4) return pair_json(u, v);
        return std::nullopt;
    });

    std::vector<SeqA> seqs;
    {
        std::mt19937_64 rng(seed);
        if (n <= 3) {
            seqs = SeqA::all(n);
        } else {
            std::uniform_int_distribution<int> d(1, n);
            for (int t = 0; t < 20; ++t) {
                std::vector<int> a;
                for (int k = 0; k < n; ++k) a.push_back(d(rng));
                seqs.emplace_back(a);
            }
        }
    }
    s.property("words.reduced", 4, 5, seqs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const SeqA& a = seqs[idx];
        for (const auto& w : perms) {
            const TiltedWord word = tilted_reduced_word(a, w);
            const TiltedWord reg = regular_tilted_reduced_word(a, w);
            if (word.target() != w || reg.target() != w || !is_valid(word) || !is_reduced(word) ||
                !is_regular(reg) || reg.length() != word.length() || word.length() != word_length(a, w))
                return Json{{"a", a.str()}, {"w", w.str()}};
        }
        return std::nullopt;
    });

    s.property("rpoly.three-way", 3, 4, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        const QPoly r1 = rtilt_deodhar(u, v);
        const QPoly r2 = rtilt_recursive(u, v);
        const QPoly r3 = rtilt_hecke(u, v);
        if (!(r1 == r2) || !(r2 == r3) || (bruhat_leq(u, v) && !(r1 == classical_r(u, v)))) {
            Json j = pair_json(u, v);
            j["deodhar"] = r1.str();
            j["recursive"] = r2.str();
            j["hecke"] = r3.str();
            return j;
        }
        return std::nullopt;
    });

    s.property("rpoly.shape", 3, 4, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        const QPoly r = rtilt_deodhar(u, v);
        const bool ok = r.degree() == ell(u, v) && r.leading_coeff() == 1 && (u == v || r.eval(1) == 0);
        if (!ok) return pair_json(u, v);
        return std::nullopt;
    });

    const std::vector<long long> primes = s.full ? std::vector<long long>{2, 3} : std::vector<long long>{2};
    s.property("variety.point-count", 3, 3, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        const QPoly r = rtilt_deodhar(u, v);
        for (long long p : primes)
            if (count_points_fq(u, v, p) != r.eval(p)) {
                Json j = pair_json(u, v);
                j["p"] = p;
                return j;
            }
        return std::nullopt;
    });

    s.property("variety.route-agreement", 3, 3, static_cast<std::size_t>(matrices), [&](std::size_t idx) -> std::optional<Json> {
        std::mt19937_64 rng(seed + idx);
        const auto m = random_invertible_matrix(n, rng);
        for (const auto& [u, v] : pairs)
            for (bool open : {false, true})
                if (in_tilted_richardson(m, u, v, open) != in_tilted_richardson_plucker(m, u, v, open)) {
                    Json j = pair_json(u, v);
                    j["open"] = open;
                    j["matrix"] = matrix_to_json(m);
                    return j;
                }
        return std::nullopt;
    });

    s.property("variety.deodhar-membership", 3, 3, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        for (const auto& smp : sample_deodhar(u, v, samples, seed + idx))
            if (!in_tilted_richardson(smp.matrix, u, v, true) || !in_tilted_richardson_plucker(smp.matrix, u, v, true)) {
                Json j = pair_json(u, v);
                j["matrix"] = matrix_to_json(smp.matrix);
                return j;
            }
        return std::nullopt;
    });

    s.property("variety.tnn", 3, 4, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        std::mt19937_64 rng(seed + idx);
        const SeqA a = witness_a(u, v);
        for (int t = 0; t < (s.full ? 20 : 3); ++t) {
            const auto smp = sample_tnn(u, v, rng);
            if (!is_tnn(smp.matrix, a)) {
                Json j = pair_json(u, v);
                j["matrix"] = matrix_to_json(smp.matrix);
                return j;
            }
        }
        return std::nullopt;
    });

    s.property("schubert.leading-term", 3, 4, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        const MultiPoly p = path_schubert(u, v);
        const DegreeVec d = min_degree(u, v);
        const auto [key, c] = p.revlex_leading();
        bool ok = c == 1 && MultiPoly::q_part(n, key) == d;
        for (const auto& e : p.q_degrees()) ok = ok && d.leq(e);
        if (!ok) return pair_json(u, v);
        return std::nullopt;
    });

    s.property("schubert.gw-grading", 3, 4, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        const SchubertExpansion gw = gw_min_degree(u, v);
        const int target = v.length() - u.length() + 2 * gw.d.total();
        for (const auto& [w, c] : gw.coeffs)
            if (c <= 0 || w.length() != target) return pair_json(u, v);
        if (gw.coeffs.empty()) return pair_json(u, v);
        return std::nullopt;
    });

    s.property("schubert.descent-cycling", 3, 4, pairs.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& [u, v] = pairs[idx];
        for (int i = 1; i < n; ++i) {
            if (!interval_s_invariant(u, v, i)) continue;
            const auto rep = check_descent_cycling(u, v, i);
            if (!rep.ok()) {
                Json j = pair_json(u, v);
                j["i"] = i;
                j["violation"] = rep.violations.front();
                return j;
            }
        }
        return std::nullopt;
    });

    s.property("io.round-trip", 5, 6, perms.size(), [&](std::size_t idx) -> std::optional<Json> {
        const auto& w = perms[idx];
        if (Permutation::parse(w.str()) != w) return Json{{"w", w.str()}};
        const SeqA a = witness_a(w, Permutation::identity(n));
        if (SeqA::parse(a.str()) != a) return Json{{"a", a.str()}};
        const TiltedWord word = regular_tilted_reduced_word(a, w);
        const TiltedWord back = TiltedWord::parse(a, word.str());
        if (back.factors != word.factors) return Json{{"word", word.str()}};
        if (n <= 4) {
            const QPoly r = rtilt_recursive(w, Permutation::identity(n));
            if (!(QPoly::parse(r.str()) == r)) return Json{{"poly", r.str()}};
        }
        std::mt19937_64 rng(seed + idx);
        ExactMatrix<Rational> m(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m(i, j) = random_rational(rng, false);
        if (!(matrix_from_json(matrix_to_json(m)) == m)) return Json{{"matrix", matrix_to_json(m)}};
        return std::nullopt;
    });

    Json report;
    report["level"] = level;
    report["n"] = n;
    report["seed"] = seed;
    report["pass"] = s.all_pass;
    report["properties"] = s.entries;
    return report;
}

}  // namespace tiltrich::cli
