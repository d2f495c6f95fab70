#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matrix_io.hpp"
#include "tiltrich/config.hpp"
#include "tiltrich/permcore.hpp"
#include "tiltrich/qbgraph.hpp"
#include "tiltrich/quantumschub.hpp"
#include "tiltrich/rpolyhecke.hpp"
#include "tiltrich/tiltorder.hpp"
#include "tiltrich/tiltwords.hpp"
#include "tiltrich/varietylab.hpp"
#include "verify.hpp"

using namespace tiltrich;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "text";
    unsigned workers = default_workers();
    std::uint64_t seed = 1;
    int n = 3;
    std::string u;
    std::string v;
    std::string a;
    std::string matrix;
    std::string method = "all";
    std::string level = "fast";
    bool open = false;
    bool regular = false;
    long long p = 2;
    int samples = 20;
    int index = 1;
};

Json degree_json(const DegreeVec& d) { return Json(d.d); }

std::pair<Permutation, Permutation> pair_of(const Options& o) {
    const Permutation u = Permutation::parse(o.u);
    const Permutation v = Permutation::parse(o.v);
    require_same_size(u, v);
    return {u, v};
}

SeqA seq_or(const Options& o, const SeqA& fallback) {
    if (o.a.empty()) return fallback;
    const SeqA a = SeqA::parse(o.a);
    if (a.n() != fallback.n()) throw DomainError("sequence length differs from n");
    return a;
}

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.format == "json") std::cout << j.dump() << "\n";
    else std::cout << text;
}

int cmd_graph(const Options& o) {
    require_gate(o.n, gates().max_bfs_n, "graph");
    if (o.format == "dot") {
        std::cout << graph_dot(o.n);
        return 0;
    }
    Json edges = Json::array();
    std::ostringstream text;
    for (const auto& e : graph_edges(o.n)) {
        edges.push_back({{"from", e.source.str()}, {"to", e.target().str()}, {"i", e.i}, {"j", e.j},
                         {"weight", e.weight.monomial()}});
        text << e.source.str() << " -> " << e.target().str() << "  t" << e.i << e.j << "  " << e.weight.monomial()
             << "\n";
    }
    emit(o, Json{{"n", o.n}, {"edges", edges}}, text.str());
    return 0;
}

int cmd_mindeg(const Options& o) {
    const auto [u, v] = pair_of(o);
    const DegreeVec d = min_degree_checked(u, v);
    std::cout << Json{{"ell", ell(u, v)}, {"d", degree_json(d)}}.dump() << "\n";
    return 0;
}

int cmd_interval(const Options& o) {
    const auto [u, v] = pair_of(o);
    const TiltedInterval iv = tilted_interval(u, v);
    if (o.format == "dot") {
        std::cout << interval_dot(iv);
        return 0;
    }
    Json members = Json::array();
    Json hasse = Json::array();
    for (const auto& w : iv.members) members.push_back({{"w", w.str()}, {"rank", iv.rank.at(w)}});
    for (const auto& [x, y] : iv.hasse_edges()) hasse.push_back({x.str(), y.str()});
    std::ostringstream text;
    for (int r = 0; r <= iv.length; ++r) {
        text << "rank " << r << ":";
        for (const auto& w : iv.members)
            if (iv.rank.at(w) == r) text << " " << w.str();
        text << "\n";
    }
    emit(o, Json{{"u", u.str()}, {"v", v.str()}, {"length", iv.length}, {"members", members}, {"hasse", hasse}},
         text.str());
    return 0;
}

int cmd_order(const Options& o) {
    const auto [u, v] = pair_of(o);
    const SeqA a = seq_or(o, witness_a(u, v));
    const bool leq = a_leq(a, u, v);
    const bool lesssim = a_lesssim_checked(a, u, v);
    Json j{{"u", u.str()}, {"v", v.str()}, {"a", a.str()}, {"leq", leq}, {"lesssim", lesssim},
           {"witness", witness_a(u, v).str()}};
    std::ostringstream text;
    text << "a = " << a.str() << "\n"
         << "u <=_a v: " << (leq ? "yes" : "no") << "\n"
         << "u ≲_a v: " << (lesssim ? "yes" : "no") << "\n";
    emit(o, j, text.str());
    return 0;
}

int cmd_word(const Options& o) {
    const Permutation w = Permutation::parse(o.u);
    const SeqA a = seq_or(o, SeqA::ones(w.size()));
    const TiltedWord word = o.regular ? regular_tilted_reduced_word(a, w) : tilted_reduced_word(a, w);
    Json j{{"a", a.str()}, {"w", w.str()}, {"word", word.str()}, {"length", word.length()},
           {"regular", is_regular(word)}};
    emit(o, j, word.str() + "\n");
    return 0;
}

int cmd_subwords(const Options& o) {
    const auto [u, v] = pair_of(o);
    const SeqA a = seq_or(o, witness_a(u, v));
    const TiltedWord word = regular_tilted_reduced_word(a, v);
    const auto subs = distinguished_subwords(word, u);
    Json list = Json::array();
    std::ostringstream text;
    text << "word " << word.str() << "\n";
    for (const auto& s : subs) {
        list.push_back({{"subword", s.str(word)}, {"jcirc", s.jcirc.size()}, {"jminus", s.jminus.size()}});
        text << s.str(word) << "   |J°|=" << s.jcirc.size() << " |J-|=" << s.jminus.size() << "\n";
    }
    emit(o, Json{{"a", a.str()}, {"word", word.str()}, {"count", subs.size()}, {"subwords", list}}, text.str());
    return 0;
}

int cmd_rpoly(const Options& o) {
    const auto [u, v] = pair_of(o);
    std::map<std::string, QPoly> results;
    auto want = [&](const std::string& m) { return o.method == m || o.method == "all"; };
    if (want("deodhar")) results["deodhar"] = rtilt_deodhar(u, v);
    if (want("recursive")) results["recursive"] = rtilt_recursive(u, v);
    if (want("hecke")) results["hecke"] = rtilt_hecke(u, v);
    if (o.method == "classical") results["classical"] = classical_r(u, v);
    if (results.empty()) throw DomainError("unknown method " + o.method);
    const QPoly& first = results.begin()->second;
    for (const auto& [m, r] : results)
        if (!(r == first)) throw ConsistencyError("R-polynomial routes disagree for " + u.str() + ", " + v.str());
    Json j{{"u", u.str()}, {"v", v.str()}};
    std::ostringstream text;
    for (const auto& m : {"deodhar", "recursive", "hecke", "classical"}) {
        auto it = results.find(m);
        if (it == results.end()) continue;
        j[m] = {{"q_minus_one", it->second.str_q_minus_one()}, {"expanded", it->second.str()}};
        text << m << ": " << it->second.str_q_minus_one() << " = " << it->second.str() << "\n";
    }
    emit(o, j, text.str());
    return 0;
}

int cmd_member(const Options& o) {
    const auto [u, v] = pair_of(o);
    const auto m = cli::read_matrix_file(o.matrix);
    const bool rank = in_tilted_richardson(m, u, v, o.open);
    const bool pl = in_tilted_richardson_plucker(m, u, v, o.open);
    if (rank != pl) throw ConsistencyError("rank and Plücker membership disagree");
    Json j{{"u", u.str()}, {"v", v.str()}, {"open", o.open}, {"member", rank}, {"rank_route", rank},
           {"plucker_route", pl}};
    emit(o, j, std::string(rank ? "member" : "not a member") + "\n");
    return 0;
}

int cmd_count(const Options& o) {
    const auto [u, v] = pair_of(o);
    const BigInt c = count_points_fq(u, v, o.p, o.workers);
    const BigInt r = rtilt_deodhar(u, v).eval(o.p);
    if (c != r) throw ConsistencyError("point count " + c.str() + " differs from R(" + std::to_string(o.p) + ")");
    Json j{{"u", u.str()}, {"v", v.str()}, {"p", o.p}, {"count", c.str()}, {"rtilt_at_p", r.str()},
           {"total_flags", total_flags_fq(u.size(), o.p).str()}};
    emit(o, j, c.str() + "\n");
    return 0;
}

int cmd_sample_deodhar(const Options& o) {
    const auto [u, v] = pair_of(o);
    if (o.samples < 0) throw DomainError("sample count must be nonnegative");
    const SeqA a = witness_a(u, v);
    const TiltedWord word = regular_tilted_reduced_word(a, v);
    const auto samples = sample_deodhar(u, v, o.samples, o.seed);
    Json points = Json::array();
    int passed = 0;
    for (const auto& s : samples) {
        const bool ok = in_tilted_richardson_checked(s.matrix, u, v, true);
        passed += ok;
        Json p = Json::array();
        for (const auto& x : s.p) p.push_back(x.str());
        Json m = Json::array();
        for (const auto& x : s.m) m.push_back(x.str());
        points.push_back({{"subword", s.sub.str(word)}, {"p", p}, {"m", m}, {"matrix", cli::matrix_to_json(s.matrix)},
                          {"member", ok}});
    }
    if (passed != o.samples) throw ConsistencyError("a Deodhar point left the open variety");
    Json j{{"u", u.str()}, {"v", v.str()}, {"a", a.str()}, {"word", word.str()}, {"seed", o.seed},
           {"samples", o.samples}, {"passed", passed}, {"points", points}};
    std::ostringstream text;
    text << "seed " << o.seed << ": " << passed << "/" << o.samples << " points in the open variety\n";
    emit(o, j, text.str());
    return 0;
}

std::string signs_text(const std::vector<int>& s) {
    std::string out;
    for (int x : s) out += x > 0 ? '+' : '-';
    return out;
}

int cmd_tnn(const Options& o) {
    const auto [u, v] = pair_of(o);
    const SeqA a = seq_or(o, witness_a(u, v));
    if (!a_lesssim(a, u, v)) throw DomainError("u is not below v in the order for " + a.str());
    const TiltedWord word = regular_tilted_reduced_word(a, v);
    const Subword pos = positive_distinguished_subword(word, u);
    const SignTrace tr = tnn_signs(word, pos);
    Json trace = Json::array();
    for (const auto& s : tr.vectors) trace.push_back(signs_text(s));
    Json j{{"a", a.str()}, {"word", word.str()}, {"positive_subword", pos.str(word)},
           {"signs", signs_text(tr.param_signs)}, {"trace", trace}};
    std::ostringstream text;
    text << "word " << word.str() << "\npositive " << pos.str(word) << "\nsigns " << signs_text(tr.param_signs)
         << "\n";
    for (std::size_t t = 0; t < tr.vectors.size(); ++t) text << "(" << t << ") " << signs_text(tr.vectors[t]) << "\n";
    emit(o, j, text.str());
    return 0;
}

int cmd_gw(const Options& o) {
    const auto [u, v] = pair_of(o);
    const SchubertExpansion gw = gw_min_degree(u, v);
    const SchubertExpansion cls = cohomology_class_T(u, v);
    Json coeffs = Json::object();
    for (const auto& [w, c] : gw.coeffs) coeffs[w.str()] = c.convert_to<long long>();
    Json j{{"u", u.str()}, {"v", v.str()}, {"d", degree_json(gw.d)}, {"coefficients", coeffs},
           {"class", cls.str()}};
    std::ostringstream text;
    text << "d = " << gw.d.monomial() << "\n";
    for (const auto& [w, c] : gw.coeffs) text << "c[" << w.str() << "] = " << c << "\n";
    text << "[T] = " << cls.str() << "\n";
    emit(o, j, text.str());
    return 0;
}

int cmd_descent_cycle(const Options& o) {
    const auto [u, v] = pair_of(o);
    const auto rep = check_descent_cycling(u, v, o.index);
    Json j{{"u", u.str()}, {"v", v.str()}, {"i", o.index}, {"checked", rep.checked}, {"pass", rep.ok()},
           {"violations", rep.violations}};
    std::ostringstream text;
    text << (rep.ok() ? "PASS" : "FAIL") << " (" << rep.checked << " w checked)\n";
    for (const auto& s : rep.violations) text << "  " << s << "\n";
    emit(o, j, text.str());
    return rep.ok() ? 0 : 2;
}

int cmd_verify(const Options& o) {
    const Json rep = cli::run_verify(o.level, o.n, o.seed, o.workers);
    if (o.format == "json") {
        std::cout << rep.dump(2) << "\n";
    } else {
        for (const auto& p : rep["properties"]) {
            std::cout << (p["pass"].get<bool>() ? "PASS " : "FAIL ") << p["name"].get<std::string>();
            if (p["skipped"].get<bool>()) std::cout << " (skipped)";
            else std::cout << " (" << p["checked"].get<std::size_t>() << ")";
            if (p.contains("counterexample")) std::cout << " " << p["counterexample"].dump();
            std::cout << "\n";
        }
        std::cout << "seed " << o.seed << ": " << (rep["pass"].get<bool>() ? "all properties pass" : "failures")
                  << "\n";
    }
    return rep["pass"].get<bool>() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tilted Bruhat orders, tilted Richardson varieties and minimal-degree quantum Schubert calculus"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "Random seed");

    auto two = [&](CLI::App* c) {
        c->add_option("U", o.u, "Permutation u")->required();
        c->add_option("V", o.v, "Permutation v")->required();
    };

    auto* graph = app.add_subcommand("graph", "Quantum Bruhat graph");
    graph->add_option("--n", o.n, "Size")->required();
    auto* mindeg = app.add_subcommand("mindeg", "Shortest-path length and minimal degree");
    two(mindeg);
    auto* interval = app.add_subcommand("interval", "Tilted Bruhat interval");
    two(interval);
    auto* order = app.add_subcommand("order", "Compare u and v in the a-tilted orders");
    two(order);
    order->add_option("--a", o.a, "Sequence a");
    auto* word = app.add_subcommand("word", "Tilted reduced word");
    word->add_option("W", o.u, "Permutation")->required();
    word->add_option("--a", o.a, "Sequence a");
    word->add_flag("--regular", o.regular, "Regular construction");
    auto* subwords = app.add_subcommand("subwords", "Distinguished subwords");
    two(subwords);
    subwords->add_option("--a", o.a, "Sequence a");
    auto* rpoly = app.add_subcommand("rpoly", "Tilted R-polynomial");
    two(rpoly);
    rpoly->add_option("--method", o.method, "deodhar, recursive, hecke, classical or all")
        ->check(CLI::IsMember({"deodhar", "recursive", "hecke", "classical", "all"}));
    auto* member = app.add_subcommand("member", "Tilted Richardson membership of a matrix");
    member->add_option("M", o.matrix, "Matrix JSON file")->required();
    two(member);
    member->add_flag("--open", o.open, "Open variety");
    auto* count = app.add_subcommand("count", "Points over F_p");
    two(count);
    count->add_option("--p", o.p, "Prime");
    auto* sample = app.add_subcommand("sample-deodhar", "Random Deodhar points");
    two(sample);
    sample->add_option("--samples", o.samples, "Number of points");
    auto* tnn = app.add_subcommand("tnn", "Sign vectors of the positive subword");
    two(tnn);
    tnn->add_option("--a", o.a, "Sequence a");
    auto* gw = app.add_subcommand("gw", "Minimal-degree Gromov-Witten invariants");
    two(gw);
    auto* dc = app.add_subcommand("descent-cycle", "Descent-cycling identities");
    two(dc);
    dc->add_option("I", o.index, "Simple reflection index")->required();
    auto* verify = app.add_subcommand("verify", "Property catalogue");
    verify->add_option("--level", o.level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--n", o.n, "Size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const std::map<CLI::App*, int (*)(const Options&)> table{
            {graph, cmd_graph},   {mindeg, cmd_mindeg}, {interval, cmd_interval}, {order, cmd_order},
            {word, cmd_word},     {subwords, cmd_subwords}, {rpoly, cmd_rpoly}, {member, cmd_member},
            {count, cmd_count},   {sample, cmd_sample_deodhar}, {tnn, cmd_tnn}, {gw, cmd_gw},
            {dc, cmd_descent_cycle}, {verify, cmd_verify}};
        for (const auto& [sub, fn] : table)
            if (sub->parsed()) return fn(o);
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
