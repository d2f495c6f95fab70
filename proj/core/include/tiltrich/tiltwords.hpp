#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiltrich/permcore.hpp"
#include "tiltrich/tiltorder.hpp"

namespace tiltrich {

std::vector<int> jumps(const SeqA& a);
SeqA flatten(const SeqA& a);
SeqA back_flatten(const SeqA& a);
std::optional<int> flattenable(const SeqA& a, const Permutation& w);

// s_{a,b} = (a+1)...(a+b) 1...a (a+b+1)...n
Permutation bigrassmannian(int n, int a, int b);

// Generators and bars; factor 0 is a bar, factor i > 0 is s_i.
struct TiltedWord {
    SeqA a;
    std::vector<int> factors;

    static constexpr int bar = 0;

    int length() const { return static_cast<int>(factors.size()); }
    int n() const { return a.n(); }
    Permutation target() const;
    // a^(j) for j = 1..length, at index j-1.
    std::vector<SeqA> levels() const;
    // v^(j) for j = 0..length.
    std::vector<Permutation> prefixes() const;
    std::vector<int> generators() const;
    // "s5 s4 | s1"
    std::string str() const;
    static TiltedWord parse(const SeqA& a, std::string_view text);
};

TiltedWord tilted_reduced_word(const SeqA& a, const Permutation& w);
TiltedWord regular_tilted_reduced_word(const SeqA& a, const Permutation& w);
int word_length(const SeqA& a, const Permutation& w);
bool is_valid(const TiltedWord& word);
bool is_regular(const TiltedWord& word);
bool is_reduced(const TiltedWord& word);

// Subword of a tilted word with Deodhar index sets over factor positions (1-indexed).
struct Subword {
    std::vector<bool> keep;
    Permutation target;
    std::vector<int> jplus;
    std::vector<int> jcirc;
    std::vector<int> jminus;
    bool distinguished = false;

    // "1 1 s1 ~s3 | s2"; ~ marks J^- factors.
    std::string str(const TiltedWord& parent) const;
};

// Evaluates a keep mask against word: target, index sets and the distinguished flag.
Subword classify_subword(const TiltedWord& word, const std::vector<bool>& keep);
// Subword validity: the kept factors form a valid tilted word.
bool subword_is_valid(const TiltedWord& word, const std::vector<bool>& keep);

std::vector<Subword> distinguished_subwords(const TiltedWord& word_v, const Permutation& u, bool prune = true);
Subword positive_distinguished_subword(const TiltedWord& word_v, const Permutation& u);

}  // namespace tiltrich
