// Shared primitives: symbol tokens, alphabets, words, and the seeded PRNG
// used by every randomized observer in the library.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace flt {

// Symbols and states are whitespace-free tokens, not single characters, so
// multi-character names like add1/sub1 are first-class.
using Symbol = std::string;
using State = std::string;
using Word = std::vector<Symbol>;

// Reserved tokens. EMP stands for the empty string in rules and regular
// expressions, BLANK for an unwritten tape cell. L and R are kept out of
// alphabets so Turing machine actions stay unambiguous.
inline const Symbol EMP = "\xce\xb5"; // ε
inline const Symbol BLANK = "_";
inline const Symbol LEFT_TOKEN = "L";
inline const Symbol RIGHT_TOKEN = "R";

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col);
    int line;
    int col;
};

// A token is usable as a state or alphabet symbol when it is non-empty,
// contains no whitespace or s-expression delimiters, and is not reserved.
bool valid_token(const std::string& token);
void require_token(const std::string& token, const std::string& role);

// Finite ordered set of symbols. Construction order is preserved; reserved
// tokens and duplicates are rejected.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);

    const std::vector<Symbol>& symbols() const { return symbols_; }
    bool contains(const Symbol& s) const { return index_.count(s) != 0; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

private:
    std::vector<Symbol> symbols_;
    std::unordered_set<std::string> index_;
};

// Order-insensitive comparison; testers require equal symbol sets.
bool same_symbol_set(const Alphabet& a, const Alphabet& b);
Alphabet alphabet_union(const Alphabet& a, const Alphabet& b);

// splitmix64. Fixed, platform-independent algorithm so a seed pins the whole
// draw sequence; every randomized report in the library is reproducible from
// its seed.
class RngState {
public:
    static constexpr std::uint64_t kDefaultSeed = 42;

    explicit RngState(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

// Returns base when free, otherwise base with the smallest decimal suffix
// >= 0 that avoids every taken token.
Symbol gen_symbol(const Symbol& base, const std::unordered_set<std::string>& taken);
Symbol gen_symbol(const Symbol& base, const std::vector<Symbol>& taken);

// Length uniform on [0, max_len], symbols uniform over sigma.
Word random_word(const Alphabet& sigma, RngState& rng, std::size_t max_len);

// "(a b b a)"; the empty word prints as "()".
std::string word_text(const Word& w);
// Splits on whitespace; the empty string yields the empty word.
Word split_word(const std::string& text);

} // namespace flt
