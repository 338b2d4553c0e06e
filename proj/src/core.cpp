#include "flt/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace flt {

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
      line(line_),
      col(col_) {}

bool valid_token(const std::string& token) {
    if (token.empty()) return false;
    if (token == EMP || token == BLANK || token == LEFT_TOKEN || token == RIGHT_TOKEN)
        return false;
    for (unsigned char c : token) {
        if (std::isspace(c)) return false;
        if (c == '(' || c == ')' || c == '"' || c == ';') return false;
    }
    return token != "->";
}

void require_token(const std::string& token, const std::string& role) {
    if (!valid_token(token))
        throw Error("invalid " + role + " token '" + token + "'");
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw Error("alphabet must not be empty");
    for (const Symbol& s : symbols_) {
        require_token(s, "alphabet symbol");
        if (!index_.insert(s).second)
            throw Error("duplicate alphabet symbol '" + s + "'");
    }
}

bool same_symbol_set(const Alphabet& a, const Alphabet& b) {
    if (a.size() != b.size()) return false;
    return std::all_of(a.begin(), a.end(), [&](const Symbol& s) { return b.contains(s); });
}

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b) {
    std::vector<Symbol> merged = a.symbols();
    for (const Symbol& s : b)
        if (!a.contains(s)) merged.push_back(s);
    return Alphabet(std::move(merged));
}

std::uint64_t RngState::below(std::uint64_t n) {
    if (n == 0) throw Error("RngState::below requires a positive bound");
    return next() % n;
}

Symbol gen_symbol(const Symbol& base, const std::unordered_set<std::string>& taken) {
    if (base.empty()) throw Error("gen_symbol requires a non-empty base");
    if (taken.count(base) == 0) return base;
    for (std::uint64_t suffix = 0;; ++suffix) {
        Symbol candidate = base + std::to_string(suffix);
        if (taken.count(candidate) == 0) return candidate;
    }
}

Symbol gen_symbol(const Symbol& base, const std::vector<Symbol>& taken) {
    return gen_symbol(base, std::unordered_set<std::string>(taken.begin(), taken.end()));
}

Word random_word(const Alphabet& sigma, RngState& rng, std::size_t max_len) {
    if (sigma.empty()) throw Error("random_word requires a non-empty alphabet");
    std::size_t len = static_cast<std::size_t>(rng.below(max_len + 1));
    Word w;
    w.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        w.push_back(sigma.symbols()[rng.below(sigma.size())]);
    return w;
}

std::string word_text(const Word& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i];
    }
    out += ')';
    return out;
}

Word split_word(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) w.push_back(tok);
    return w;
}

} // namespace flt
