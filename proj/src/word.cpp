#include "shufflekit/word.hpp"

#include "shufflekit/error.hpp"

#include <algorithm>

namespace shufflekit {

namespace {

void check_alphabet(std::size_t k) {
    if (k == 0 || k > kMaxAlphabetSize) {
        throw ContractError("alphabet size must be in [1, 256], got " + std::to_string(k));
    }
}

} // namespace

char symbol_char(Symbol s) {
    if (s < 10) return static_cast<char>('0' + s);
    if (s < kTextAlphabetSize) return static_cast<char>('a' + (s - 10));
    throw ContractError("symbol " + std::to_string(s) + " has no text form");
}

std::optional<Symbol> char_symbol(char c) {
    if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<Symbol>(10 + (c - 'a'));
    return std::nullopt;
}

Word::Word(std::size_t k) : k_(k) { check_alphabet(k); }

Word::Word(std::vector<Symbol> symbols, std::size_t k) : symbols_(std::move(symbols)), k_(k) {
    check_alphabet(k);
    for (Symbol s : symbols_) {
        if (s >= k) {
            throw ContractError("symbol " + std::to_string(s) + " outside alphabet of size " +
                                std::to_string(k));
        }
    }
}

Word::Word(std::initializer_list<Symbol> symbols, std::size_t k)
    : Word(std::vector<Symbol>(symbols), k) {}

Word Word::parse(std::string_view text, std::size_t k) {
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    std::size_t inferred = 1;
    for (char c : text) {
        auto s = char_symbol(c);
        if (!s) throw ParseError(std::string("invalid symbol character '") + c + "'");
        symbols.push_back(*s);
        inferred = std::max<std::size_t>(inferred, std::size_t{*s} + 1);
    }
    return Word(std::move(symbols), k == 0 ? inferred : k);
}

Word Word::factor(std::size_t begin, std::size_t end) const {
    end = std::min(end, symbols_.size());
    begin = std::min(begin, end);
    return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(begin),
                                    symbols_.begin() + static_cast<std::ptrdiff_t>(end)),
                k_);
}

Word Word::concat(const Word& other) const {
    if (other.k_ != k_) throw ContractError("concatenation of words over different alphabets");
    Word out = *this;
    out.symbols_.insert(out.symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return out;
}

void Word::push_back(Symbol s) {
    if (s >= k_) throw ContractError("symbol outside alphabet");
    symbols_.push_back(s);
}

std::string Word::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) {
        if (s < kTextAlphabetSize) {
            out.push_back(symbol_char(s));
        } else {
            out += "<" + std::to_string(s) + ">";
        }
    }
    return out;
}

std::size_t infer_alphabet(std::span<const std::string> texts) {
    std::size_t k = 1;
    for (const auto& t : texts) {
        for (char c : t) {
            if (auto s = char_symbol(c)) k = std::max<std::size_t>(k, std::size_t{*s} + 1);
        }
    }
    return k;
}

WordSet::WordSet(std::initializer_list<Word> words, std::size_t k) : k_(k) {
    for (const auto& w : words) insert(w);
}

bool WordSet::insert(Word w) {
    if (w.k() != k_) {
        throw ContractError("word over alphabet " + std::to_string(w.k()) +
                            " inserted into set over alphabet " + std::to_string(k_));
    }
    return words_.insert(std::move(w)).second;
}

void WordSet::merge(const WordSet& other) {
    for (const auto& w : other) insert(w);
}

std::vector<std::string> WordSet::strings() const {
    std::vector<std::string> out;
    out.reserve(words_.size());
    for (const auto& w : words_) out.push_back(w.str());
    return out;
}

} // namespace shufflekit
