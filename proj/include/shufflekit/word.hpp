#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shufflekit {

/// Index of a letter in an alphabet {0, ..., k-1}.
using Symbol = std::uint8_t;

/// Largest alphabet supported by the text form ('0'-'9' then 'a'-'z').
inline constexpr std::size_t kTextAlphabetSize = 36;
inline constexpr std::size_t kMaxAlphabetSize = 256;

/// Character for a symbol index; throws ContractError past the text table.
char symbol_char(Symbol s);
/// Symbol index for a character of the text table, or nullopt.
std::optional<Symbol> char_symbol(char c);

/// A finite word over the alphabet {0, ..., k-1}.
class Word {
public:
    Word() = default;
    explicit Word(std::size_t k);
    Word(std::vector<Symbol> symbols, std::size_t k);
    Word(std::initializer_list<Symbol> symbols, std::size_t k);

    /// Parses text over the symbol table. k == 0 infers max symbol + 1 (at least 1).
    static Word parse(std::string_view text, std::size_t k = 0);

    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    /// Factor w[i..j) (0-based, half-open).
    Word factor(std::size_t begin, std::size_t end) const;
    Word concat(const Word& other) const;
    void push_back(Symbol s);

    /// Text form; symbols beyond the table print as "<n>".
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Symbol> symbols_;
    std::size_t k_ = 1;
};

/// Largest symbol index + 1 over a group of texts (at least 1).
std::size_t infer_alphabet(std::span<const std::string> texts);

/// Deduplicated, lexicographically ordered set of words over one alphabet.
class WordSet {
public:
    using const_iterator = std::set<Word>::const_iterator;

    WordSet() = default;
    explicit WordSet(std::size_t k) : k_(k) {}
    WordSet(std::initializer_list<Word> words, std::size_t k);

    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    bool contains(const Word& w) const { return words_.contains(w); }
    const_iterator begin() const noexcept { return words_.begin(); }
    const_iterator end() const noexcept { return words_.end(); }

    /// Throws ContractError when w.k() differs from the set's alphabet.
    bool insert(Word w);
    void merge(const WordSet& other);

    std::vector<std::string> strings() const;

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    std::set<Word> words_;
    std::size_t k_ = 1;
};

} // namespace shufflekit
