#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace genlab {

using Symbol = std::uint8_t;

/// A finite, ordered set of distinct symbols. Cheap to copy (shared storage).
///
/// Symbol order is the order of construction and is the order used by every
/// lexicographic and shortlex comparison in the library.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    /// Alphabet whose symbols are the individual characters of `chars`.
    static Alphabet from_chars(std::string_view chars);

    /// The shared {0 < 1} alphabet.
    static const Alphabet& binary();

    std::size_t size() const { return data_->symbols.size(); }
    const std::string& symbol(Symbol s) const { return data_->symbols.at(s); }
    const std::vector<std::string>& symbols() const { return data_->symbols; }
    bool single_char() const { return data_->single_char; }

    /// Index of a symbol name; throws ParseError if absent.
    Symbol index_of(std::string_view name) const;
    bool contains(std::string_view name) const;

    bool operator==(const Alphabet& other) const;

private:
    struct Data {
        std::vector<std::string> symbols;
        bool single_char = true;
    };
    std::shared_ptr<const Data> data_;
};

/// A finite string of letters over an alphabet. Letters are stored as symbol
/// indices; |x| is size().
class Word {
public:
    explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
    Word(Alphabet alphabet, std::string letters);
    Word(Alphabet alphabet, const std::vector<Symbol>& letters);

    /// Parses the display form: one character per letter for single-character
    /// alphabets, otherwise comma-separated symbol names.
    static Word parse(const Alphabet& alphabet, std::string_view text);
    static Word binary(std::string_view bits) { return parse(Alphabet::binary(), bits); }
    static Word repeat(const Alphabet& alphabet, Symbol s, std::size_t n);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Symbol operator[](std::size_t i) const { return static_cast<Symbol>(letters_[i]); }

    /// Raw index bytes; useful as a hash key.
    const std::string& letters() const { return letters_; }

    Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
    Word& push_back(Symbol s);
    Word& append(const Word& other);
    Word operator+(const Word& other) const;

    std::string to_string() const;

    /// Same alphabet and same letters.
    bool operator==(const Word& other) const;
    /// Shortlex order; words over different alphabets throw AlphabetMismatch.
    std::strong_ordering operator<=>(const Word& other) const;

private:
    Alphabet alphabet_;
    std::string letters_;
};

/// Shortlex comparison: shorter first, then left-lexicographic by symbol order.
std::strong_ordering shortlex_cmp(const Word& a, const Word& b);

/// Immediate shortlex successor over Σ*. Total; 1^n wraps to 0^{n+1}.
Word shortlex_successor(const Word& x);

/// Next word of the same length in lexicographic order. Throws DomainError on
/// the lexicographically maximal word of the sphere.
Word lex_successor_in_sphere(const Word& x);

bool is_lex_max(const Word& x);

/// 1-based lexicographic position of x inside Σ^{|x|}. Throws DomainError
/// when |Σ|^{|x|} does not fit in 64 bits.
std::uint64_t rank_in_sphere(const Word& x);

/// Inverse of rank_in_sphere: the k-th word (1-based) of Σ^n.
Word unrank(const Alphabet& alphabet, std::size_t n, std::uint64_t k);

/// |Σ|^n, or DomainError on overflow.
std::uint64_t sphere_size(const Alphabet& alphabet, std::size_t n);

/// Calls fn on every word of Σ^n in lexicographic order.
void for_each_in_sphere(const Alphabet& alphabet, std::size_t n,
                        const std::function<void(const Word&)>& fn);

/// Collects Σ^n in lexicographic order.
std::vector<Word> sphere(const Alphabet& alphabet, std::size_t n);

/// Writes x.to_string(), or "ε" for the empty word.
std::ostream& operator<<(std::ostream& out, const Word& x);

}  // namespace genlab

template <>
struct std::hash<genlab::Word> {
    std::size_t operator()(const genlab::Word& w) const noexcept {
        return std::hash<std::string>{}(w.letters());
    }
};
