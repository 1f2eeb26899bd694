#include "genlab/words.hpp"

#include "genlab/errors.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>

namespace genlab {

Alphabet::Alphabet(std::vector<std::string> symbols) {
    if (symbols.empty()) throw DomainError("alphabet must contain at least one symbol");
    if (symbols.size() > std::numeric_limits<Symbol>::max())
        throw DomainError("alphabet too large");
    std::set<std::string> seen;
    auto data = std::make_shared<Data>();
    for (auto& s : symbols) {
        if (s.empty()) throw DomainError("empty symbol name");
        if (!seen.insert(s).second) throw DomainError("duplicate symbol '" + s + "'");
        if (s.size() != 1) data->single_char = false;
    }
    data->symbols = std::move(symbols);
    data_ = std::move(data);
}

Alphabet Alphabet::from_chars(std::string_view chars) {
    std::vector<std::string> symbols;
    for (char c : chars) symbols.emplace_back(1, c);
    return Alphabet(std::move(symbols));
}

const Alphabet& Alphabet::binary() {
    static const Alphabet b = from_chars("01");
    return b;
}

Symbol Alphabet::index_of(std::string_view name) const {
    const auto& syms = data_->symbols;
    auto it = std::find(syms.begin(), syms.end(), name);
    if (it == syms.end()) throw ParseError("symbol '" + std::string(name) + "' not in alphabet");
    return static_cast<Symbol>(it - syms.begin());
}

bool Alphabet::contains(std::string_view name) const {
    const auto& syms = data_->symbols;
    return std::find(syms.begin(), syms.end(), name) != syms.end();
}

bool Alphabet::operator==(const Alphabet& other) const {
    return data_ == other.data_ || data_->symbols == other.data_->symbols;
}

Word::Word(Alphabet alphabet, std::string letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (char c : letters_)
        if (static_cast<Symbol>(c) >= alphabet_.size()) throw DomainError("letter outside alphabet");
}

Word::Word(Alphabet alphabet, const std::vector<Symbol>& letters) : alphabet_(std::move(alphabet)) {
    letters_.reserve(letters.size());
    for (Symbol s : letters) push_back(s);
}

Word Word::parse(const Alphabet& alphabet, std::string_view text) {
    Word w(alphabet);
    if (text.empty()) return w;
    if (alphabet.single_char()) {
        for (char c : text) w.push_back(alphabet.index_of(std::string_view(&c, 1)));
        return w;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto end = comma == std::string_view::npos ? text.size() : comma;
        w.push_back(alphabet.index_of(text.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return w;
}

Word Word::repeat(const Alphabet& alphabet, Symbol s, std::size_t n) {
    if (s >= alphabet.size()) throw DomainError("letter outside alphabet");
    return Word(alphabet, std::string(n, static_cast<char>(s)));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
    Word w(alphabet_);
    w.letters_ = letters_.substr(pos, len);
    return w;
}

Word& Word::push_back(Symbol s) {
    if (s >= alphabet_.size()) throw DomainError("letter outside alphabet");
    letters_.push_back(static_cast<char>(s));
    return *this;
}

Word& Word::append(const Word& other) {
    if (!(alphabet_ == other.alphabet_)) throw AlphabetMismatch("cannot concatenate words over different alphabets");
    letters_ += other.letters_;
    return *this;
}

Word Word::operator+(const Word& other) const {
    Word w = *this;
    w.append(other);
    return w;
}

std::string Word::to_string() const {
    std::string out;
    bool first = true;
    for (char c : letters_) {
        if (!alphabet_.single_char() && !first) out += ',';
        out += alphabet_.symbol(static_cast<Symbol>(c));
        first = false;
    }
    return out;
}

bool Word::operator==(const Word& other) const {
    return letters_ == other.letters_ && alphabet_ == other.alphabet_;
}

std::strong_ordering Word::operator<=>(const Word& other) const { return shortlex_cmp(*this, other); }

std::strong_ordering shortlex_cmp(const Word& a, const Word& b) {
    if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch("shortlex_cmp on different alphabets");
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

bool is_lex_max(const Word& x) {
    const auto top = static_cast<Symbol>(x.alphabet().size() - 1);
    return std::all_of(x.letters().begin(), x.letters().end(),
                       [top](char c) { return static_cast<Symbol>(c) == top; });
}

namespace {

// Increments x as a base-|Σ| counter; returns false on overflow (x was lex-max).
bool increment(std::string& letters, std::size_t base) {
    for (std::size_t i = letters.size(); i-- > 0;) {
        auto s = static_cast<Symbol>(letters[i]);
        if (s + 1u < base) {
            letters[i] = static_cast<char>(s + 1);
            return true;
        }
        letters[i] = 0;
    }
    return false;
}

}  // namespace

Word shortlex_successor(const Word& x) {
    std::string letters = x.letters();
    if (!increment(letters, x.alphabet().size())) letters.assign(x.size() + 1, 0);
    return Word(x.alphabet(), std::move(letters));
}

Word lex_successor_in_sphere(const Word& x) {
    std::string letters = x.letters();
    if (!increment(letters, x.alphabet().size()))
        throw DomainError("'" + x.to_string() + "' is the lexicographic maximum of its sphere");
    return Word(x.alphabet(), std::move(letters));
}

std::uint64_t sphere_size(const Alphabet& alphabet, std::size_t n) {
    std::uint64_t total = 1;
    const std::uint64_t base = alphabet.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / base)
            throw DomainError("sphere size overflows 64 bits");
        total *= base;
    }
    return total;
}

std::uint64_t rank_in_sphere(const Word& x) {
    sphere_size(x.alphabet(), x.size());
    std::uint64_t r = 0;
    const std::uint64_t base = x.alphabet().size();
    for (std::size_t i = 0; i < x.size(); ++i) r = r * base + x[i];
    return r + 1;
}

Word unrank(const Alphabet& alphabet, std::size_t n, std::uint64_t k) {
    const auto total = sphere_size(alphabet, n);
    if (k < 1 || k > total) throw DomainError("rank out of range");
    std::string letters(n, 0);
    std::uint64_t r = k - 1;
    const std::uint64_t base = alphabet.size();
    for (std::size_t i = n; i-- > 0;) {
        letters[i] = static_cast<char>(r % base);
        r /= base;
    }
    return Word(alphabet, std::move(letters));
}

void for_each_in_sphere(const Alphabet& alphabet, std::size_t n,
                        const std::function<void(const Word&)>& fn) {
    std::string letters(n, 0);
    do {
        fn(Word(alphabet, letters));
    } while (increment(letters, alphabet.size()));
}

std::vector<Word> sphere(const Alphabet& alphabet, std::size_t n) {
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(sphere_size(alphabet, n)));
    for_each_in_sphere(alphabet, n, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::ostream& operator<<(std::ostream& out, const Word& x) { return out << (x.empty() ? "ε" : x.to_string()); }

}  // namespace genlab
