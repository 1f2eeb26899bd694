#include "genlab/bhp.hpp"

#include "genlab/errors.hpp"

#include <algorithm>

namespace genlab {

namespace {

const Alphabet& bin() { return Alphabet::binary(); }

void require_binary(const Word& u, const char* what) {
    if (!(u.alphabet() == bin())) throw AlphabetMismatch(std::string(what) + " needs a binary word");
}

Rational inverse_pow2_times(std::uint64_t n, std::uint64_t k) {
    // 1/(n·2^k)
    Natural den = pow2(k) * Natural(std::to_string(n));
    Rational r(Natural(1), den);
    r.canonicalize();
    return r;
}

class DBHNuImpl final : public detail::EnsembleImpl {
public:
    EnsembleKind kind() const override { return EnsembleKind::DBHNu; }
    std::string describe() const override { return "dbh_nu"; }
    std::string computability() const override { return "Ptime (closed form)"; }
    Rational mass(const Word& x) const override { return nu_mass(x); }

    std::optional<Rational> mu_star(const Word& x) const override {
        // Words below x branch off at some i with x_i = 1. The cylinder
        // x[0..i)0Σ* has mass 1/n when x[0..i) is all ones, otherwise
        // 2^{j-i}/n with j the first 0 of x.
        const std::size_t n = x.size();
        if (n == 0) return Rational(0);
        const auto& l = x.letters();
        const std::size_t j = std::find(l.begin(), l.end(), 0) - l.begin();
        Rational sum = j;
        for (std::size_t i = j + 1; i < n; ++i)
            if (x[i] == 1) sum += pow2_neg(i - j);
        Rational r = sum / Rational(Natural(std::to_string(n)));
        return r;
    }
};

}  // namespace

Word encode_instance(std::uint64_t n, const Word& w) {
    require_binary(w, "encode_instance");
    if (n <= w.size()) throw DomainError("code length " + std::to_string(n) + " leaves no room for 0" + w.to_string());
    Word u = Word::repeat(bin(), 1, n - w.size() - 1);
    u.push_back(0);
    u.append(w);
    return u;
}

std::optional<BHInstance> try_decode_instance(const Word& u) {
    if (!(u.alphabet() == bin())) return std::nullopt;
    const auto& l = u.letters();
    const auto zero = std::find(l.begin(), l.end(), 0);
    if (zero == l.end()) return std::nullopt;
    const auto pos = static_cast<std::size_t>(zero - l.begin());
    return BHInstance{u.size(), u.substr(pos + 1)};
}

BHInstance decode_instance(const Word& u) {
    auto inst = try_decode_instance(u);
    if (!inst) throw DomainError("'" + u.to_string() + "' is not an instance code");
    return *inst;
}

bool bh_member(const Machine& m, const Word& u) {
    auto inst = try_decode_instance(u);
    if (!inst) return false;
    if (!(m.input_alphabet() == bin())) throw AlphabetMismatch("bounded halting needs a machine over {0,1}");
    return m.evaluate(inst->w, inst->n).halted();
}

Rational nu_mass(const Word& u) {
    require_binary(u, "nu_mass");
    if (u.empty()) return 1;
    auto inst = try_decode_instance(u);
    if (!inst) return 0;
    return inverse_pow2_times(u.size(), inst->w.size());
}

SphericalEnsemble dbh_nu() {
    static const SphericalEnsemble nu(bin(), std::make_shared<DBHNuImpl>());
    return nu;
}

LongevityGuard LongevityGuard::from_polynomial(const Polynomial& p) {
    return {p.to_string(), [p](std::uint64_t n) { return p(n); }, p};
}

std::optional<std::uint64_t> LongevityGuard::inverse(std::uint64_t n) const {
    for (std::uint64_t k = 0;; ++k) {
        const auto v = g(k);
        if (v == n) return k;
        if (v > n || k >= n) return std::nullopt;
    }
}

CheckReport LongevityGuard::validate(std::size_t horizon) const {
    CheckReport r;
    r.property = "longevity guard " + label;
    r.horizon = horizon;
    for (std::uint64_t n = 0; n <= horizon; ++n) {
        ++r.checked;
        const auto v = g(n);
        if (v < n) r.add("n=" + std::to_string(n), ">= " + std::to_string(n), std::to_string(v), "L1");
        if (n > 0 && v <= g(n - 1))
            r.add("n=" + std::to_string(n), "> " + std::to_string(g(n - 1)), std::to_string(v), "L2");
    }
    return r;
}

WordSet c_of_g(const LongevityGuard& g) {
    WordSet s;
    s.label = "C(" + g.label + ")";
    s.contains = [g](const Word& u) {
        auto inst = try_decode_instance(u);
        return inst && g(inst->w.size()) == inst->n;
    };
    s.sphere_mass = [g](const SphericalEnsemble& mu, std::size_t n) -> std::optional<Rational> {
        if (mu.kind() != EnsembleKind::DBHNu) return std::nullopt;
        auto k = g.inverse(n);
        if (!k || n < *k + 1) return Rational(0);
        Rational r(1, static_cast<unsigned long>(n));
        return r;
    };
    return s;
}

SphericalEnsemble nu_g(const LongevityGuard& g) { return induce(dbh_nu(), c_of_g(g)); }

Word numeral(const Natural& n) {
    if (n < 0) throw DomainError("negative numeral");
    if (n == 0) return Word::binary("10");
    const std::string bits = n.get_str(2);
    std::string letters;
    letters.reserve(2 * bits.size());
    for (char b : bits) {
        letters.push_back(1);
        letters.push_back(static_cast<char>(b - '0'));
    }
    return Word(bin(), std::move(letters));
}

Word numeral(std::uint64_t n) { return numeral(Natural(std::to_string(n))); }

std::size_t numeral_length(std::uint64_t n) {
    std::size_t bits = 0;
    for (; n > 0; n >>= 1) ++bits;
    return 2 * std::max<std::size_t>(bits, 1);
}

namespace {

// Parses pairs "1b" from pos while the next symbol is 1. Returns the bits read
// and the position after them.
std::optional<std::pair<std::string, std::size_t>> read_pairs(const Word& u, std::size_t pos) {
    std::string bits;
    while (pos < u.size() && u[pos] == 1) {
        if (pos + 1 >= u.size()) return std::nullopt;
        bits.push_back(static_cast<char>('0' + u[pos + 1]));
        pos += 2;
    }
    if (bits.empty()) return std::nullopt;
    if (bits[0] == '0' && bits.size() != 1) return std::nullopt;
    return std::make_pair(std::move(bits), pos);
}

}  // namespace

Natural decode_numeral(const Word& v) {
    require_binary(v, "decode_numeral");
    auto parsed = read_pairs(v, 0);
    if (!parsed || parsed->second != v.size())
        throw ParseError("'" + v.to_string() + "' is not a numeral");
    return Natural(parsed->first, 2);
}

std::optional<std::pair<Natural, std::size_t>> read_numeral(const Word& u, std::size_t pos) {
    if (!(u.alphabet() == bin())) return std::nullopt;
    auto parsed = read_pairs(u, pos);
    if (!parsed || parsed->second >= u.size()) return std::nullopt;  // u[end] must be the 0 separator
    return std::make_pair(Natural(parsed->first, 2), parsed->second);
}

}  // namespace genlab
