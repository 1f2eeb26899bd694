#include "genlab/bhp.hpp"

#include "genlab/errors.hpp"

namespace genlab {

namespace {

void require_binary_ensemble(const SphericalEnsemble& mu) {
    if (!(mu.alphabet() == Alphabet::binary())) throw DomainError("x′ constructions need an ensemble over {0,1}");
}

bool high(const SphericalEnsemble& mu, const Word& x) { return mu.mass(x) > pow2_neg(x.size()); }

}  // namespace

Rational dyadic_value(const Word& s) {
    if (s.empty()) throw DomainError("dyadic value of the empty string");
    Natural v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) v = 2 * v + s[i];
    Rational r(2 * v + 1, pow2(s.size()));
    r.canonicalize();
    return r;
}

Word x_prime(const SphericalEnsemble& mu, const Word& x) {
    require_binary_ensemble(mu);
    if (!high(mu, x)) throw DomainError("x′ needs μ(x) > 2^-|x| at '" + x.to_string() + "'");
    Rational lo = mu_star(mu, x);
    Rational hi = hat_mu(mu, x);
    // Walk the binary expansions of lo and hi (hi = 1 read as 0.111…) until
    // the first bit where they differ; x′ is 0 followed by the common prefix.
    const bool hi_is_one = hi == 1;
    Word out = Word::binary("0");
    for (std::size_t i = 0; i <= x.size() + 1; ++i) {
        lo *= 2;
        const int a = lo >= 1 ? 1 : 0;
        if (a) lo -= 1;
        int b = 1;
        if (!hi_is_one) {
            hi *= 2;
            b = hi >= 1 ? 1 : 0;
            if (b) hi -= 1;
        }
        if (a != b) return out;
        out.push_back(static_cast<Symbol>(a));
    }
    throw Error("x′ prefix construction ran past |x|+1 bits at '" + x.to_string() + "'");
}

Word x_prime_scan(const SphericalEnsemble& mu, const Word& x) {
    require_binary_ensemble(mu);
    if (!high(mu, x)) throw DomainError("x′ needs μ(x) > 2^-|x| at '" + x.to_string() + "'");
    const Rational lo = mu_star(mu, x);
    const Rational hi = hat_mu(mu, x);
    for (std::size_t len = 1; len <= x.size() + 1; ++len) {
        Word found(Alphabet::binary());
        bool hit = false;
        for_each_in_sphere(Alphabet::binary(), len, [&](const Word& s) {
            if (hit) return;
            const Rational v = dyadic_value(s);
            if (lo < v && v <= hi) {
                found = s;
                hit = true;
            }
        });
        if (hit) return found;
    }
    throw Error("no x′ candidate of length <= |x|+1 for '" + x.to_string() + "'");
}

Word x_double_prime(const SphericalEnsemble& mu, const Word& x) {
    require_binary_ensemble(mu);
    Word out(Alphabet::binary());
    if (!high(mu, x)) {
        out.push_back(0);
        out.append(x);
    } else {
        out.push_back(1);
        out.append(x_prime(mu, x));
    }
    return out;
}

Word invert_mu_star(const SphericalEnsemble& mu, std::size_t n, const Rational& t) {
    require_binary_ensemble(mu);
    if (t <= 0 || t > 1) throw DomainError("invert_mu_star needs 0 < t <= 1");
    // The answer is the largest x with μ*(x) < t; fix it one bit at a time.
    std::string letters(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        letters[i] = 1;
        if (!(mu_star(mu, Word(Alphabet::binary(), letters)) < t)) letters[i] = 0;
    }
    return Word(Alphabet::binary(), std::move(letters));
}

std::optional<Word> recover_from_x_double_prime(const SphericalEnsemble& mu, std::size_t n, const Word& xpp) {
    if (xpp.empty()) return std::nullopt;
    const Word rest = xpp.substr(1);
    if (xpp[0] == 0) {
        if (rest.size() != n || high(mu, rest)) return std::nullopt;
        return rest;
    }
    if (rest.empty() || rest.size() > n + 1) return std::nullopt;
    const Rational t = dyadic_value(rest);
    if (t > 1) return std::nullopt;
    Word x = invert_mu_star(mu, n, t);
    if (!high(mu, x) || !(x_prime(mu, x) == rest)) return std::nullopt;
    return x;
}

}  // namespace genlab
