#include "genlab/rational.hpp"

#include "genlab/errors.hpp"

#include <cctype>

namespace genlab {

Natural pow2(std::uint64_t k) {
    Natural r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

Rational pow2_neg(std::uint64_t k) {
    Rational r(Natural(1), pow2(k));
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto valid = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational '" + s + "'");
    Natural p(num[0] == '+' ? num.substr(1) : num, 10);
    Natural q(den, 10);
    if (q == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace genlab
