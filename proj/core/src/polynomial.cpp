#include "genlab/polynomial.hpp"

#include "genlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace genlab {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) throw DomainError("polynomial overflow");
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw DomainError("polynomial overflow");
    return a * b;
}

}  // namespace

Polynomial::Polynomial(std::vector<std::uint64_t> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::uint64_t Polynomial::operator()(std::uint64_t n) const {
    std::uint64_t acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = checked_add(checked_mul(acc, n), *it);
    return acc;
}

bool Polynomial::strictly_increasing() const {
    return coefficients_.size() >= 2 &&
           std::any_of(coefficients_.begin() + 1, coefficients_.end(), [](auto c) { return c > 0; });
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<std::uint64_t> out(std::max(coefficients_.size(), other.coefficients_.size()), 0);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] = coefficients_[i];
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) out[i] = checked_add(out[i], other.coefficients_[i]);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (coefficients_.empty() || other.coefficients_.empty()) return Polynomial();
    std::vector<std::uint64_t> out(coefficients_.size() + other.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(coefficients_[i], other.coefficients_[j]));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * inner + Polynomial::constant(*it);
    return acc;
}

Polynomial Polynomial::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<std::uint64_t> coeffs;
    std::size_t i = 0;
    auto read_number = [&](std::uint64_t& out) {
        std::size_t start = i;
        out = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            out = checked_add(checked_mul(out, 10), static_cast<std::uint64_t>(s[i++] - '0'));
        return i > start;
    };
    while (i < s.size()) {
        std::uint64_t c = 1;
        const bool has_coeff = read_number(c);
        if (!has_coeff) c = 1;
        if (i < s.size() && s[i] == '*') ++i;
        std::uint64_t power = 0;
        if (i < s.size() && s[i] == 'n') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (!read_number(power)) throw ParseError("missing exponent in '" + s + "'");
            }
        } else if (!has_coeff) {
            throw ParseError("malformed polynomial '" + s + "'");
        }
        if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
        coeffs[power] = checked_add(coeffs[power], c);
        if (i < s.size()) {
            if (s[i] != '+') throw ParseError("malformed polynomial '" + s + "'");
            ++i;
            if (i == s.size()) throw ParseError("trailing '+' in '" + s + "'");
        }
    }
    return Polynomial(std::move(coeffs));
}

std::string Polynomial::to_string() const {
    if (coefficients_.empty()) return "0";
    std::string out;
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
        auto c = coefficients_[k];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (k == 0 || c != 1) out += std::to_string(c);
        if (k >= 1) out += "n";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace genlab
