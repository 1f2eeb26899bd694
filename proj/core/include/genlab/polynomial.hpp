#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace genlab {

/// Polynomial with nonnegative integer coefficients c0 + c1 n + ... + cd n^d.
/// Evaluation throws DomainError on 64-bit overflow.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::uint64_t> coefficients);

    static Polynomial constant(std::uint64_t c) { return Polynomial({c}); }
    static Polynomial linear(std::uint64_t c0, std::uint64_t c1) { return Polynomial({c0, c1}); }

    /// Accepts "2n+1", "n^2 + n + 6", "3", "4n^3" (terms in any order).
    static Polynomial parse(std::string_view text);

    std::uint64_t operator()(std::uint64_t n) const;

    const std::vector<std::uint64_t>& coefficients() const { return coefficients_; }
    std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }

    /// True when the value is strictly increasing in n (degree >= 1 and a
    /// positive coefficient above the constant term).
    bool strictly_increasing() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    /// (this ∘ inner)(n) = this(inner(n)).
    Polynomial compose(const Polynomial& inner) const;

    std::string to_string() const;

    bool operator==(const Polynomial& other) const = default;

private:
    void trim();
    std::vector<std::uint64_t> coefficients_;
};

}  // namespace genlab
