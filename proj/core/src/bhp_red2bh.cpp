#include "genlab/bhp.hpp"

#include "genlab/errors.hpp"

#include <algorithm>

namespace genlab {

std::uint64_t code_length_envelope(std::uint64_t n) {
    std::uint64_t log = 0;  // ⌈log₂(n+1)⌉
    while ((std::uint64_t{1} << log) < n + 1) ++log;
    return n + 2 * log + 6;
}

namespace {

const Alphabet& bin() { return Alphabet::binary(); }

Natural natural(std::uint64_t v) { return Natural(std::to_string(v)); }

std::uint64_t sq1(std::size_t n) {
    const std::uint64_t m = std::max<std::size_t>(n, 1);
    return m * m;
}

// 1^{total-|tail|} 0 tail-with-leading-0-already-included.
Word pad_to(std::uint64_t total, const Word& tail, const std::string& who) {
    if (tail.size() > total)
        throw ConstructionError(who + ": guard value " + std::to_string(total) + " is shorter than the code tail (" +
                                std::to_string(tail.size()) + ")");
    return Word::repeat(bin(), 1, total - tail.size()) + tail;
}

}  // namespace

Red2BH red2bh(const DistProblem& problem, const Decider& decider, const LongevityGuard& user_guard,
              std::size_t horizon) {
    if (!(problem.alphabet == bin())) throw DomainError("red2bh needs a binary problem; apply to_binary first");
    if (!(decider.machine->input_alphabet() == bin())) throw DomainError("red2bh needs a decider over {0,1}");
    const CheckReport guard_check = user_guard.validate(horizon);
    if (!guard_check.passed()) {
        const auto& v = guard_check.violations.front();
        throw ConstructionError("corrupted guard " + user_guard.label + ": " + v.note + " fails at " + v.witness);
    }

    const Polynomial guard_ad = decider.guard;
    const auto user = user_guard.g;
    LongevityGuard g;
    g.label = "max(" + user_guard.label + ", env(n)+n+" + guard_ad.to_string() + ")";
    g.g = [user, guard_ad](std::uint64_t n) {
        return std::max(user(n), code_length_envelope(n) + n + guard_ad(n));
    };
    g.envelope = user_guard.envelope + Polynomial({6, 4}) + guard_ad;

    const SphericalEnsemble mu = problem.mu;
    Reduction::Declaration d;
    d.name = "red2bh";
    d.kind = ReductionKind::Composite;
    d.size_growth = g.g;
    d.size_growth_label = g.label;
    d.size_envelope = g.envelope;
    d.time_bound = g.envelope + Polynomial({0, 0, 1});
    d.density = Polynomial({16}) * Polynomial({1, 0, 1}) * g.envelope;
    auto map = [mu, g](const Word& x) {
        Word tail = Word::binary("0") + numeral(static_cast<std::uint64_t>(x.size())) + Word::binary("0") +
                    x_double_prime(mu, x);
        return pad_to(g(x.size()), tail, "red2bh");
    };
    Reduction f(bin(), bin(), map, std::move(d));

    // Machine M on the w-part n̄ 0 b w′ of a code. Declared cost |input| + n
    // for decoding and μ* inversion, then A_D's own steps.
    const MachinePtr a_d = decider.machine;
    auto eval = [mu, a_d](const Word& input, std::uint64_t budget) {
        const auto never = RunResult::exhausted(budget);
        try {
            auto num = read_numeral(input, 0);
            if (!num || num->first > natural(budget)) return never;
            const auto n = num->first.get_ui();
            const std::uint64_t overhead = input.size() + n;
            if (overhead > budget) return never;
            // Steps C and D share the x″ decoder; the b = 0 branch also needs |w′| = n.
            auto x = recover_from_x_double_prime(mu, n, input.substr(num->second + 1));
            if (!x) return never;
            RunResult r = a_d->evaluate(*x, budget - overhead);
            if (!r.halted()) return never;
            r.steps += overhead;
            return r;
        } catch (const HorizonExceeded&) {
            // μ is undefined beyond a table's range; such inputs are not images of f.
            return never;
        }
    };
    auto m = std::make_shared<VirtualMachine>("M[" + problem.name + "]", bin(), eval);
    return {std::move(f), std::move(m), std::move(g)};
}

MeasureDecreaseReport verify_measure_decrease(const SphericalEnsemble& mu, const Red2BH& r, std::size_t n_max) {
    MeasureDecreaseReport out;
    out.lemma.property = "measure-decrease(16)";
    out.per_branch.property = "measure-decrease(8 per branch)";
    out.lemma.horizon = out.per_branch.horizon = n_max;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Rational gn(natural(r.g(n)));
        const Rational sq(natural(sq1(n)));
        for_each_in_sphere(bin(), n, [&](const Word& x) {
            const Rational m = mu.mass(x);
            const Word y = r.f.apply(x);
            const Rational v = nu_mass(y);
            const bool hi = m > pow2_neg(n);
            ++out.lemma.checked;
            ++out.per_branch.checked;
            const Rational lhs = v * 16 * sq * gn;
            MeasureRow row{x, hi, v, 0};
            if (m != 0) {
                row.ratio = lhs / m;
                if (!out.min_ratio || row.ratio < *out.min_ratio) out.min_ratio = row.ratio;
            }
            if (lhs < m) out.lemma.add(x.to_string(), ">= " + to_string(m), to_string(lhs), "nu(f(x))*16|x|^2 g(|x|)");
            if (!hi) {
                const Rational l8 = v * 8 * sq * gn;
                if (l8 < m) out.per_branch.add(x.to_string(), ">= " + to_string(m), to_string(l8), "low branch, factor 8");
            } else {
                const Word xp = x_prime(mu, x);
                const Rational bound =
                    Rational(1) / (Rational(8) * Rational(natural(sq1(xp.size()))) * gn * Rational(pow2(xp.size())));
                if (v < bound) out.per_branch.add(x.to_string(), ">= " + to_string(bound), to_string(v), "high branch, factor 8");
            }
            out.rows.push_back(std::move(row));
        });
    }
    return out;
}

CheckReport verify_measure_factor(const SphericalEnsemble& mu, const Reduction& f,
                                  const std::function<Rational(std::size_t)>& factor, std::size_t n_max,
                                  const std::string& property) {
    CheckReport report;
    report.property = property;
    report.horizon = n_max;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Rational c = factor(n);
        for_each_in_sphere(f.source(), n, [&](const Word& x) {
            ++report.checked;
            const Rational m = mu.mass(x);
            const Rational lhs = nu_mass(f.apply(x)) * c;
            if (lhs < m) report.add(x.to_string(), ">= " + to_string(m), to_string(lhs));
        });
    }
    return report;
}

LongevityGuard universal_guard(std::size_t mbar_length) {
    return LongevityGuard::from_polynomial(Polynomial({mbar_length + 6, 4}));
}

namespace {

Red2BHU red2bhu_impl(MachinePtr m, Word mbar, std::vector<MachinePtr> registry, const LongevityGuard& g,
                     std::size_t horizon) {
    if (!(m->input_alphabet() == bin())) throw DomainError("red2bhu needs a machine over {0,1}");
    const CheckReport guard_check = g.validate(horizon);
    if (!guard_check.passed()) throw ConstructionError("guard " + g.label + " violates L1/L2");
    const LongevityGuard need = universal_guard(mbar.size());
    for (std::uint64_t n = 0; n <= horizon; ++n)
        if (g(n) < need(n))
            throw ConstructionError("h = g·s is too small at n=" + std::to_string(n) + ": " + std::to_string(g(n)) +
                                    " < " + std::to_string(need(n)));

    LongevityGuard h = g;  // s ≡ 1
    Reduction::Declaration d;
    d.name = "red2bhu";
    d.kind = ReductionKind::Composite;
    d.size_growth = h.g;
    d.size_growth_label = h.label;
    d.size_envelope = h.envelope;
    d.time_bound = h.envelope + Polynomial({0, 0, 1});
    auto map = [h, mbar](const Word& x) {
        Word tail = Word::binary("0") + numeral(static_cast<std::uint64_t>(x.size())) + Word::binary("0") + mbar +
                    Word::binary("0") + x_double_prime(dbh_nu(), x);
        return pad_to(h(x.size()), tail, "red2bhu");
    };
    Reduction f(bin(), bin(), map, std::move(d));
    return {std::move(f), universal_machine(std::move(registry)), std::move(h), std::move(mbar)};
}

}  // namespace

Red2BHU red2bhu(const TuringMachine& m, const LongevityGuard& g, std::size_t horizon) {
    return red2bhu_impl(std::make_shared<TuringMachine>(m), machine_code(m), {}, g, horizon);
}

Red2BHU red2bhu(MachinePtr m, const LongevityGuard& g, std::size_t horizon) {
    return red2bhu_impl(m, registry_code(0), {m}, g, horizon);
}

}  // namespace genlab
