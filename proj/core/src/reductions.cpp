#include "genlab/reductions.hpp"

#include "genlab/errors.hpp"
#include "genlab/genericity.hpp"

#include <algorithm>
#include <limits>

namespace genlab {

Reduction identity_reduction(const Alphabet& alphabet) {
    Reduction::Declaration d;
    d.name = "identity";
    d.kind = ReductionKind::CS;
    d.size_growth = [](std::uint64_t n) { return n; };
    d.size_growth_label = "n";
    d.size_envelope = Polynomial::linear(0, 1);
    d.time_bound = Polynomial::linear(0, 1);
    d.density = Polynomial::constant(1);
    return Reduction(alphabet, alphabet, [](const Word& x) { return x; }, std::move(d));
}

Reduction example41() {
    Reduction::Declaration d;
    d.name = "example41";
    d.kind = ReductionKind::Plain;
    d.size_envelope = Polynomial::linear(0, 2);
    d.time_bound = Polynomial::linear(0, 2);
    const auto& b = Alphabet::binary();
    return Reduction(b, b,
                     [](const Word& x) {
                         Word y(Alphabet::binary());
                         for (std::size_t i = 0; i < x.size(); ++i) {
                             y.push_back(x[i]);
                             if (x[i] == 0) y.push_back(0);
                         }
                         return y;
                     },
                     std::move(d));
}

std::uint64_t binary_length(std::size_t k, std::uint64_t n) {
    if (k == 0) throw DomainError("empty alphabet");
    Natural size;
    mpz_ui_pow_ui(size.get_mpz_t(), k, n);
    if (size == 1) return 0;
    Natural top = size - 1;
    return mpz_sizeinbase(top.get_mpz_t(), 2);
}

namespace {

Natural exact_rank0(const Word& x) {
    Natural r = 0;
    const auto base = static_cast<unsigned long>(x.alphabet().size());
    for (std::size_t i = 0; i < x.size(); ++i) r = r * base + x[i];
    return r;
}

Word exact_unrank0(const Alphabet& a, std::size_t n, Natural r) {
    std::string letters(n, 0);
    const auto base = static_cast<unsigned long>(a.size());
    for (std::size_t i = n; i-- > 0;) {
        Natural q = r / base;
        letters[i] = static_cast<char>(Natural(r - q * base).get_ui());
        r = q;
    }
    return Word(a, std::move(letters));
}

unsigned ceil_log2(std::size_t k) {
    unsigned l = 0;
    while ((std::size_t{1} << l) < k) ++l;
    return l;
}

}  // namespace

BinaryImage to_binary(const DistProblem& problem) {
    const Alphabet sigma = problem.alphabet;
    const Alphabet& bin = Alphabet::binary();
    const std::size_t k = sigma.size();
    Reduction::Declaration d;
    d.name = "bin_alph(" + std::to_string(k) + ")";
    d.kind = ReductionKind::CS;
    Reduction::Map map;
    if (k <= 2) {
        d.size_growth = [](std::uint64_t n) { return n; };
        d.size_growth_label = "n";
        d.size_envelope = Polynomial::linear(0, 1);
        d.time_bound = Polynomial::linear(0, 1);
        map = [](const Word& x) { return Word(Alphabet::binary(), x.letters()); };
    } else {
        d.size_growth = [k](std::uint64_t n) { return binary_length(k, n); };
        d.size_growth_label = "ceil(n*log2(" + std::to_string(k) + "))";
        d.size_envelope = Polynomial::linear(0, ceil_log2(k));
        d.time_bound = Polynomial({1, 1, 1});
        map = [k](const Word& x) {
            if (x.empty()) return Word(Alphabet::binary());
            return exact_unrank0(Alphabet::binary(), binary_length(k, x.size()), exact_rank0(x));
        };
    }
    Reduction f(sigma, bin, map, std::move(d));

    // y ∈ E⁺ iff |y| is an achieved size, y has a preimage, and the preimage is in D⁺.
    auto member = problem.member;
    auto preimage = [f, sigma, k](const Word& y) -> std::optional<Word> {
        const auto n = f.source_size_for(y.size());
        if (!n) return std::nullopt;
        if (k == 1) {
            if (std::any_of(y.letters().begin(), y.letters().end(), [](char c) { return c != 0; })) return std::nullopt;
            return Word::repeat(sigma, 0, *n);
        }
        if (k == 2) return Word(sigma, y.letters());
        Natural size;
        mpz_ui_pow_ui(size.get_mpz_t(), k, *n);
        Natural r = exact_rank0(y);
        if (r >= size) return std::nullopt;
        return exact_unrank0(sigma, *n, r);
    };
    DistProblem image{problem.name + "/bin", bin,
                      [member, preimage](const Word& y) {
                          auto x = preimage(y);
                          return x && member(*x);
                      },
                      transfer(f, problem.mu)};
    return {f, std::move(image)};
}

CheckReport verify_size_invariance(const Reduction& f, std::size_t n_max) {
    CheckReport report;
    report.property = "size-invariance";
    report.horizon = n_max;
    std::optional<std::size_t> prev_max;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (sphere_size(f.source(), n) > kMaxEnumeratedSphere)
            throw HorizonExceeded("size invariance at n=" + std::to_string(n) + " needs enumeration");
        std::optional<Word> lo, hi;
        std::size_t lo_len = 0, hi_len = 0;
        for_each_in_sphere(f.source(), n, [&](const Word& x) {
            const auto len = f.apply(x).size();
            ++report.checked;
            if (!lo || len < lo_len) lo = x, lo_len = len;
            if (!hi || len > hi_len) hi = x, hi_len = len;
        });
        if (lo_len != hi_len)
            report.add(lo->to_string() + " / " + hi->to_string(), "equal image lengths",
                       std::to_string(lo_len) + " vs " + std::to_string(hi_len), "sphere " + std::to_string(n));
        if (prev_max && lo_len <= *prev_max)
            report.add(lo->to_string(), "image longer than " + std::to_string(*prev_max), std::to_string(lo_len),
                       "sizes not strictly increasing at sphere " + std::to_string(n));
        if (f.has_size_growth() && lo_len == hi_len && f.size_growth(n) != lo_len)
            report.add("sphere " + std::to_string(n), std::to_string(f.size_growth(n)), std::to_string(lo_len),
                       "declared size growth");
        prev_max = hi_len;
    }
    return report;
}

CheckReport verify_cs(const Reduction& f, const SphericalEnsemble& mu, const SphericalEnsemble& nu, std::size_t n_max) {
    CheckReport report;
    report.property = "CS";
    report.horizon = n_max;
    const CheckReport size = verify_size_invariance(f, n_max);
    report.absorb(size);
    if (!size.passed()) return report;
    report.absorb(verify_transfer(f, mu, nu, f.size_growth(n_max)));
    return report;
}

CheckReport verify_cm(const Reduction& f, const SphericalEnsemble& mu, const SphericalEnsemble& nu, const Polynomial& d,
                      std::size_t n_max) {
    CheckReport report;
    report.property = "CM";
    report.horizon = n_max;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (sphere_size(f.source(), n) > kMaxEnumeratedSphere)
            throw HorizonExceeded("CM check at n=" + std::to_string(n) + " needs enumeration");
        const auto dn = d(n);
        for_each_in_sphere(f.source(), n, [&](const Word& x) {
            ++report.checked;
            const Word y = f.apply(x);
            if (y.size() != x.size()) {
                report.add(x.to_string(), "|f(x)| = " + std::to_string(x.size()), std::to_string(y.size()), "length");
                return;
            }
            const Rational m = mu.mass(x);
            const Rational v = nu.mass(y);
            if (dn == 0) {
                if (m != 0) report.add(x.to_string(), "d(n) >= 1", "0", "density polynomial vanishes");
                return;
            }
            const Rational bound = m / Rational(Natural(std::to_string(dn)));
            if (v < bound) report.add(x.to_string(), ">= " + to_string(bound), to_string(v), "nu(f(x)) >= mu(x)/d(n)");
        });
    }
    return report;
}

Reduction compose(const Reduction& f, const Reduction& g) {
    if (!(f.target() == g.source())) throw AlphabetMismatch("compose: target of f differs from source of g");
    Reduction::Declaration d;
    d.name = g.name() + "∘" + f.name();
    d.kind = ReductionKind::Composite;
    if (f.has_size_growth() && g.has_size_growth()) {
        d.size_growth = [f, g](std::uint64_t n) { return g.size_growth(f.size_growth(n)); };
        d.size_growth_label = "S_" + g.name() + "(S_" + f.name() + "(n))";
    }
    d.size_envelope = g.size_envelope().compose(f.size_envelope());
    d.time_bound = f.time_bound() + g.time_bound().compose(f.size_envelope());
    if (f.density() && g.density()) d.density = *f.density() * g.density()->compose(f.size_envelope());
    return Reduction(f.source(), g.target(), [f, g](const Word& x) { return g.apply(f.apply(x)); }, std::move(d));
}

MachinePtr compose_machine(MachinePtr a, const Reduction& f) {
    if (!(a->input_alphabet() == f.target())) throw AlphabetMismatch("machine alphabet differs from the reduction target");
    auto eval = [a, f](const Word& x, std::uint64_t budget) {
        const auto cost = f.time_bound()(x.size());
        if (budget < cost) return RunResult::exhausted(budget);
        RunResult r = a->evaluate(f.apply(x), budget - cost);
        if (r.halted() || r.outcome == Outcome::Broke) r.steps += cost;
        else r.steps = budget;
        return r;
    };
    return std::make_shared<VirtualMachine>(a->name() + "∘" + f.name(), f.source(), eval);
}

namespace {

// C_{A,p}-style mass of words of the given sphere that exceed `bound`. On
// spheres too large to enumerate, sums over `fallback` instead and notes it.
Rational exceeding_mass(const Machine& a, const SphericalEnsemble& nu, std::size_t m, std::uint64_t bound,
                        const std::vector<Word>& fallback, CheckReport& report) {
    Rational total = 0;
    std::uint64_t size = std::numeric_limits<std::uint64_t>::max();
    try {
        size = sphere_size(nu.alphabet(), m);
    } catch (const DomainError&) {
    }
    if (size <= kMaxEnumeratedSphere) {
        for_each_in_sphere(nu.alphabet(), m, [&](const Word& y) {
            Rational q = nu.mass(y);
            if (q != 0 && exceeds(a, y, bound)) total += q;
        });
        return total;
    }
    for (const auto& y : fallback) {
        Rational q = nu.mass(y);
        if (q != 0 && exceeds(a, y, bound)) total += q;
    }
    report.notes.push_back("target sphere " + std::to_string(m) + " summed over the image of f only");
    return total;
}

}  // namespace

ControlTransferReport check_control_transfer(MachinePtr a, const Reduction& f, const Polynomial& p,
                                             const SphericalEnsemble& mu, const SphericalEnsemble& nu,
                                             std::size_t n_max) {
    ControlTransferReport out;
    out.report.property = "control-transfer(CS)";
    out.report.horizon = n_max;
    const MachinePtr af = compose_machine(a, f);
    for (std::size_t k = 0; k <= n_max; ++k) {
        if (sphere_size(f.source(), k) > kMaxEnumeratedSphere)
            throw HorizonExceeded("control transfer at k=" + std::to_string(k) + " needs enumeration");
        const auto m = f.size_growth(k);
        const auto pm = p(m);
        ControlTransferRow row{k, m, 0, 0, 0};
        std::vector<Word> images;
        for_each_in_sphere(f.source(), k, [&](const Word& x) {
            ++out.report.checked;
            const Rational q = mu.mass(x);
            const Word y = f.apply(x);
            images.push_back(y);
            if (q == 0) return;
            if (exceeds(*af, x, pm + f.time_bound()(k))) row.left += q;
            if (exceeds(*a, y, pm)) row.mid += q;
        });
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        row.right = exceeding_mass(*a, nu, m, pm, images, out.report);
        const std::string w = "k=" + std::to_string(k);
        if (row.left != row.mid) out.report.add(w, to_string(row.mid), to_string(row.left), "left equals mid");
        if (row.mid > row.right) out.report.add(w, "<= " + to_string(row.right), to_string(row.mid), "mid <= right");
        out.rows.push_back(std::move(row));
    }
    return out;
}

ControlTransferReport check_control_transfer_cm(MachinePtr a, const Reduction& f, const Polynomial& p,
                                                const SphericalEnsemble& mu, const SphericalEnsemble& nu,
                                                std::size_t n_max) {
    if (!f.density()) throw DomainError("CM control transfer needs a declared density polynomial");
    ControlTransferReport out;
    out.report.property = "control-transfer(CM)";
    out.report.horizon = n_max;
    for (std::size_t k = 0; k <= n_max; ++k) {
        if (sphere_size(f.source(), k) > kMaxEnumeratedSphere)
            throw HorizonExceeded("control transfer at k=" + std::to_string(k) + " needs enumeration");
        const auto pk = p(k);
        ControlTransferRow row{k, k, 0, 0, 0};
        std::vector<Word> images;
        for_each_in_sphere(f.source(), k, [&](const Word& x) {
            ++out.report.checked;
            const Rational q = mu.mass(x);
            const Word y = f.apply(x);
            images.push_back(y);
            if (q != 0 && exceeds(*a, y, pk)) row.left += q;
        });
        row.mid = row.left;
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        const Rational c = exceeding_mass(*a, nu, k, pk, images, out.report);
        row.right = c * Rational(Natural(std::to_string((*f.density())(k))));
        if (row.left > row.right)
            out.report.add("k=" + std::to_string(k), "<= " + to_string(row.right), to_string(row.left),
                           "C_{A,p}(k)*d(k) bound");
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace genlab
