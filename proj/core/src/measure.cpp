#include "genlab/measure.hpp"

#include "genlab/errors.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace genlab {

std::string to_string(EnsembleKind k) {
    switch (k) {
        case EnsembleKind::Uniform: return "uniform";
        case EnsembleKind::Table: return "table";
        case EnsembleKind::DBHNu: return "dbh_nu";
        case EnsembleKind::Transferred: return "transferred";
        case EnsembleKind::Induced: return "induced";
        case EnsembleKind::ClosedForm: return "closed_form";
    }
    return "?";
}

WordSet WordSet::complement() const {
    WordSet c;
    c.label = "not(" + label + ")";
    auto in = contains;
    c.contains = [in](const Word& x) { return !in(x); };
    if (sphere_mass) {
        auto sm = sphere_mass;
        c.sphere_mass = [sm](const SphericalEnsemble& mu, std::size_t n) -> std::optional<Rational> {
            auto m = sm(mu, n);
            if (!m) return std::nullopt;
            return Rational(1 - *m);
        };
    }
    return c;
}

WordSet all_words() {
    return {"all", [](const Word&) { return true; },
            [](const SphericalEnsemble&, std::size_t) -> std::optional<Rational> { return Rational(1); }};
}

namespace {

void check_enumerable(const Alphabet& a, std::size_t n) {
    std::uint64_t size = 0;
    try {
        size = sphere_size(a, n);
    } catch (const DomainError&) {
        throw HorizonExceeded("sphere " + std::to_string(n) + " is too large to enumerate");
    }
    if (size > kMaxEnumeratedSphere) throw HorizonExceeded("sphere " + std::to_string(n) + " is too large to enumerate");
}

// Lexicographic position of x within its sphere as an exact integer.
Natural exact_rank0(const Word& x) {
    Natural r = 0;
    const auto base = static_cast<unsigned long>(x.alphabet().size());
    for (std::size_t i = 0; i < x.size(); ++i) r = r * base + x[i];
    return r;
}

Natural exact_sphere_size(const Alphabet& a, std::size_t n) {
    Natural s;
    mpz_ui_pow_ui(s.get_mpz_t(), a.size(), n);
    return s;
}

class UniformImpl final : public detail::EnsembleImpl {
public:
    explicit UniformImpl(std::size_t base) : base_(base) {}
    EnsembleKind kind() const override { return EnsembleKind::Uniform; }
    std::string describe() const override { return "uniform"; }
    Rational mass(const Word& x) const override {
        Rational r(Natural(1), exact_sphere_size(x.alphabet(), x.size()));
        r.canonicalize();
        return r;
    }
    std::optional<Rational> mu_star(const Word& x) const override {
        Rational r(exact_rank0(x), exact_sphere_size(x.alphabet(), x.size()));
        r.canonicalize();
        return r;
    }
    std::string computability() const override { return "Ptime (closed form)"; }

private:
    std::size_t base_;
};

class TableImpl final : public detail::EnsembleImpl {
public:
    // spheres_[n] holds (letters, mass, prefix mass before this entry) sorted by letters.
    struct Entry {
        std::string letters;
        Rational mass;
        Rational before;
    };

    explicit TableImpl(std::vector<std::vector<Entry>> spheres) : spheres_(std::move(spheres)) {}

    EnsembleKind kind() const override { return EnsembleKind::Table; }
    std::string describe() const override { return "table(n_max=" + std::to_string(spheres_.size() - 1) + ")"; }
    std::optional<std::size_t> max_sphere() const override { return spheres_.size() - 1; }

    Rational mass(const Word& x) const override {
        const auto& s = sphere(x.size());
        auto it = std::lower_bound(s.begin(), s.end(), x.letters(),
                                   [](const Entry& e, const std::string& l) { return e.letters < l; });
        if (it != s.end() && it->letters == x.letters()) return it->mass;
        return 0;
    }

    std::optional<Rational> mu_star(const Word& x) const override {
        const auto& s = sphere(x.size());
        auto it = std::lower_bound(s.begin(), s.end(), x.letters(),
                                   [](const Entry& e, const std::string& l) { return e.letters < l; });
        if (it == s.end()) return Rational(1);
        return it->before;
    }
    std::string computability() const override { return "finite table"; }

private:
    const std::vector<Entry>& sphere(std::size_t n) const {
        if (n >= spheres_.size())
            throw HorizonExceeded("table ensemble is defined up to sphere " + std::to_string(spheres_.size() - 1));
        return spheres_[n];
    }

    std::vector<std::vector<Entry>> spheres_;
};

class ClosedFormImpl final : public detail::EnsembleImpl {
public:
    ClosedFormImpl(std::string name, std::function<Rational(const Word&)> mass, std::function<Rational(const Word&)> star,
                   std::optional<std::size_t> max)
        : name_(std::move(name)), mass_(std::move(mass)), star_(std::move(star)), max_(max) {}
    EnsembleKind kind() const override { return EnsembleKind::ClosedForm; }
    std::string describe() const override { return name_; }
    std::optional<std::size_t> max_sphere() const override { return max_; }
    Rational mass(const Word& x) const override {
        guard(x);
        return mass_(x);
    }
    std::optional<Rational> mu_star(const Word& x) const override {
        if (!star_) return std::nullopt;
        guard(x);
        return star_(x);
    }
    std::string computability() const override { return "host rule"; }

private:
    void guard(const Word& x) const {
        if (max_ && x.size() > *max_)
            throw HorizonExceeded("ensemble '" + name_ + "' is defined up to sphere " + std::to_string(*max_));
    }
    std::string name_;
    std::function<Rational(const Word&)> mass_;
    std::function<Rational(const Word&)> star_;
    std::optional<std::size_t> max_;
};

class TransferredImpl final : public detail::EnsembleImpl {
public:
    TransferredImpl(Reduction f, SphericalEnsemble base) : f_(std::move(f)), base_(std::move(base)) {}
    EnsembleKind kind() const override { return EnsembleKind::Transferred; }
    std::string describe() const override { return "transfer(" + f_.name() + ", " + base_.describe() + ")"; }
    std::string computability() const override { return "enumeration of preimages"; }

    Rational mass(const Word& y) const override {
        const auto k = f_.source_size_for(y.size());
        if (!k) {
            Rational r(Natural(1), exact_sphere_size(y.alphabet(), y.size()));
            r.canonicalize();
            return r;
        }
        const auto& image = image_of(*k);
        auto it = image.find(y.letters());
        return it == image.end() ? Rational(0) : it->second;
    }

private:
    const std::unordered_map<std::string, Rational>& image_of(std::uint64_t k) const {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        check_enumerable(f_.source(), k);
        std::unordered_map<std::string, Rational> image;
        const auto m = f_.size_growth(k);
        for_each_in_sphere(f_.source(), k, [&](const Word& x) {
            Word y = f_.apply(x);
            if (y.size() != m)
                throw DomainError("reduction '" + f_.name() + "' is not size-invariant at '" + x.to_string() + "'");
            image[y.letters()] += base_.mass(x);
        });
        return cache_.emplace(k, std::move(image)).first->second;
    }

    Reduction f_;
    SphericalEnsemble base_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::uint64_t, std::unordered_map<std::string, Rational>> cache_;
};

class InducedImpl final : public detail::EnsembleImpl {
public:
    InducedImpl(SphericalEnsemble base, WordSet s) : base_(std::move(base)), s_(std::move(s)) {}
    EnsembleKind kind() const override { return EnsembleKind::Induced; }
    std::string describe() const override { return "induce(" + base_.describe() + ", " + s_.label + ")"; }
    std::optional<std::size_t> max_sphere() const override { return base_.max_sphere(); }
    std::string computability() const override {
        return s_.sphere_mass ? "closed-form denominator" : "enumerated denominator";
    }

    Rational mass(const Word& x) const override {
        const Rational d = denominator(x.size());
        if (d == 0) return base_.mass(x);
        if (!s_.contains(x)) return 0;
        Rational r = base_.mass(x) / d;
        return r;
    }

private:
    Rational denominator(std::size_t n) const {
        if (s_.sphere_mass)
            if (auto d = s_.sphere_mass(base_, n)) return *d;
        std::lock_guard lock(mutex_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        check_enumerable(base_.alphabet(), n);
        Rational d = 0;
        for_each_in_sphere(base_.alphabet(), n, [&](const Word& x) {
            if (s_.contains(x)) d += base_.mass(x);
        });
        cache_.emplace(n, d);
        return d;
    }

    SphericalEnsemble base_;
    WordSet s_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::size_t, Rational> cache_;
};

}  // namespace

SphericalEnsemble::SphericalEnsemble(Alphabet alphabet, std::shared_ptr<const detail::EnsembleImpl> impl)
    : alphabet_(std::move(alphabet)), impl_(std::move(impl)) {
    if (!impl_) throw DomainError("ensemble without an implementation");
}

SphericalEnsemble SphericalEnsemble::uniform(Alphabet alphabet) {
    auto base = alphabet.size();
    return SphericalEnsemble(std::move(alphabet), std::make_shared<UniformImpl>(base));
}

SphericalEnsemble SphericalEnsemble::table(Alphabet alphabet, const std::map<Word, Rational>& entries) {
    std::size_t n_max = 0;
    for (const auto& [w, q] : entries) {
        if (!(w.alphabet() == alphabet)) throw AlphabetMismatch("table entry '" + w.to_string() + "' on a foreign alphabet");
        if (q < 0 || q > 1) throw DomainError("table mass of '" + w.to_string() + "' outside [0,1]");
        n_max = std::max(n_max, w.size());
    }
    std::vector<std::vector<TableImpl::Entry>> spheres(n_max + 1);
    for (const auto& [w, q] : entries)
        if (q != 0) spheres[w.size()].push_back({w.letters(), q, 0});
    if (spheres[0].empty() && !entries.contains(Word(alphabet))) spheres[0].push_back({"", 1, 0});
    for (std::size_t n = 0; n <= n_max; ++n) {
        auto& s = spheres[n];
        std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.letters < b.letters; });
        Rational acc = 0;
        for (auto& e : s) {
            e.before = acc;
            acc += e.mass;
        }
        if (acc != 1)
            throw DomainError("table sphere " + std::to_string(n) + " sums to " + to_string(acc) + ", not 1");
    }
    return SphericalEnsemble(std::move(alphabet), std::make_shared<TableImpl>(std::move(spheres)));
}

SphericalEnsemble SphericalEnsemble::closed_form(std::string name, Alphabet alphabet,
                                                 std::function<Rational(const Word&)> mass,
                                                 std::function<Rational(const Word&)> mu_star,
                                                 std::optional<std::size_t> max_sphere) {
    return SphericalEnsemble(std::move(alphabet), std::make_shared<ClosedFormImpl>(std::move(name), std::move(mass),
                                                                                  std::move(mu_star), max_sphere));
}

Rational SphericalEnsemble::mass(const Word& x) const {
    if (!(x.alphabet() == alphabet_)) throw AlphabetMismatch("word '" + x.to_string() + "' is not over the ensemble's alphabet");
    return impl_->mass(x);
}

std::optional<Rational> SphericalEnsemble::closed_mu_star(const Word& x) const {
    if (!(x.alphabet() == alphabet_)) throw AlphabetMismatch("word '" + x.to_string() + "' is not over the ensemble's alphabet");
    return impl_->mu_star(x);
}

Rational mass(const SphericalEnsemble& mu, const Word& x) { return mu.mass(x); }

Rational sphere_sum(const SphericalEnsemble& mu, std::size_t n) {
    check_enumerable(mu.alphabet(), n);
    Rational total = 0;
    for_each_in_sphere(mu.alphabet(), n, [&](const Word& x) { total += mu.mass(x); });
    return total;
}

std::vector<Rational> sphere_masses(const SphericalEnsemble& mu, std::size_t n) {
    check_enumerable(mu.alphabet(), n);
    std::vector<Rational> out;
    for_each_in_sphere(mu.alphabet(), n, [&](const Word& x) { out.push_back(mu.mass(x)); });
    return out;
}

Rational mu_star(const SphericalEnsemble& mu, const Word& x) {
    if (auto closed = mu.closed_mu_star(x)) return *closed;
    check_enumerable(mu.alphabet(), x.size());
    Rational total = 0;
    std::string letters(x.size(), 0);
    // Lex order within a sphere is byte order on the index strings.
    for (Word y(mu.alphabet(), letters); y.letters() < x.letters(); y = lex_successor_in_sphere(y)) total += mu.mass(y);
    return total;
}

Rational hat_mu(const SphericalEnsemble& mu, const Word& x) {
    if (mu.alphabet().size() != 2) throw DomainError("hat_mu is defined for binary alphabets only");
    if (!(x.alphabet() == mu.alphabet())) throw AlphabetMismatch("word is not over the ensemble's alphabet");
    if (is_lex_max(x)) return 1;
    return mu_star(mu, lex_successor_in_sphere(x));
}

SphericalEnsemble transfer(const Reduction& f, const SphericalEnsemble& mu) {
    if (!(f.source() == mu.alphabet())) throw AlphabetMismatch("transfer: reduction source differs from the ensemble alphabet");
    if (!f.has_size_growth()) throw DomainError("transfer needs a size-invariant reduction with declared size growth");
    return SphericalEnsemble(f.target(), std::make_shared<TransferredImpl>(f, mu));
}

SphericalEnsemble induce(const SphericalEnsemble& mu, const WordSet& s) {
    return SphericalEnsemble(mu.alphabet(), std::make_shared<InducedImpl>(mu, s));
}

CheckReport verify_transfer(const Reduction& f, const SphericalEnsemble& mu, const SphericalEnsemble& nu,
                            std::size_t n_max) {
    CheckReport report;
    report.property = "transfer";
    report.horizon = n_max;
    // Image masses keyed by target sphere, built by enumerating source spheres
    // until every image is longer than n_max.
    std::map<std::size_t, std::unordered_map<std::string, Rational>> image;
    std::set<std::size_t> achieved;
    for (std::size_t k = 0;; ++k) {
        try {
            check_enumerable(f.source(), k);
        } catch (const HorizonExceeded&) {
            report.notes.push_back("source enumeration stopped before sphere " + std::to_string(k));
            break;
        }
        std::size_t shortest = SIZE_MAX;
        std::optional<std::size_t> len;
        bool invariant = true;
        for_each_in_sphere(f.source(), k, [&](const Word& x) {
            Word y = f.apply(x);
            shortest = std::min(shortest, y.size());
            if (len && *len != y.size()) invariant = false;
            len = y.size();
            if (y.size() <= n_max) image[y.size()][y.letters()] += mu.mass(x);
        });
        if (!invariant) {
            report.add("sphere " + std::to_string(k), "constant image length", "mixed lengths", "not size-invariant");
            return report;
        }
        if (*len <= n_max) achieved.insert(*len);
        if (shortest > n_max) break;
    }
    const auto target = f.target();
    for (std::size_t m = 0; m <= n_max; ++m) {
        const bool hit = achieved.contains(m);
        auto compare = [&](const Word& y) {
            Rational expected;
            if (hit) {
                auto it = image[m].find(y.letters());
                expected = it == image[m].end() ? Rational(0) : it->second;
            } else {
                expected = Rational(Natural(1), exact_sphere_size(target, m));
                expected.canonicalize();
            }
            const Rational actual = nu.mass(y);
            ++report.checked;
            if (actual != expected) report.add(y.to_string(), to_string(expected), to_string(actual));
        };
        std::uint64_t size = 0;
        try {
            size = sphere_size(target, m);
        } catch (const DomainError&) {
            size = UINT64_MAX;
        }
        if (size <= kMaxEnumeratedSphere) {
            for_each_in_sphere(target, m, compare);
            continue;
        }
        if (!hit) {
            report.notes.push_back("sphere " + std::to_string(m) + " skipped: not achieved and too large to enumerate");
            continue;
        }
        // Too large to enumerate: check the image, then confirm it carries all of ν_m.
        Rational on_image = 0;
        for (const auto& [letters, q] : image[m]) {
            Word y(target, letters);
            compare(y);
            on_image += nu.mass(y);
        }
        if (on_image != 1) report.add("sphere " + std::to_string(m), "1", to_string(on_image), "mass of ν off the image");
        report.notes.push_back("sphere " + std::to_string(m) + " checked on the image only");
    }
    return report;
}

CheckReport verify_induced(const SphericalEnsemble& mu, const WordSet& s, const SphericalEnsemble& induced,
                           std::size_t n_max) {
    CheckReport report;
    report.property = "induced";
    report.horizon = n_max;
    for (std::size_t n = 0; n <= n_max; ++n) {
        check_enumerable(mu.alphabet(), n);
        Rational denom = 0;
        for_each_in_sphere(mu.alphabet(), n, [&](const Word& x) {
            if (s.contains(x)) denom += mu.mass(x);
        });
        for_each_in_sphere(mu.alphabet(), n, [&](const Word& x) {
            Rational expected = denom == 0 ? mu.mass(x) : (s.contains(x) ? Rational(mu.mass(x) / denom) : Rational(0));
            const Rational actual = induced.mass(x);
            ++report.checked;
            if (actual != expected) report.add(x.to_string(), to_string(expected), to_string(actual));
        });
    }
    return report;
}

}  // namespace genlab
