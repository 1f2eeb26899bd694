#include "genlab/bhp.hpp"

#include "genlab/errors.hpp"

#include <algorithm>

namespace genlab {

namespace {

constexpr std::uint32_t kMagic = 0xB4A17ED5;

void put(std::string& bits, std::uint64_t v, int width) {
    for (int i = width - 1; i >= 0; --i) bits.push_back(((v >> i) & 1) ? '1' : '0');
}

std::uint64_t take(const std::string& bits, std::size_t& pos, int width) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | (bits[pos++] == '1' ? 1 : 0);
    return v;
}

std::string header(bool registry) {
    std::string bits = "1";
    put(bits, kMagic, 32);
    bits.push_back(registry ? '1' : '0');
    return bits;
}

constexpr std::size_t kHeaderBits = 34;
constexpr std::size_t kTableFixedBits = 8 + 8 + 8 + 1 + 1 + 1 + 16;
constexpr std::size_t kTransitionBits = 8 + 2 + 8 + 1 + 1;

}  // namespace

Natural gamma(const TuringMachine& m) {
    if (!(m.input_alphabet() == Alphabet::binary()))
        throw DomainError("machine '" + m.name() + "' is not over {0,1}");
    if (m.state_count() > 255) throw DomainError("machine codes support at most 255 states");
    if (m.delta().size() > 0xFFFF) throw DomainError("machine codes support at most 65535 transitions");
    std::string bits = header(false);
    put(bits, m.state_count(), 8);
    put(bits, m.initial_state(), 8);
    put(bits, m.final_state(), 8);
    put(bits, m.tape_mode() == TapeMode::OneWay ? 1 : 0, 1);
    put(bits, m.yes_symbol(), 1);
    put(bits, m.no_symbol(), 1);
    put(bits, m.delta().size(), 16);
    for (const auto& t : m.delta()) {
        put(bits, t.from, 8);
        put(bits, t.read == kBlank ? 2 : static_cast<std::uint64_t>(t.read), 2);
        put(bits, t.to, 8);
        put(bits, t.write, 1);
        put(bits, t.move == Move::Right ? 1 : 0, 1);
    }
    return Natural(bits, 2);
}

Word machine_code(const TuringMachine& m) { return numeral(gamma(m)); }

Word registry_code(std::uint16_t index) {
    std::string bits = header(true);
    put(bits, index, 16);
    return numeral(Natural(bits, 2));
}

std::optional<DecodedMachine> decode_gamma(const Natural& g) {
    if (g <= 0) return std::nullopt;
    const std::string bits = g.get_str(2);
    if (bits.size() < kHeaderBits) return std::nullopt;
    std::size_t pos = 1;
    if (take(bits, pos, 32) != kMagic) return std::nullopt;
    const bool registry = take(bits, pos, 1) == 1;
    if (registry) {
        if (bits.size() != kHeaderBits + 16) return std::nullopt;
        return DecodedMachine{std::nullopt, static_cast<std::uint16_t>(take(bits, pos, 16))};
    }
    if (bits.size() < kHeaderBits + kTableFixedBits) return std::nullopt;
    const auto states = static_cast<std::uint32_t>(take(bits, pos, 8));
    const auto initial = static_cast<std::uint32_t>(take(bits, pos, 8));
    const auto final_state = static_cast<std::uint32_t>(take(bits, pos, 8));
    const auto tape = take(bits, pos, 1) ? TapeMode::OneWay : TapeMode::TwoWay;
    const auto yes = static_cast<Symbol>(take(bits, pos, 1));
    const auto no = static_cast<Symbol>(take(bits, pos, 1));
    const auto count = take(bits, pos, 16);
    if (bits.size() != kHeaderBits + kTableFixedBits + count * kTransitionBits) return std::nullopt;
    std::vector<Transition> delta;
    for (std::uint64_t i = 0; i < count; ++i) {
        Transition t;
        t.from = static_cast<std::uint32_t>(take(bits, pos, 8));
        const auto read = take(bits, pos, 2);
        if (read == 3) return std::nullopt;
        t.read = read == 2 ? kBlank : static_cast<char>(read);
        t.to = static_cast<std::uint32_t>(take(bits, pos, 8));
        t.write = static_cast<Symbol>(take(bits, pos, 1));
        t.move = take(bits, pos, 1) ? Move::Right : Move::Left;
        delta.push_back(t);
    }
    try {
        TuringMachine m("gamma", states, initial, final_state, Alphabet::binary(), std::move(delta), tape, yes, no);
        // Only the canonical (sorted, duplicate-free) serialization is a code.
        if (gamma(m) != g) return std::nullopt;
        return DecodedMachine{std::move(m), std::nullopt};
    } catch (const Error&) {
        return std::nullopt;
    }
}

TuringMachine decode_machine(const Word& mbar) {
    auto d = decode_gamma(decode_numeral(mbar));
    if (!d) throw ParseError("'" + mbar.to_string() + "' is not a machine code");
    if (!d->table) throw ParseError("machine code refers to a registry entry, not a table");
    return *d->table;
}

namespace {

// A machine resolved from a code: either decoded or looked up in the registry.
MachinePtr resolve(const DecodedMachine& d, const std::vector<MachinePtr>& registry) {
    if (d.table) return std::make_shared<TuringMachine>(*d.table);
    if (*d.registry_index < registry.size()) return registry[*d.registry_index];
    return nullptr;
}

RunResult run_universal(const std::vector<MachinePtr>& registry, const Word& input, std::uint64_t budget) {
    const auto never = RunResult::exhausted(budget);
    auto first = read_numeral(input, 0);
    if (!first) return never;
    const std::size_t sep = first->second;

    if (auto d = decode_gamma(first->first)) {
        // Form 1: M̄ 0 w.
        MachinePtr m = resolve(*d, registry);
        if (!m || !(m->input_alphabet() == Alphabet::binary())) return never;
        RunResult r = m->evaluate(input.substr(sep + 1), budget);
        return r.halted() ? r : never;
    }

    // Form 2: n̄ 0 M̄ 0 x″.
    const Natural& n_big = first->first;
    const std::uint64_t overhead_base = input.size();
    if (n_big > Natural(std::to_string(budget))) return never;
    const auto n = n_big.get_ui();
    if (overhead_base + n > budget) return never;
    auto second = read_numeral(input, sep + 1);
    if (!second) return never;
    auto d = decode_gamma(second->first);
    if (!d) return never;
    MachinePtr m = resolve(*d, registry);
    if (!m || !(m->input_alphabet() == Alphabet::binary())) return never;
    auto x = recover_from_x_double_prime(dbh_nu(), n, input.substr(second->second + 1));
    if (!x) return never;
    auto inst = try_decode_instance(*x);
    if (!inst) return never;
    const std::uint64_t overhead = overhead_base + n;
    RunResult r = m->evaluate(inst->w, std::min<std::uint64_t>(inst->n, budget - overhead));
    if (!r.halted()) return never;
    r.steps += overhead;
    return r;
}

}  // namespace

MachinePtr universal_machine(std::vector<MachinePtr> registry) {
    auto eval = [registry = std::move(registry)](const Word& input, std::uint64_t budget) {
        try {
            return run_universal(registry, input, budget);
        } catch (const HorizonExceeded&) {
            return RunResult::exhausted(budget);
        }
    };
    return std::make_shared<VirtualMachine>("U", Alphabet::binary(), eval);
}

}  // namespace genlab
