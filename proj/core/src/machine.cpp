#include "genlab/machine.hpp"

#include "genlab/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace genlab {

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
    std::size_t h = std::hash<std::string>{}(c.left);
    h ^= std::hash<std::string>{}(c.right) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint32_t>{}(c.state) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::string to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "Yes";
        case Answer::No: return "No";
        case Answer::DontKnow: return "DontKnow";
    }
    return "?";
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Halted: return "Halted";
        case Outcome::Broke: return "Broke";
        case Outcome::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

Answer decode_answer(const AnswerConvention& conv, const Configuration& c) {
    if (c.state != conv.final_state) throw DomainError("configuration is not in the final state");
    if (!c.left.empty()) throw DomainError("answer requires the head at the left end (empty left tape)");
    const auto yes = static_cast<char>(conv.yes_symbol);
    const auto no = static_cast<char>(conv.no_symbol);
    if (!c.right.empty() && c.right[0] == no) return Answer::DontKnow;
    if (c.right.size() >= 2 && c.right[0] == yes) {
        if (c.right[1] == yes) return Answer::Yes;
        if (c.right[1] == no) return Answer::No;
    }
    throw DomainError("tape carries no answer pattern");
}

RunResult RunResult::halted_at(Configuration c, std::uint64_t steps, AnswerConvention conv) {
    RunResult r;
    r.outcome = Outcome::Halted;
    r.steps = steps;
    r.final = std::move(c);
    r.convention = conv;
    return r;
}

RunResult RunResult::broke(std::uint64_t steps) {
    RunResult r;
    r.outcome = Outcome::Broke;
    r.steps = steps;
    return r;
}

RunResult RunResult::exhausted(std::uint64_t budget) {
    RunResult r;
    r.outcome = Outcome::BudgetExhausted;
    r.steps = budget;
    return r;
}

std::optional<Answer> RunResult::answer() const {
    if (!halted() || !final) return std::nullopt;
    try {
        return decode_answer(convention, *final);
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

namespace {

Move parse_move(const std::string& s) {
    if (s == "L") return Move::Left;
    if (s == "R") return Move::Right;
    throw ParseError("move must be L or R, got '" + s + "'");
}

std::uint32_t state_index(const std::vector<std::string>& states, const std::string& name) {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) throw ParseError("unknown state '" + name + "'");
    return static_cast<std::uint32_t>(it - states.begin());
}

}  // namespace

TuringMachine::TuringMachine(const MachineSpec& spec)
    : name_(spec.name), states_(spec.states), alphabet_(spec.tape_alphabet), blank_(spec.blank), tape_(spec.tape) {
    if (states_.empty()) throw ParseError("machine has no states");
    if (std::set<std::string>(states_.begin(), states_.end()).size() != states_.size())
        throw ParseError("duplicate state names");
    if (alphabet_.size() < 2) throw ParseError("tape alphabet needs at least two symbols");
    if (alphabet_.contains(blank_)) throw ParseError("blank symbol must not belong to the tape alphabet");
    initial_ = state_index(states_, spec.initial);
    final_ = state_index(states_, spec.final_state);
    yes_ = spec.yes_symbol.empty() ? Symbol{1} : alphabet_.index_of(spec.yes_symbol);
    no_ = spec.no_symbol.empty() ? Symbol{0} : alphabet_.index_of(spec.no_symbol);
    if (yes_ == no_) throw ParseError("yes and no symbols must differ");
    for (const auto& t : spec.delta) {
        Transition tr;
        tr.from = state_index(states_, t[0]);
        tr.read = t[1] == blank_ ? kBlank : static_cast<char>(alphabet_.index_of(t[1]));
        tr.to = state_index(states_, t[2]);
        if (t[3] == blank_) throw ParseError("transitions may not write the blank");
        tr.write = alphabet_.index_of(t[3]);
        tr.move = parse_move(t[4]);
        delta_.push_back(tr);
    }
    index_transitions();
}

TuringMachine::TuringMachine(std::string name, std::uint32_t state_count, std::uint32_t initial,
                             std::uint32_t final_state, Alphabet tape_alphabet, std::vector<Transition> delta,
                             TapeMode tape, Symbol yes, Symbol no)
    : name_(std::move(name)), initial_(initial), final_(final_state), alphabet_(std::move(tape_alphabet)),
      tape_(tape), yes_(yes), no_(no), delta_(std::move(delta)) {
    if (state_count == 0 || initial >= state_count || final_state >= state_count)
        throw ConstructionError("state index out of range");
    if (alphabet_.size() < 2) throw ConstructionError("tape alphabet needs at least two symbols");
    if (yes_ >= alphabet_.size() || no_ >= alphabet_.size() || yes_ == no_)
        throw ConstructionError("invalid yes/no symbols");
    for (std::uint32_t i = 0; i < state_count; ++i) states_.push_back("q" + std::to_string(i));
    for (const auto& t : delta_) {
        if (t.from >= state_count || t.to >= state_count) throw ConstructionError("transition state out of range");
        if (t.read != kBlank && static_cast<Symbol>(t.read) >= alphabet_.size())
            throw ConstructionError("transition reads an unknown symbol");
        if (t.write >= alphabet_.size()) throw ConstructionError("transition writes an unknown symbol");
    }
    index_transitions();
}

void TuringMachine::index_transitions() {
    std::sort(delta_.begin(), delta_.end());
    delta_.erase(std::unique(delta_.begin(), delta_.end()), delta_.end());
    const std::size_t width = alphabet_.size() + 1;
    index_.assign(states_.size() * width, {0, 0});
    auto slot = [&](const Transition& t) {
        const std::size_t sym = t.read == kBlank ? alphabet_.size() : static_cast<Symbol>(t.read);
        return t.from * width + sym;
    };
    // Sorted by (from, read): tuples sharing a slot are contiguous.
    for (std::uint32_t i = 0; i < delta_.size(); ++i) {
        auto& range = index_[slot(delta_[i])];
        if (range.first == range.second) range = {i, i + 1};
        else range.second = i + 1;
    }
    bool total = true;
    bool at_most_one = true;
    for (std::size_t slot_index = 0; slot_index < index_.size(); ++slot_index) {
        const auto [b, e] = index_[slot_index];
        // The final state never moves, so it needs no tuples to be total.
        if (e - b != 1 && slot_index / width != final_) total = false;
        if (e - b > 1) at_most_one = false;
    }
    determinism_ = !at_most_one ? Determinism::Nondeterministic : total ? Determinism::Total : Determinism::Partial;
}

Configuration TuringMachine::initial_configuration(const Word& input) const {
    if (!(input.alphabet() == alphabet_)) throw AlphabetMismatch("input word is not over the tape alphabet");
    return Configuration{initial_, {}, input.letters()};
}

Configuration TuringMachine::apply(const Configuration& c, const Transition& t) const {
    Configuration n;
    n.state = t.to;
    n.left = c.left;
    std::string right = c.right.empty() ? std::string(1, static_cast<char>(t.write))
                                        : static_cast<char>(t.write) + c.right.substr(1);
    if (t.move == Move::Right) {
        n.left.push_back(right.front());
        right.erase(0, 1);
    } else if (!n.left.empty()) {
        right.insert(right.begin(), n.left.back());
        n.left.pop_back();
    } else if (tape_ == TapeMode::TwoWay) {
        right.insert(right.begin(), kBlank);
    }
    n.right = std::move(right);
    return n;
}

std::vector<Configuration> TuringMachine::step(const Configuration& c) const {
    std::vector<Configuration> out;
    const char head = c.head();
    const std::size_t sym = head == kBlank ? alphabet_.size() : static_cast<Symbol>(head);
    if (c.state >= states_.size()) return out;
    const auto [b, e] = index_[c.state * (alphabet_.size() + 1) + sym];
    for (auto i = b; i < e; ++i) out.push_back(apply(c, delta_[i]));
    return out;
}

RunResult TuringMachine::run_deterministic(const Word& input, std::uint64_t budget) const {
    if (!deterministic()) throw DomainError("run_deterministic called on a nondeterministic machine");
    Configuration c = initial_configuration(input);
    for (std::uint64_t steps = 0;; ++steps) {
        if (c.state == final_) return RunResult::halted_at(std::move(c), steps, convention());
        if (steps == budget) return RunResult::exhausted(budget);
        auto next = step(c);
        if (next.empty()) return RunResult::broke(steps);
        c = std::move(next.front());
    }
}

RunResult TuringMachine::search(const Word& input, std::uint64_t budget) const {
    // Breadth-first over the configuration tree. A configuration first seen at
    // depth d has the largest residual budget it can ever have, so later
    // occurrences are pruned without changing bounded-step semantics.
    std::vector<Configuration> frontier{initial_configuration(input)};
    std::unordered_set<Configuration, ConfigurationHash> visited(frontier.begin(), frontier.end());
    bool pruned = false;
    for (std::uint64_t depth = 0;; ++depth) {
        for (const auto& c : frontier)
            if (c.state == final_) return RunResult::halted_at(c, depth, convention());
        if (depth == budget) return RunResult::exhausted(budget);
        std::vector<Configuration> next;
        for (const auto& c : frontier) {
            for (auto& s : step(c)) {
                if (visited.insert(s).second) next.push_back(std::move(s));
                else pruned = true;
            }
        }
        if (next.empty()) return pruned ? RunResult::exhausted(budget) : RunResult::broke(depth);
        frontier = std::move(next);
    }
}

RunResult TuringMachine::evaluate(const Word& input, std::uint64_t budget) const {
    return deterministic() ? run_deterministic(input, budget) : search(input, budget);
}

std::string TuringMachine::render(const Configuration& c) const {
    auto show = [&](const std::string& tape) {
        std::string out;
        for (char ch : tape) {
            if (!out.empty() && !alphabet_.single_char()) out += ',';
            out += ch == kBlank ? blank_ : alphabet_.symbol(static_cast<Symbol>(ch));
        }
        return out;
    };
    return "(" + states_.at(c.state) + ", " + show(c.left) + ", " + show(c.right) + ")";
}

MachineSpec TuringMachine::to_spec() const {
    MachineSpec spec;
    spec.name = name_;
    spec.states = states_;
    spec.initial = states_[initial_];
    spec.final_state = states_[final_];
    spec.tape_alphabet = alphabet_.symbols();
    spec.blank = blank_;
    spec.tape = tape_;
    spec.yes_symbol = alphabet_.symbol(yes_);
    spec.no_symbol = alphabet_.symbol(no_);
    for (const auto& t : delta_) {
        spec.delta.push_back({states_[t.from], t.read == kBlank ? blank_ : alphabet_.symbol(static_cast<Symbol>(t.read)),
                              states_[t.to], alphabet_.symbol(t.write), t.move == Move::Left ? "L" : "R"});
    }
    return spec;
}

VirtualMachine::VirtualMachine(std::string name, Alphabet alphabet, Evaluator evaluator,
                               std::optional<Polynomial> declared_guard)
    : name_(std::move(name)), alphabet_(std::move(alphabet)), evaluator_(std::move(evaluator)),
      guard_(std::move(declared_guard)) {}

RunResult VirtualMachine::evaluate(const Word& input, std::uint64_t budget) const {
    if (!(input.alphabet() == alphabet_)) throw AlphabetMismatch("input word is not over the machine alphabet");
    RunResult r = evaluator_(input, budget);
    if (r.halted() && r.steps > budget) throw Error("virtual machine '" + name_ + "' exceeded its budget");
    return r;
}

bool halts_within(const Machine& m, const Word& w, std::uint64_t n) { return m.evaluate(w, n).halted(); }

std::optional<std::uint64_t> min_halting_steps(const Machine& m, const Word& w, std::uint64_t budget) {
    auto r = m.evaluate(w, budget);
    if (!r.halted()) return std::nullopt;
    return r.steps;
}

}  // namespace genlab
