#pragma once

#include "genlab/polynomial.hpp"
#include "genlab/words.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace genlab {

/// Tape code of the blank symbol. Every other tape code is a symbol index.
inline constexpr char kBlank = static_cast<char>(0xFF);

enum class Move : std::uint8_t { Left, Right };

/// `TwoWay` grows the tape leftward with blanks; `OneWay` keeps the head on
/// the leftmost cell when it tries to move left from it.
enum class TapeMode : std::uint8_t { TwoWay, OneWay };

/// `Total`: exactly one tuple for every (state, symbol) pair. `Partial`: at
/// most one tuple, some pairs missing. Otherwise `Nondeterministic`.
enum class Determinism : std::uint8_t { Total, Partial, Nondeterministic };

struct Transition {
    std::uint32_t from = 0;
    char read = 0;  // symbol index or kBlank
    std::uint32_t to = 0;
    Symbol write = 0;
    Move move = Move::Right;

    auto operator<=>(const Transition&) const = default;
};

/// Snapshot (q, w, u): `left` is the tape left of the head, `right` starts at
/// the head cell. Outer blanks are trimmed, so the head reads blank when
/// `right` is empty. `right[0]` is kBlank only when the head sits on an
/// unvisited cell directly left of written content (two-way tapes).
struct Configuration {
    std::uint32_t state = 0;
    std::string left;
    std::string right;

    char head() const { return right.empty() ? kBlank : right.front(); }
    bool operator==(const Configuration&) const = default;
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept;
};

enum class Answer : std::uint8_t { Yes, No, DontKnow };

std::string to_string(Answer a);

/// Which state is final and which two symbols play the yes/no roles.
struct AnswerConvention {
    std::uint32_t final_state = 1;
    Symbol yes_symbol = 1;
    Symbol no_symbol = 0;
};

/// Decodes the answer written on a halted configuration (q1, ε, w):
/// w = yes·yes… → Yes, yes·no… → No, no… → DontKnow. Throws DomainError for
/// non-final states, a nonempty left tape, or a tape matching no pattern.
Answer decode_answer(const AnswerConvention& convention, const Configuration& c);

enum class Outcome : std::uint8_t { Halted, Broke, BudgetExhausted };

/// Result of a bounded run. For nondeterministic machines `steps` of a Halted
/// result is the length of a shortest halting computation.
struct RunResult {
    Outcome outcome = Outcome::BudgetExhausted;
    std::uint64_t steps = 0;
    std::optional<Configuration> final;
    AnswerConvention convention;

    bool halted() const { return outcome == Outcome::Halted; }

    static RunResult halted_at(Configuration c, std::uint64_t steps, AnswerConvention conv);
    static RunResult broke(std::uint64_t steps);
    static RunResult exhausted(std::uint64_t budget);

    /// Decoded answer of a halted run; nullopt when not halted or when the
    /// tape carries no recognizable answer.
    std::optional<Answer> answer() const;
};

std::string to_string(Outcome o);

/// Anything that can be run on a word with a step budget: tape machines and
/// interpreter-backed machines share this interface.
class Machine {
public:
    virtual ~Machine() = default;

    virtual const std::string& name() const = 0;
    virtual const Alphabet& input_alphabet() const = 0;

    /// Runs from (q0, ε, input). Must be deterministic in (input, budget) and
    /// monotone: a Halted result at budget b is returned unchanged for every
    /// budget >= b.
    virtual RunResult evaluate(const Word& input, std::uint64_t budget) const = 0;
};

using MachinePtr = std::shared_ptr<const Machine>;

/// Textual description of a one-tape machine, mirroring the JSON file format.
struct MachineSpec {
    std::string name;
    std::vector<std::string> states;
    std::string initial;
    std::string final_state;
    std::vector<std::string> tape_alphabet;
    std::string blank = "_";
    TapeMode tape = TapeMode::TwoWay;
    std::string yes_symbol;
    std::string no_symbol;
    std::vector<std::array<std::string, 5>> delta;
};

/// One-tape (non)deterministic Turing machine ⟨Q, Σ, q0, q1, δ⟩.
class TuringMachine final : public Machine {
public:
    explicit TuringMachine(const MachineSpec& spec);

    /// Index-level constructor. State names become "q0".."q{k-1}".
    TuringMachine(std::string name, std::uint32_t state_count, std::uint32_t initial,
                  std::uint32_t final_state, Alphabet tape_alphabet, std::vector<Transition> delta,
                  TapeMode tape = TapeMode::TwoWay, Symbol yes = 1, Symbol no = 0);

    const std::string& name() const override { return name_; }
    const Alphabet& input_alphabet() const override { return alphabet_; }
    RunResult evaluate(const Word& input, std::uint64_t budget) const override;

    std::uint32_t state_count() const { return static_cast<std::uint32_t>(states_.size()); }
    const std::vector<std::string>& states() const { return states_; }
    std::uint32_t initial_state() const { return initial_; }
    std::uint32_t final_state() const { return final_; }
    const std::string& blank() const { return blank_; }
    TapeMode tape_mode() const { return tape_; }
    Determinism determinism() const { return determinism_; }
    bool deterministic() const { return determinism_ != Determinism::Nondeterministic; }
    const std::vector<Transition>& delta() const { return delta_; }
    AnswerConvention convention() const { return {final_, yes_, no_}; }
    Symbol yes_symbol() const { return yes_; }
    Symbol no_symbol() const { return no_; }

    Configuration initial_configuration(const Word& input) const;

    /// All configurations reachable in one step; empty iff the machine breaks.
    std::vector<Configuration> step(const Configuration& c) const;

    /// Direct simulation; throws DomainError for nondeterministic machines.
    RunResult run_deterministic(const Word& input, std::uint64_t budget) const;

    /// Human-readable "(q, left, right)" with the blank name substituted.
    std::string render(const Configuration& c) const;

    MachineSpec to_spec() const;

private:
    void index_transitions();
    Configuration apply(const Configuration& c, const Transition& t) const;
    RunResult search(const Word& input, std::uint64_t budget) const;

    std::string name_;
    std::vector<std::string> states_;
    std::uint32_t initial_ = 0;
    std::uint32_t final_ = 1;
    Alphabet alphabet_;
    std::string blank_ = "_";
    TapeMode tape_ = TapeMode::TwoWay;
    Symbol yes_ = 1;
    Symbol no_ = 0;
    std::vector<Transition> delta_;
    Determinism determinism_ = Determinism::Total;
    // (state * (|Σ|+1) + symbol) -> [begin, end) into delta_
    std::vector<std::pair<std::uint32_t, std::uint32_t>> index_;
};

/// Interpreter-backed machine. The evaluator must honour the Machine
/// contract (determinism and budget monotonicity); `declared_guard`, when
/// present, bounds the length of every halting run by a polynomial in |input|.
class VirtualMachine final : public Machine {
public:
    using Evaluator = std::function<RunResult(const Word&, std::uint64_t)>;

    VirtualMachine(std::string name, Alphabet alphabet, Evaluator evaluator,
                   std::optional<Polynomial> declared_guard = std::nullopt);

    const std::string& name() const override { return name_; }
    const Alphabet& input_alphabet() const override { return alphabet_; }
    RunResult evaluate(const Word& input, std::uint64_t budget) const override;
    const std::optional<Polynomial>& declared_guard() const { return guard_; }

private:
    std::string name_;
    Alphabet alphabet_;
    Evaluator evaluator_;
    std::optional<Polynomial> guard_;
};

/// True iff some computation from (q0, ε, w) reaches the final state within n steps.
bool halts_within(const Machine& m, const Word& w, std::uint64_t n);

/// Least n <= budget with halts_within(m, w, n).
std::optional<std::uint64_t> min_halting_steps(const Machine& m, const Word& w, std::uint64_t budget);

}  // namespace genlab
