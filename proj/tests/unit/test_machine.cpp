#include "genlab/errors.hpp"
#include "genlab/machine.hpp"
#include "genlab/machine_io.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace genlab;

namespace {

std::shared_ptr<const TuringMachine> corpus(const std::string& name) {
    return load_machine(std::string(GENLAB_CORPUS_DIR) + "/machines/" + name + ".json");
}

Word b(const char* s) { return Word::binary(s); }

// Oracle: plain depth-first enumeration of every computation path, without
// the visited-set pruning used by the library's search.
std::optional<std::uint64_t> min_halt_dfs(const TuringMachine& m, const Configuration& c, std::uint64_t depth,
                                          std::uint64_t budget) {
    if (c.state == m.final_state()) return depth;
    if (depth == budget) return std::nullopt;
    std::optional<std::uint64_t> best;
    for (const auto& next : m.step(c)) {
        auto r = min_halt_dfs(m, next, depth + 1, budget);
        if (r && (!best || *r < *best)) best = r;
    }
    return best;
}

TuringMachine random_ntm(std::mt19937_64& rng) {
    const std::uint32_t states = 2 + rng() % 3;
    std::vector<Transition> delta;
    const int count = 2 + static_cast<int>(rng() % 8);
    for (int i = 0; i < count; ++i) {
        Transition t;
        t.from = static_cast<std::uint32_t>(rng() % states);
        const auto r = rng() % 3;
        t.read = r == 2 ? kBlank : static_cast<char>(r);
        t.to = static_cast<std::uint32_t>(rng() % states);
        t.write = static_cast<Symbol>(rng() % 2);
        t.move = rng() % 2 ? Move::Right : Move::Left;
        delta.push_back(t);
    }
    const auto tape = rng() % 2 ? TapeMode::OneWay : TapeMode::TwoWay;
    return TuringMachine("rand", states, 0, 1, Alphabet::binary(), delta, tape);
}

}  // namespace

TEST(Machine, Halt1HaltsInOneStep) {
    auto m = corpus("halt1");
    EXPECT_EQ(m->determinism(), Determinism::Total);
    const auto r = m->evaluate(b("0"), 10);
    ASSERT_TRUE(r.halted());
    EXPECT_EQ(r.steps, 1u);
}

TEST(Machine, LoopExhaustsEveryBudget) {
    auto m = corpus("loop");
    for (std::uint64_t budget : {0, 1, 5, 100}) {
        const auto r = m->evaluate(b("0"), budget);
        EXPECT_EQ(r.outcome, Outcome::BudgetExhausted);
        EXPECT_FALSE(halts_within(*m, b("0"), budget));
    }
}

TEST(Machine, NoApplicableTupleBreaks) {
    auto m = corpus("stuck");
    const auto r = m->evaluate(b("01"), 10);
    EXPECT_EQ(r.outcome, Outcome::Broke);
    EXPECT_EQ(r.steps, 0u);
}

TEST(Machine, ShortestOfTwoBranches) {
    auto m = corpus("branch");
    EXPECT_EQ(m->determinism(), Determinism::Nondeterministic);
    EXPECT_FALSE(halts_within(*m, b("0"), 2));
    EXPECT_TRUE(halts_within(*m, b("0"), 3));
    EXPECT_EQ(min_halting_steps(*m, b("0"), 10), 3u);
    EXPECT_EQ(m->evaluate(b("1"), 10).outcome, Outcome::Broke);
}

TEST(Machine, TwoWayTapeGrowsLeftOneWayStays) {
    const Transition left{0, 0, 2, 1, Move::Left};
    TuringMachine two("two", 3, 0, 1, Alphabet::binary(), {left}, TapeMode::TwoWay);
    TuringMachine one("one", 3, 0, 1, Alphabet::binary(), {left}, TapeMode::OneWay);
    const auto c2 = two.step(two.initial_configuration(b("0")));
    const auto c1 = one.step(one.initial_configuration(b("0")));
    ASSERT_EQ(c2.size(), 1u);
    ASSERT_EQ(c1.size(), 1u);
    EXPECT_EQ(c2[0].head(), kBlank);
    EXPECT_EQ(c2[0].right, std::string("\xFF\x01", 2));
    EXPECT_EQ(c1[0].head(), static_cast<char>(1));
    EXPECT_EQ(c1[0].right, std::string("\x01", 1));
}

TEST(Machine, AnswerDecoding) {
    const AnswerConvention conv;
    EXPECT_EQ(decode_answer(conv, {1, "", std::string("\x01\x01")}), Answer::Yes);
    EXPECT_EQ(decode_answer(conv, {1, "", std::string("\x01\x00", 2)}), Answer::No);
    EXPECT_EQ(decode_answer(conv, {1, "", std::string("\x00", 1)}), Answer::DontKnow);
    EXPECT_THROW(decode_answer(conv, {0, "", "\x01\x01"}), DomainError);
    EXPECT_THROW(decode_answer(conv, {1, "\x01", "\x01\x01"}), DomainError);
    EXPECT_THROW(decode_answer(conv, {1, "", "\x01"}), DomainError);
}

TEST(Machine, SearchAgreesWithPathEnumeration) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const TuringMachine m = random_ntm(rng);
        for (std::size_t n = 0; n <= 3; ++n)
            for_each_in_sphere(Alphabet::binary(), n, [&](const Word& w) {
                for (std::uint64_t budget : {0, 1, 3, 7}) {
                    const auto expected = min_halt_dfs(m, m.initial_configuration(w), 0, budget);
                    const auto r = m.evaluate(w, budget);
                    ASSERT_EQ(r.halted(), expected.has_value()) << "trial " << trial << " w=" << w.to_string();
                    if (expected) ASSERT_EQ(r.steps, *expected);
                }
            });
    }
}

TEST(Machine, HaltingIsMonotoneInBudget) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const TuringMachine m = random_ntm(rng);
        const Word w = b("01");
        bool seen = false;
        for (std::uint64_t budget = 0; budget <= 10; ++budget) {
            const bool h = halts_within(m, w, budget);
            if (seen) ASSERT_TRUE(h);
            seen = seen || h;
        }
    }
}

TEST(MachineIo, MalformedFileIsParseError) {
    EXPECT_THROW(corpus("malformed"), ParseError);
    EXPECT_THROW(corpus("does-not-exist"), ParseError);
}

TEST(MachineIo, JsonRoundTrip) {
    for (const char* name : {"halt1", "loop", "branch", "contains11", "first0", "ternary_a"}) {
        auto m = corpus(name);
        auto again = machine_from_json(machine_to_json(*m));
        EXPECT_EQ(again->delta(), m->delta()) << name;
        EXPECT_EQ(again->states(), m->states()) << name;
        EXPECT_EQ(again->tape_mode(), m->tape_mode()) << name;
    }
}

TEST(VirtualMachine, RejectsOverBudgetHalts) {
    VirtualMachine cheat("cheat", Alphabet::binary(),
                         [](const Word&, std::uint64_t budget) {
                             return RunResult::halted_at(Configuration{1, "", ""}, budget + 1, {});
                         });
    EXPECT_THROW(cheat.evaluate(b("0"), 3), Error);
}
