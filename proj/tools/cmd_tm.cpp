#include "cli_common.hpp"

#include "genlab/machine_io.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace genlab::cli {

namespace {

struct TmArgs {
    Common common;
    std::string machine;
    std::string input;
};

nlohmann::json run_json(const TuringMachine& m, const Word& input, const RunResult& r) {
    nlohmann::json j{{"machine", m.name()}, {"input", input.to_string()}, {"outcome", to_string(r.outcome)},
                     {"steps", r.steps}};
    if (r.final) j["final"] = m.render(*r.final);
    if (auto a = r.answer()) j["answer"] = to_string(*a);
    return j;
}

}  // namespace

void register_tm(CLI::App& app, int& exit_code) {
    auto* tm = app.add_subcommand("tm", "Run a Turing machine from a JSON file");
    tm->require_subcommand(1);
    auto args = std::make_shared<TmArgs>();

    auto* run = tm->add_subcommand("run", "Run with a step budget and print the result");
    auto* halts = tm->add_subcommand("halts", "Print whether the machine halts within the budget");
    for (auto* sub : {run, halts}) {
        sub->add_option("machine", args->machine, "Machine file")->required();
        sub->add_option("input", args->input, "Input word (empty if omitted)");
        add_common(*sub, args->common);
    }

    run->callback([args, &exit_code] {
        const auto m = load_machine(args->machine);
        const Word input = Word::parse(m->input_alphabet(), args->input);
        const auto r = m->evaluate(input, args->common.budget);
        if (args->common.format == "json") {
            emit(args->common, dump(run_json(*m, input, r)));
        } else {
            std::ostringstream out;
            out << to_string(r.outcome) << " steps=" << r.steps;
            if (r.final) out << " final=" << m->render(*r.final);
            if (auto a = r.answer()) out << " answer=" << to_string(*a);
            out << '\n';
            emit(args->common, out.str());
        }
        exit_code = kPass;
    });
    halts->callback([args, &exit_code] {
        const auto m = load_machine(args->machine);
        const Word input = Word::parse(m->input_alphabet(), args->input);
        const bool h = halts_within(*m, input, args->common.budget);
        if (args->common.format == "json") {
            emit(args->common, dump({{"machine", m->name()}, {"input", input.to_string()},
                                     {"budget", args->common.budget}, {"halts", h}}));
        } else {
            emit(args->common, h ? "true\n" : "false\n");
        }
        exit_code = kPass;
    });
}

}  // namespace genlab::cli
