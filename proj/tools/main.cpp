#include "cli_common.hpp"

#include "genlab/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace genlab;
    CLI::App app{"genlab: generic-case complexity laboratory"};
    app.require_subcommand(1);
    int exit_code = cli::kPass;
    cli::register_tm(app, exit_code);
    cli::register_sequences(app, exit_code);
    cli::register_reduce(app, exit_code);
    cli::register_verify(app, exit_code);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version exit 0; every other parse failure is a usage error.
        return app.exit(e) == 0 ? cli::kPass : cli::kUsage;
    } catch (const cli::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return cli::kUsage;
    } catch (const HorizonExceeded& e) {
        std::cerr << "horizon exceeded: " << e.what() << '\n';
        return cli::kUsage;
    } catch (const AlphabetMismatch& e) {
        std::cerr << "alphabet mismatch: " << e.what() << '\n';
        return cli::kUsage;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return cli::kUsage;
    } catch (const ConstructionError& e) {
        std::cerr << "construction failed: " << e.what() << '\n';
        return cli::kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kFail;
    }
    return exit_code;
}
