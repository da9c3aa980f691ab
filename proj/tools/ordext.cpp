#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ordext/commands.hpp"

namespace {

ordext::cli::Format parse_format(const std::string& name) {
    return name == "machine" ? ordext::cli::Format::Machine : ordext::cli::Format::Text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ordext: extend finite partial orders to total preorders with a prescribed "
        "symmetric part, with exhaustively verified existence, intersection and "
        "uniqueness criteria"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    int max_n = 4;
    bool show_intersection = false;

    const auto add_common = [&](CLI::App* cmd, bool needs_file) {
        auto* opt = cmd->add_option("--file", file, "problem file path");
        if (needs_file) {
            opt->required();
        }
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "machine"}));
    };

    auto* check = app.add_subcommand(
        "check", "membership in Sigma / Sigma*, maximality, and existence verdict");
    add_common(check, true);
    auto* extend = app.add_subcommand(
        "extend", "construct a witness extension (honoring an optional forced pair)");
    add_common(extend, true);
    extend->add_flag("--show-intersection", show_intersection,
                     "also print the closed-form intersection of all extensions");
    auto* enumerate = app.add_subcommand(
        "enumerate", "list all extensions (perfect extensions when no partition is given)");
    add_common(enumerate, true);
    auto* intersect = app.add_subcommand(
        "intersect", "compare the enumerated intersection with the closed formula");
    add_common(intersect, true);
    auto* verify = app.add_subcommand(
        "verify", "exhaustive sweep of every library invariant against the brute-force oracle");
    add_common(verify, false);
    verify->add_option("--max-n", max_n, "largest universe size to sweep (pair sweep caps at 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : ordext::cli::kExitInputError;
    }

    ordext::cli::Options opts;
    opts.file = file;
    opts.max_n = max_n;
    opts.show_intersection = show_intersection;
    opts.format = parse_format(format);

    if (check->parsed()) {
        return ordext::cli::cmd_check(opts, std::cout, std::cerr);
    }
    if (extend->parsed()) {
        return ordext::cli::cmd_extend(opts, std::cout, std::cerr);
    }
    if (enumerate->parsed()) {
        return ordext::cli::cmd_enumerate(opts, std::cout, std::cerr);
    }
    if (intersect->parsed()) {
        return ordext::cli::cmd_intersect(opts, std::cout, std::cerr);
    }
    return ordext::cli::cmd_verify(opts, std::cout, std::cerr);
}
