#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "polarcog/cli.hpp"

int main(int argc, char** argv) {
    using namespace polarcog::cli;
    CLI::App app{"Certifying (s,1)-polarity tools for cographs"};
    app.require_subcommand(1);

    Command cmd;
    std::string input = "-";
    std::string format;
    int s = -1;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("-i,--input", input, "graph6 input file, one graph per line ('-' = stdin)");
        sub->add_option("-f,--format", format, "output format");
    };

    auto* check = app.add_subcommand("check", "least s for which each input is (s,1)-polar");
    add_io(check);
    check->add_option("-s", s, "also report whether each input is (s,1)-polar");

    auto* certify = app.add_subcommand("certify", "partition or minimal obstruction per input");
    add_io(certify);
    certify->add_option("-s", s, "number of parts allowed in A")->required();

    auto* generate = app.add_subcommand("generate", "all cograph minimal (s,1)-polar obstructions");
    generate->add_option("-s", s, "parameter s")->required();
    generate->add_option("-f,--format", format, "g6 (default), json or text");
    generate->add_option("--catalog", cmd.catalog_path, "write the JSON catalog to this file");

    auto* count = app.add_subcommand("count", "CSV of obstruction counts and bounds for s = 2..s-max");
    count->add_option("--s-max", cmd.s_max, "largest s")->required();

    auto* enumerate = app.add_subcommand("enumerate", "all cographs on n vertices, one per isomorphism class");
    enumerate->add_option("-n", cmd.n, "vertex count")->required();
    enumerate->add_option("-f,--format", format, "g6 (default) or text (cotree)");

    auto* cotree = app.add_subcommand("cotree", "cotree of each input, or an induced P4");
    add_io(cotree);

    CLI11_PARSE(app, argc, argv);

    if (*check) cmd.sub = Subcommand::Check;
    if (*certify) cmd.sub = Subcommand::Certify;
    if (*generate) cmd.sub = Subcommand::Generate;
    if (*count) cmd.sub = Subcommand::Count;
    if (*enumerate) cmd.sub = Subcommand::Enumerate;
    if (*cotree) cmd.sub = Subcommand::Cotree;
    if (s >= 0) cmd.s = s;

    try {
        cmd.format = parse_format(format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    if (input == "-") return run(cmd, std::cin, std::cout, std::cerr);
    std::ifstream file(input);
    if (!file) {
        std::cerr << "error: cannot open " << input << '\n';
        return kExitInputError;
    }
    return run(cmd, file, std::cout, std::cerr);
}
