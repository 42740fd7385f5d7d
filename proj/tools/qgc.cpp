#include <iostream>

#include "CLI11.hpp"
#include "qgc/run.hpp"

namespace {

struct CommandArgs {
    qgc::CompileRequest req;
    bool skip_verify = false;
};

void add_common_options(CLI::App* cmd, CommandArgs& args, int default_order) {
    args.req.order = default_order;
    cmd->add_option("--prefix", args.req.prefix, "Prefix of the three output files")
        ->capture_default_str();
    cmd->add_option("--qubits", args.req.nb, "Number of qubits (at least 2)")->required();
    cmd->add_option("--coupling", args.req.g, "Coupling constant g")->required();
    cmd->add_option("--trots", args.req.nt, "Number of Trotter repetitions")
        ->capture_default_str();
    cmd->add_option("--order", args.req.order, "Product-formula order: 2, 4, or 6")
        ->capture_default_str();
    cmd->add_flag("--no-verify", args.skip_verify,
                  "Skip the error computation (useful beyond 12 qubits)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Compiles the evolution operator of a tree or line graph Hamiltonian into\n"
        "elementary quantum operations, written as Log, English, and Picture files."};
    app.require_subcommand(1);

    CommandArgs tree_args, line_args;
    CLI::App* tree = app.add_subcommand("tree", "Balanced binary tree graph");
    CLI::App* line = app.add_subcommand("line", "Line graph in Gray-code order");
    add_common_options(tree, tree_args, 4);
    add_common_options(line, line_args, 2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << "Message: " << e.what() << '\n';
        return 1;
    }

    CommandArgs& args = tree->parsed() ? tree_args : line_args;
    args.req.verify = !args.skip_verify;
    qgc::GraphKind kind = tree->parsed() ? qgc::GraphKind::tree : qgc::GraphKind::line;
    return qgc::run_request(kind, args.req, std::cout);
}
