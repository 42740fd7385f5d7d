#include "qgc/run.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "qgc/format.hpp"
#include "qgc/graph.hpp"
#include "qgc/line_compiler.hpp"
#include "qgc/tree_compiler.hpp"
#include "qgc/verify.hpp"

namespace qgc {

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace

std::string file_tag(GraphKind kind) { return kind == GraphKind::tree ? "qtree" : "qline"; }

std::vector<std::string> output_files(GraphKind kind, const std::string& prefix) {
    std::string stem = prefix + "_" + file_tag(kind) + "_";
    return {stem + "log.txt", stem + "eng.txt", stem + "pic.txt"};
}

CompileSummary compile_and_write(GraphKind kind, const CompileRequest& req) {
    CompileSummary summary;
    summary.request = req;

    Program prog = kind == GraphKind::tree ? compile_tree(req) : compile_line(req);
    summary.num_ops = count_elementary_ops(prog);

    if (req.verify) {
        if (req.nb <= verify_max_qubits) {
            Hamiltonian h = kind == GraphKind::tree ? build_tree_hamiltonian(req.nb, req.g)
                                                    : build_line_hamiltonian(req.nb, req.g);
            summary.epsilon = verify_program(prog, h).epsilon;
        } else {
            summary.message = "error not computed";
        }
    }

    std::vector<std::string> paths = output_files(kind, req.prefix);
    write_file(paths[0], write_log(summary));
    write_file(paths[1], write_english(prog));
    write_file(paths[2], write_picture(prog));
    return summary;
}

int run_request(GraphKind kind, const CompileRequest& req, std::ostream& out) {
    if (std::optional<std::string> problem = request_problem(req, true)) {
        out << "Message: " << *problem << '\n';
        return 1;
    }
    try {
        CompileSummary summary = compile_and_write(kind, req);
        out << ops_report_line(summary.num_ops) << '\n';
        out << error_report_line(summary.epsilon) << '\n';
        if (!summary.message.empty()) out << "Message: " << summary.message << '\n';
        return 0;
    } catch (const std::exception& e) {
        out << "Message: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace qgc
