#pragma once

#include <optional>
#include <string>

namespace qgc {

// Inputs of one compile run, as entered on the command line.
struct CompileRequest {
    std::string prefix = "test";
    int nb = 0;
    double g = 0.0;
    int nt = 1;
    int order = 2;
    bool verify = true;
};

// Everything the log file records about a finished run.
struct CompileSummary {
    CompileRequest request;
    long num_ops = 0;
    std::optional<double> epsilon;  // absent when verification was skipped
    std::string message;
};

// First problem with the request, phrased for the Message field; nullopt when
// the request is usable. The prefix only matters when files will be written.
std::optional<std::string> request_problem(const CompileRequest& req, bool check_prefix);

}  // namespace qgc
