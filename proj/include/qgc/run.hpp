#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qgc/summary.hpp"

namespace qgc {

enum class GraphKind { tree, line };

// Dense verification is quadratic in 2^nb; above this it is skipped and the
// summary message says so.
inline constexpr int verify_max_qubits = 12;

// "qtree" or "qline"; the middle part of every output file name.
std::string file_tag(GraphKind kind);

// {<prefix>_<tag>_log.txt, _eng.txt, _pic.txt} in that order.
std::vector<std::string> output_files(GraphKind kind, const std::string& prefix);

// Compiles, verifies when requested and affordable, and writes the log,
// English, and Picture files. The request must already be valid.
CompileSummary compile_and_write(GraphKind kind, const CompileRequest& req);

// Full command semantics: validate, compile, write, report on `out`.
// Returns 0 on success, 1 for input problems (nothing written), 2 for
// internal failures.
int run_request(GraphKind kind, const CompileRequest& req, std::ostream& out);

}  // namespace qgc
