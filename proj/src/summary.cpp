#include "qgc/summary.hpp"

#include <cmath>

namespace qgc {

std::optional<std::string> request_problem(const CompileRequest& req, bool check_prefix) {
    if (check_prefix && req.prefix.empty()) return "File Prefix must not be empty";
    if (req.nb < 2) return "Number of Qubits must be at least 2";
    if (!std::isfinite(req.g)) return "Coupling Constant must be a finite number";
    if (req.nt < 1) return "Number of Trots must be at least 1";
    if (req.order != 2 && req.order != 4 && req.order != 6) return "Order must be 2, 4, or 6";
    return std::nullopt;
}

}  // namespace qgc
