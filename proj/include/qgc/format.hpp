#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qgc/seo.hpp"
#include "qgc/summary.hpp"

namespace qgc {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line) + ": " + what_arg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// English file: one grammar line per instruction.
std::string english_line(const Instruction& ins);
std::string write_english(const Program& p);

// Inverse of write_english up to numeric formatting; throws ParseError.
Program parse_english(const std::string& text, int nb);

// Picture file: fixed-column ASCII art, qubit q at column 4*(nb-1-q).
std::string picture_line(const Instruction& ins, int nb);
std::string write_picture(const Program& p);

// Log file plus the two report lines shared with standard output.
std::string ops_report_line(long num_ops);
std::string error_report_line(const std::optional<double>& epsilon);
std::string write_log(const CompileSummary& summary);

}  // namespace qgc
