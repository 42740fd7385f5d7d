#include "qgc/format.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace qgc {

namespace {

std::string fmt_angle(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fmt_general(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void append_controls(std::ostringstream& out, const std::vector<Control>& ctrls) {
    if (ctrls.empty()) return;
    out << " IF";
    for (const Control& c : ctrls) out << ' ' << c.bit << (c.on ? 'T' : 'F');
}

}  // namespace

std::string english_line(const Instruction& ins) {
    std::ostringstream out;
    switch (ins.op) {
        case Op::Loop:
            out << "LOOP " << ins.target << " REPS: " << ins.reps;
            return out.str();
        case Op::Next:
            out << "NEXT " << ins.target;
            return out.str();
        case Op::Swap:
            out << "SWAP " << ins.target << ' ' << ins.partner;
            break;
        case Op::Phas:
            out << "PHAS " << fmt_angle(ins.angle[0]);
            break;
        case Op::P0Ph:
        case Op::P1Ph:
            out << mnemonic(ins.op) << ' ' << fmt_angle(ins.angle[0]) << " AT " << ins.target;
            break;
        case Op::SigX:
        case Op::SigY:
        case Op::SigZ:
        case Op::Had2:
            out << mnemonic(ins.op) << " AT " << ins.target;
            break;
        case Op::RotX:
        case Op::RotY:
        case Op::RotZ:
            out << mnemonic(ins.op) << ' ' << fmt_angle(ins.angle[0]) << " AT " << ins.target;
            break;
        case Op::RotN:
            out << "ROTN " << fmt_angle(ins.angle[0]) << ' ' << fmt_angle(ins.angle[1]) << ' '
                << fmt_angle(ins.angle[2]) << " AT " << ins.target;
            break;
    }
    append_controls(out, ins.controls);
    return out.str();
}

std::string write_english(const Program& p) {
    std::string out;
    for (const Instruction& ins : p.rows) {
        out += english_line(ins);
        out += '\n';
    }
    return out;
}

namespace {

// Tokenized English line with single-use cursor; all errors carry the line number.
class LineReader {
public:
    LineReader(int line_no, const std::string& line) : line_no_(line_no) {
        std::istringstream in(line);
        std::string tok;
        while (in >> tok) tokens_.push_back(tok);
    }

    bool empty() const { return tokens_.empty(); }
    bool done() const { return pos_ == tokens_.size(); }

    [[noreturn]] void fail(const std::string& why) const { throw ParseError(line_no_, why); }

    const std::string& next(const char* what) {
        if (done()) fail(std::string("missing ") + what);
        return tokens_[pos_++];
    }

    const std::string* peek() const { return done() ? nullptr : &tokens_[pos_]; }

    void skip() { ++pos_; }

    int read_int(const char* what) {
        const std::string& tok = next(what);
        return to_int(tok, what);
    }

    int to_int(const std::string& tok, const char* what) const {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) fail(std::string("bad ") + what + " '" + tok + "'");
            return v;
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            fail(std::string("bad ") + what + " '" + tok + "'");
        }
    }

    double read_double(const char* what) {
        const std::string& tok = next(what);
        try {
            size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) fail(std::string("bad ") + what + " '" + tok + "'");
            return v;
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            fail(std::string("bad ") + what + " '" + tok + "'");
        }
    }

    void expect(const char* literal) {
        const std::string& tok = next(literal);
        if (tok != literal) fail(std::string("expected ") + literal + ", got '" + tok + "'");
    }

    std::vector<Control> read_controls() {
        std::vector<Control> ctrls;
        if (done()) return ctrls;
        expect("IF");
        if (done()) fail("IF with no controls");
        while (!done()) {
            const std::string& tok = next("control");
            char last = tok.back();
            if (tok.size() < 2 || (last != 'T' && last != 'F'))
                fail("bad control '" + tok + "'");
            Control c;
            c.bit = to_int(tok.substr(0, tok.size() - 1), "control bit");
            c.on = last == 'T';
            ctrls.push_back(c);
        }
        return ctrls;
    }

private:
    int line_no_;
    std::vector<std::string> tokens_;
    size_t pos_ = 0;
};

Instruction parse_line(LineReader& in) {
    const std::string& head = in.next("mnemonic");
    std::optional<Op> op = op_from_mnemonic(head);
    if (!op) in.fail("unknown mnemonic '" + head + "'");

    Instruction ins;
    switch (*op) {
        case Op::Loop: {
            int label = in.read_int("loop label");
            const std::string& reps_tok = in.next("REPS:");
            int reps = 0;
            if (reps_tok == "REPS:") {
                reps = in.read_int("repetition count");
            } else if (reps_tok.rfind("REPS:", 0) == 0) {
                reps = in.to_int(reps_tok.substr(5), "repetition count");
            } else {
                in.fail("expected REPS:, got '" + reps_tok + "'");
            }
            ins = Instruction::loop(label, reps);
            break;
        }
        case Op::Next:
            ins = Instruction::next(in.read_int("loop label"));
            break;
        case Op::Swap: {
            int a = in.read_int("swap bit");
            int b = in.read_int("swap bit");
            ins = Instruction::swap(a, b, in.read_controls());
            break;
        }
        case Op::Phas: {
            double v = in.read_double("phase");
            ins = Instruction::phas(v, in.read_controls());
            break;
        }
        case Op::P0Ph:
        case Op::P1Ph: {
            double v = in.read_double("phase");
            in.expect("AT");
            int t = in.read_int("target bit");
            ins = *op == Op::P0Ph ? Instruction::p0ph(v, t, in.read_controls())
                                  : Instruction::p1ph(v, t, in.read_controls());
            break;
        }
        case Op::SigX:
        case Op::SigY:
        case Op::SigZ:
        case Op::Had2: {
            in.expect("AT");
            int t = in.read_int("target bit");
            ins = Instruction::gate(*op, t, in.read_controls());
            break;
        }
        case Op::RotX:
        case Op::RotY:
        case Op::RotZ: {
            double v = in.read_double("angle");
            in.expect("AT");
            int t = in.read_int("target bit");
            ins = Instruction::rot(*op, v, t, in.read_controls());
            break;
        }
        case Op::RotN: {
            double x = in.read_double("angle");
            double y = in.read_double("angle");
            double z = in.read_double("angle");
            in.expect("AT");
            int t = in.read_int("target bit");
            ins = Instruction::rotn(x, y, z, t, in.read_controls());
            break;
        }
    }
    if (!in.done()) in.fail("trailing tokens after instruction");
    return ins;
}

}  // namespace

Program parse_english(const std::string& text, int nb) {
    Program p;
    p.nb = nb;
    std::vector<int> source_line;  // row -> 1-based line number, for diagnostics
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        LineReader reader(line_no, line);
        if (reader.empty()) continue;
        p.rows.push_back(parse_line(reader));
        source_line.push_back(line_no);
    }
    std::vector<Diagnostic> diags = validate(p);
    if (!diags.empty()) {
        const Diagnostic& d = diags.front();
        int at = d.row >= 0 && d.row < static_cast<int>(source_line.size()) ? source_line[d.row]
                                                                            : line_no;
        throw ParseError(at, d.text);
    }
    return p;
}

namespace {

// One- or two-character glyph anchored to a qubit.
struct Glyph {
    int qubit;
    const char* text;
    bool right_align = false;  // Ph at qubit 0 ends at the qubit's column
};

}  // namespace

std::string picture_line(const Instruction& ins, int nb) {
    if (ins.op == Op::Loop || ins.op == Op::Next) return english_line(ins);

    auto col = [nb](int q) { return 4 * (nb - 1 - q); };

    std::vector<Glyph> glyphs;
    for (const Control& c : ins.controls) glyphs.push_back({c.bit, c.on ? "@" : "0"});
    switch (ins.op) {
        case Op::Swap: {
            int hi = std::max(ins.target, ins.partner);
            int lo = std::min(ins.target, ins.partner);
            glyphs.push_back({hi, "<"});
            glyphs.push_back({lo, ">"});
            break;
        }
        case Op::Phas: {
            // lowest-index qubit holding no control; no glyph when all are taken
            int free_bit = -1;
            for (int q = 0; q < nb && free_bit < 0; ++q) {
                bool taken = false;
                for (const Control& c : ins.controls) taken |= c.bit == q;
                if (!taken) free_bit = q;
            }
            // ends at the qubit column; on a one-qubit canvas there is no
            // room to the left, so fall back to starting there
            if (free_bit >= 0) glyphs.push_back({free_bit, "Ph", free_bit == 0 && nb > 1});
            break;
        }
        case Op::P0Ph: glyphs.push_back({ins.target, "0P"}); break;
        case Op::P1Ph: glyphs.push_back({ins.target, "@P"}); break;
        case Op::SigX: glyphs.push_back({ins.target, "X"}); break;
        case Op::SigY: glyphs.push_back({ins.target, "Y"}); break;
        case Op::SigZ: glyphs.push_back({ins.target, "Z"}); break;
        case Op::Had2: glyphs.push_back({ins.target, "H"}); break;
        case Op::RotX: glyphs.push_back({ins.target, "Rx"}); break;
        case Op::RotY: glyphs.push_back({ins.target, "Ry"}); break;
        case Op::RotZ: glyphs.push_back({ins.target, "Rz"}); break;
        case Op::RotN: glyphs.push_back({ins.target, "R"}); break;
        default: break;
    }

    std::string line(4 * nb, ' ');
    if (!glyphs.empty()) {
        int span_lo = static_cast<int>(line.size()), span_hi = -1;
        for (const Glyph& g : glyphs) {
            span_lo = std::min(span_lo, col(g.qubit));
            span_hi = std::max(span_hi, col(g.qubit));
        }
        for (int pos = span_lo; pos <= span_hi; ++pos) line[pos] = '-';
        for (int q = 0; q < nb; ++q) {
            bool involved = false;
            for (const Glyph& g : glyphs) involved |= g.qubit == q;
            if (!involved) line[col(q)] = col(q) >= span_lo && col(q) <= span_hi ? '+' : '|';
        }
        for (const Glyph& g : glyphs) {
            std::string_view text = g.text;
            int start = col(g.qubit) - (g.right_align ? static_cast<int>(text.size()) - 1 : 0);
            line.replace(start, text.size(), text);
        }
    } else {
        for (int q = 0; q < nb; ++q) line[col(q)] = '|';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line;
}

std::string write_picture(const Program& p) {
    std::string out;
    for (const Instruction& ins : p.rows) {
        out += picture_line(ins, p.nb);
        out += '\n';
    }
    return out;
}

std::string ops_report_line(long num_ops) {
    return "Number of Elementary Operations: " + std::to_string(num_ops);
}

std::string error_report_line(const std::optional<double>& epsilon) {
    if (!epsilon) return "Error: not computed";
    char buf[64];
    std::snprintf(buf, sizeof buf, "Error: %.3e", *epsilon);
    return buf;
}

std::string write_log(const CompileSummary& summary) {
    const CompileRequest& req = summary.request;
    std::ostringstream out;
    out << "File Prefix: " << req.prefix << '\n';
    out << "Number of Qubits: " << req.nb << '\n';
    out << "Coupling Constant: " << fmt_general(req.g) << '\n';
    out << "Number of Trots: " << req.nt << '\n';
    out << "Order: " << req.order << '\n';
    out << ops_report_line(summary.num_ops) << '\n';
    out << error_report_line(summary.epsilon) << '\n';
    out << "Message:" << (summary.message.empty() ? "" : " " + summary.message) << '\n';
    return out.str();
}

}  // namespace qgc
