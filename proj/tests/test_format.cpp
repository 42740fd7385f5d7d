#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "qgc/format.hpp"
#include "random_program.hpp"

using namespace qgc;

TEST_CASE("english translation table rows") {
    CHECK(english_line(Instruction::gate(Op::SigX, 1, {{3, false}, {2, true}})) ==
          "SIGX AT 1 IF 3F 2T");
    CHECK(english_line(Instruction::swap(1, 0, {{3, false}, {2, true}})) ==
          "SWAP 1 0 IF 3F 2T");
    CHECK(english_line(Instruction::rot(Op::RotX, 23.7, 1, {{3, false}, {2, true}})) ==
          "ROTX 23.700000 AT 1 IF 3F 2T");
}

TEST_CASE("english covers every mnemonic") {
    CHECK(english_line(Instruction::loop(0, 5)) == "LOOP 0 REPS: 5");
    CHECK(english_line(Instruction::next(0)) == "NEXT 0");
    CHECK(english_line(Instruction::phas(42.7, {{3, false}, {2, true}})) ==
          "PHAS 42.700000 IF 3F 2T");
    CHECK(english_line(Instruction::p0ph(1.5, 3, {{2, true}})) == "P0PH 1.500000 AT 3 IF 2T");
    CHECK(english_line(Instruction::p1ph(-1.5, 0)) == "P1PH -1.500000 AT 0");
    CHECK(english_line(Instruction::gate(Op::Had2, 2)) == "HAD2 AT 2");
    CHECK(english_line(Instruction::gate(Op::SigY, 1)) == "SIGY AT 1");
    CHECK(english_line(Instruction::gate(Op::SigZ, 0, {{1, true}})) == "SIGZ AT 0 IF 1T");
    CHECK(english_line(Instruction::rot(Op::RotY, -9.25, 2)) == "ROTY -9.250000 AT 2");
    CHECK(english_line(Instruction::rot(Op::RotZ, 0.0, 1)) == "ROTZ 0.000000 AT 1");
    CHECK(english_line(Instruction::rotn(10.0, 20.0, 30.0, 1, {{0, false}})) ==
          "ROTN 10.000000 20.000000 30.000000 AT 1 IF 0F");
}

TEST_CASE("picture translation table rows") {
    CHECK(picture_line(Instruction::gate(Op::SigX, 1, {{3, false}, {2, true}}), 4) ==
          "0---@---X   |");
    CHECK(picture_line(Instruction::phas(42.7, {{3, false}, {2, true}}), 4) ==
          "0---@---+--Ph");
    CHECK(picture_line(Instruction::p0ph(42.7, 3, {{2, true}}), 4) == "0P--@   |   |");
}

TEST_CASE("picture rendering rules") {
    CHECK(picture_line(Instruction::swap(1, 0, {{3, false}, {2, true}}), 4) ==
          "0---@---<--->");
    CHECK(picture_line(Instruction::rot(Op::RotX, 23.7, 1, {{3, false}, {2, true}}), 4) ==
          "0---@---Rx  |");
    CHECK(picture_line(Instruction::gate(Op::Had2, 3), 4) == "H   |   |   |");
    CHECK(picture_line(Instruction::gate(Op::SigZ, 0), 4) == "|   |   |   Z");
    CHECK(picture_line(Instruction::rot(Op::RotY, 5.0, 0), 4) == "|   |   |   Ry");
    CHECK(picture_line(Instruction::rotn(1.0, 2.0, 3.0, 2, {{0, true}}), 4) ==
          "|   R---+---@");
    CHECK(picture_line(Instruction::p1ph(0.5, 1), 4) == "|   |   @P  |");
    CHECK(picture_line(Instruction::loop(2, 7), 4) == "LOOP 2 REPS: 7");
    CHECK(picture_line(Instruction::next(2), 4) == "NEXT 2");
}

TEST_CASE("phase glyph sits on the lowest control-free qubit") {
    CHECK(picture_line(Instruction::phas(1.0), 3) == "|   |  Ph");
    CHECK(picture_line(Instruction::phas(1.0, {{0, true}}), 3) == "|   Ph--@");
    // every qubit holds a control: no glyph to draw
    CHECK(picture_line(Instruction::phas(1.0, {{2, true}, {1, false}, {0, true}}), 3) ==
          "@---0---@");
}

TEST_CASE("picture lines stay inside the canvas") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Program p = random_program(rng);
        for (const Instruction& ins : p.rows) {
            if (ins.op == Op::Loop || ins.op == Op::Next) continue;
            std::string line = picture_line(ins, p.nb);
            CHECK(line.size() <= static_cast<size_t>(4 * p.nb));
        }
    }
}

TEST_CASE("english and picture files stay row for row in step") {
    std::mt19937 rng(8);
    for (int i = 0; i < 100; ++i) {
        Program p = random_program(rng);
        auto count_lines = [](const std::string& text) {
            return std::count(text.begin(), text.end(), '\n');
        };
        CHECK(count_lines(write_english(p)) == count_lines(write_picture(p)));
    }
}

TEST_CASE("parser inverts the writer") {
    std::mt19937 rng(9);
    for (int i = 0; i < 300; ++i) {
        Program p = random_program(rng);
        std::string text = write_english(p);
        Program back = parse_english(text, p.nb);
        REQUIRE(back.rows.size() == p.rows.size());
        CHECK(write_english(back) == text);
        for (size_t r = 0; r < p.rows.size(); ++r) {
            CHECK(back.rows[r].op == p.rows[r].op);
            CHECK(back.rows[r].target == p.rows[r].target);
            CHECK(back.rows[r].partner == p.rows[r].partner);
            CHECK(back.rows[r].reps == p.rows[r].reps);
            CHECK(back.rows[r].controls == p.rows[r].controls);
            for (int k = 0; k < 3; ++k)
                CHECK(back.rows[r].angle[k] == doctest::Approx(p.rows[r].angle[k]).epsilon(1e-9));
        }
    }
}

TEST_CASE("parser accepts loose whitespace and both REPS spellings") {
    Program a = parse_english("LOOP 0 REPS: 3\nSIGX AT 0\nNEXT 0\n", 1);
    Program b = parse_english("  LOOP  0   REPS:3  \n   SIGX   AT  0\nNEXT 0", 1);
    CHECK(write_english(a) == write_english(b));
    CHECK(a.rows[0].reps == 3);

    Program c = parse_english("PHAS 42.7 IF 3F 2T", 4);
    REQUIRE(c.rows.size() == 1);
    CHECK(c.rows[0].op == Op::Phas);
    CHECK(c.rows[0].angle[0] == doctest::Approx(42.7));
    CHECK(c.rows[0].controls == std::vector<Control>{{3, false}, {2, true}});
}

TEST_CASE("parser blames the right line") {
    try {
        parse_english("XYZW AT 0", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }

    try {
        parse_english("SIGX AT 0\nSIGX AT 5\n", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);  // bit beyond the qubit count
    }

    try {
        parse_english("SIGX AT 0\n\nLOOP 0 REPS: 2\nSIGX AT 1\n", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);  // loop never closed
    }
}

TEST_CASE("parser rejects malformed rows") {
    CHECK_THROWS_AS(parse_english("SIGX 0", 2), ParseError);              // missing AT
    CHECK_THROWS_AS(parse_english("ROTX abc AT 0", 2), ParseError);       // bad angle
    CHECK_THROWS_AS(parse_english("SIGX AT 0 IF 1X", 2), ParseError);     // bad control
    CHECK_THROWS_AS(parse_english("SIGX AT 0 IF", 2), ParseError);        // empty IF
    CHECK_THROWS_AS(parse_english("SWAP 0 0", 2), ParseError);            // equal bits
    CHECK_THROWS_AS(parse_english("NEXT 0", 2), ParseError);              // no loop open
    CHECK_THROWS_AS(parse_english("SIGX AT 0 extra", 2), ParseError);     // trailing junk
    CHECK_THROWS_AS(parse_english("LOOP 0 3", 1), ParseError);            // missing REPS:
}

TEST_CASE("report lines") {
    CHECK(ops_report_line(57) == "Number of Elementary Operations: 57");
    CHECK(error_report_line(1.383e-5) == "Error: 1.383e-05");
    CHECK(error_report_line(0.0) == "Error: 0.000e+00");
    CHECK(error_report_line(std::nullopt) == "Error: not computed");
}

TEST_CASE("log file layout") {
    CompileSummary s;
    s.request = {"test", 4, 0.05, 1, 4, true};
    s.num_ops = 57;
    s.epsilon = 1.383e-5;

    CHECK(write_log(s) ==
          "File Prefix: test\n"
          "Number of Qubits: 4\n"
          "Coupling Constant: 0.05\n"
          "Number of Trots: 1\n"
          "Order: 4\n"
          "Number of Elementary Operations: 57\n"
          "Error: 1.383e-05\n"
          "Message:\n");

    s.epsilon.reset();
    s.message = "error not computed";
    std::string text = write_log(s);
    CHECK(text.find("Error: not computed\n") != std::string::npos);
    CHECK(text.find("Message: error not computed\n") != std::string::npos);
}
