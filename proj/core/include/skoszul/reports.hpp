#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skoszul/homology.hpp"
#include "skoszul/induced.hpp"

namespace skoszul {

/// Parsed CLI configuration; every run is a pure function of this value.
struct RunConfig {
    std::string command;
    int p = 1;
    int q = 1;
    int n = 1;
    std::string ring = "Q";
    int window = 6;
    int trials = 100;
    std::uint64_t seed = 0;
    std::string format = "text"; // "text" or "json"
    std::string out;             // empty: stdout
    std::string matrix_file;     // optional supermatrix literal (ber-verify)
};

struct StrandRowOut {
    long m1 = 0, m2 = 0;
    int degree = 0;
    std::size_t dim = 0, rank_in = 0, rank_out = 0, h_dim = 0;
};

struct ClassOut {
    long m1 = 0, m2 = 0;
    int degree = 0;
    std::string generator;
    std::string parity;
};

/// Strand sweep report shared by koszul-verify, dual-verify and classical.
struct SweepReport {
    std::string command;
    RunConfig config;
    std::vector<StrandRowOut> rows;
    std::vector<ClassOut> classes;
    std::vector<std::string> notes;
    bool expected_char_p_failure = false;
    std::size_t homotopy_checked = 0; // classical only
    bool passed = false;
};

struct BerTrialOut {
    std::size_t index = 0;
    std::string berezinian;
    std::string berezinian_inverse;
    std::string coefficient;
    bool match = false;
};

struct BerReport {
    std::string command;
    RunConfig config;
    std::vector<BerTrialOut> trials;
    std::size_t matches = 0;
    bool passed = false;
};

struct CharPDemoReport {
    std::string command;
    RunConfig config;
    std::vector<StrandRowOut> rows;
    std::string cycle;
    std::string delta_of_cycle;
    bool is_cycle = false;
    bool is_boundary = true;
    std::size_t h_dim_char_p = 0;
    std::size_t h_dim_rationals = 0;
    std::vector<std::string> notes;
    bool passed = false;
};

SweepReport run_koszul_verify(const RunConfig& cfg);
SweepReport run_dual_verify(const RunConfig& cfg);
SweepReport run_classical(const RunConfig& cfg);
BerReport run_ber_verify(const RunConfig& cfg);
CharPDemoReport run_charp_demo(const RunConfig& cfg);

std::string to_json(const SweepReport& r);
std::string to_json(const BerReport& r);
std::string to_json(const CharPDemoReport& r);
std::string to_text(const SweepReport& r);
std::string to_text(const BerReport& r);
std::string to_text(const CharPDemoReport& r);

/// Supermatrix literal: {"ring": "...", "p": 1, "q": 1, "A": [[entry]], ...}
/// where an entry is either a string in the scalar grammar or a list of
/// [coefficient, [generator indices]] terms.
SuperMatrix parse_supermatrix_literal(const std::string& json_text);
std::string supermatrix_literal(const SuperMatrix& m);

} // namespace skoszul
