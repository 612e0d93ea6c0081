// Deterministic serialization of singlet bases: canonical JSON documents and
// a human-readable ket rendering.

#pragma once

#include "singlet/state.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace singlet {

struct ExportTerm {
    std::string num;  // decimal strings, arbitrary-precision safe
    std::string den;
    std::int64_t radicand = 1;
};

struct ExportAmplitude {
    std::string word;
    std::vector<ExportTerm> terms;
};

struct ExportState {
    int j_twice = 0;
    int m_twice = 0;
    int index = 1;
    std::vector<ExportAmplitude> amplitudes;
};

struct StateExportDocument {
    std::string schema_version = "1";
    int spin_twice = 1;
    int n = 0;
    std::vector<ExportState> states;
};

// Word tokens: "+"/"-" per site for spin-1/2, comma-separated magnetic values
// ("-1,0,1") otherwise.
std::string word_to_string(const BasisWord& word, HalfInt spin);
BasisWord word_from_string(const std::string& text, HalfInt spin);

// States ordered by (j, m, index); words in map order (most-negative letters
// first); radical terms by ascending radicand.
StateExportDocument make_export_document(const SingletBasis& basis);

// Canonical bytes: fixed key order, two-space indent, trailing newline.
// parse + re-serialize of any serialized document is byte-identical.
std::string to_json(const StateExportDocument& doc);
StateExportDocument parse_json(const std::string& text);

// Display rendering in ket notation, e.g. "-1/6*sqrt(3) |+-+->".
std::string to_text(const StateExportDocument& doc);

// Write with a temp-file-and-rename so readers never observe partial output.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace singlet
