#pragma once

#include "logk3/surgery.hpp"

#include <string>

namespace logk3 {

// File formats: JSON throughout, integers only, fixed key order so that
// parse -> emit -> parse is the identity and emitted files are byte-stable.
// Component indices are 1-based in files, matching how boundary components
// are numbered in print; they are converted at this layer.

struct PairDocument {
    std::string name;
    LogSurfacePair pair;

    bool operator==(const PairDocument&) const = default;
};

PairDocument parse_pair_document(const std::string& text);
std::string emit_pair_document(const PairDocument& doc);

struct ScriptDocument {
    SurgeryScript steps;

    bool operator==(const ScriptDocument&) const = default;
};

ScriptDocument parse_script_document(const std::string& text);
std::string emit_script_document(const ScriptDocument& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace logk3
