#ifndef MBQC_TOOLS_DOCUMENT_H
#define MBQC_TOOLS_DOCUMENT_H

#include <map>
#include <string>
#include <string_view>

#include "mbqc/pattern.h"
#include "mbqc/simulator.h"

namespace mbqc {

/// On-disk pattern file: a JSON object with keys
///
///   n_qubits      integer
///   edges         [[a, b], ...]
///   inputs        [q, ...]
///   outputs       [q, ...]
///   measured      [q, ...]            measurement order
///   angles        {"q": radians | "symbol", ...}
///   flow          {"q": successor, ...}          optional
///   input_states  {"q": [a_re, a_im, b_re, b_im], ...}   optional
///   symbols       {"name": radians, ...}          optional default values
///
/// Unknown keys are rejected.
struct PatternDocument {
    Pattern pattern;
    InputStates input_states;
    std::map<std::string, double> symbols;

    bool operator==(const PatternDocument &other) const;
};

/// Throws ParseError on malformed JSON or schema violations.
PatternDocument parse_document(std::string_view text);
PatternDocument load_document(const std::string &path);
std::string serialize_document(const PatternDocument &doc);

}  // namespace mbqc

#endif
