#ifndef MBQC_TOOLS_COMMANDS_H
#define MBQC_TOOLS_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

#include "document.h"
#include "mbqc/signal_flow.h"

namespace mbqc::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kInvalid = 3,
    kNoFlow = 4,
};

/// Human-readable signal-flow report.
std::string format_flow_text(const PatternDocument &doc, const FlowMap &flow, const SignalFlow &sf);
/// The same content as a JSON document with stable key order.
std::string format_flow_json(const PatternDocument &doc, const FlowMap &flow, const SignalFlow &sf);

/// Entry point shared by the executable and the tests; `args` excludes argv[0].
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace mbqc::cli

#endif
