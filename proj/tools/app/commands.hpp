#pragma once

#include <iosfwd>
#include <string>

#include "app/pipeline.hpp"

namespace trivex::app {

enum ExitCode : int { kExitPass = 0, kExitVerification = 1, kExitUsage = 2, kExitCap = 3 };

// Each command writes its artifact under config().out_dir ("-" writes to
// out) and prints a one-line summary to out otherwise. Returns an exit code.
int cmd_group(Pipeline& pipe, std::ostream& out);
int cmd_graph(Pipeline& pipe, const std::string& which, std::ostream& out);
int cmd_spectrum(Pipeline& pipe, const std::string& which, std::ostream& out);
int cmd_faces(Pipeline& pipe, std::ostream& out);
int cmd_platonic(Pipeline& pipe, int N, bool with_duality, std::ostream& out);
int cmd_render(Pipeline& pipe, int radius, std::ostream& out);
// Prints the ledger table and writes ledger.json.
int cmd_verify_all(Pipeline& pipe, std::ostream& out);

}  // namespace trivex::app
