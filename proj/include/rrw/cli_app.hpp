#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rrw/identities.hpp"

namespace rrw {

enum class OutputFormat { Text, Json, Tsv };

OutputFormat parse_format(const std::string& name);

// Streams the reports of one run; returns 0 when all passed, 1 otherwise.
int emit_verify_reports(const std::vector<Report>& reports, OutputFormat f,
                        std::ostream& out);

// Whole command line (without the program name). Exit codes: 0 success,
// 1 verification mismatch, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rrw
