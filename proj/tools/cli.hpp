#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "lspan/pipeline.hpp"

namespace lspan::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

// Runs the command line; argv[0] is the program name.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Stats document of one pipeline run. Timings are zero when withTimings is false,
// which makes the document a pure function of input and configuration.
nlohmann::json stats_json(const SpannerResult& res, bool withTimings);

// Sweep CSV header and one row.
extern const char* const kSweepColumns;
std::string sweep_row(const SpannerResult& res, bool withTimings);

}  // namespace lspan::cli
