#pragma once

// Command-line front end. Exit codes:
//   0  every check passed
//   1  a property or axiom failed (witness in the report)
//   2  usage or input error
//   3  an undetermined maximality verdict is present

#include "omnilie/serialize.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace omnilie::cli {

enum class Command {
    omni_identity,
    lie_check,
    dstruct_classify,
    dstruct_search,
    calg_check,
    courant_dirac,
    courant_axioms,
    linearize,
};

std::string_view to_string(Command c);

enum class Format { human, machine };

struct Options {
    /// Unset means "the command's default range" (omni-identity: 1..4, linearize: 1..3).
    std::optional<std::size_t> n;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t degree_bound = 2;
    std::size_t budget = 1000;
    std::size_t nvars = 3;
    std::string strategy = "graph";
    /// lie-check: catalog entry instead of a file.
    std::optional<std::string> catalog;
    /// calg-check: build the omni instance of this size instead of reading a file.
    std::optional<std::size_t> omni;
    /// calg-check: force D = 2 x the true gradient.
    bool mutate_gradient = false;
    /// courant-axioms: drop the -1/2 d(...) correction term.
    bool uncorrected = false;
    Format format = Format::human;
    bool timing = false;
};

struct Request {
    Command command = Command::omni_identity;
    std::optional<std::string> input_path;
    Options options;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by parse_request when --help was requested; carries the help text.
struct HelpRequested {
    std::string text;
};

enum class Status { pass, fail, undetermined, error };
std::string_view to_string(Status s);

struct Check {
    std::string name;
    /// "pass", "fail", "undetermined", or a value ("yes"/"no"/counts).
    std::string result;
};

struct Report {
    Command command = Command::omni_identity;
    io::json request;  // echo of command, input path, options
    io::json input;    // parsed input document, when there is one
    Status status = Status::pass;
    std::vector<Check> checks;
    io::json witnesses = io::json::object();
    std::optional<double> timing_ms;
};

/// args excludes the program name. Throws UsageError or HelpRequested.
Request parse_request(const std::vector<std::string>& args);

/// Never throws for input problems: they become Status::error reports.
Report run(const Request& req);

/// Pure function of the report.
int exit_code(const Report& r);

/// machine: stable JSON (sorted keys, 2-space indent, trailing newline).
/// human: aligned table followed by witnesses.
std::string emit_report(const Report& r, Format format);

/// Full entry point used by the executable.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omnilie::cli
