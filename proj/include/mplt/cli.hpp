#pragma once

#include "mplt/asdim.hpp"
#include "mplt/fin_multiplets.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mplt::cli {

using json = nlohmann::ordered_json;

enum class Status { Verified, Violated, Inapplicable, Unclosed };
std::string to_string(Status s);

struct Cutoffs {
    int max_length = 6;
    Rational depth = 1;
    int precision = 256;
};

struct PairSpec {
    enum Kind { Full, Steps, Roots, EqualRank } kind = Full;
    std::vector<int> steps;
    std::vector<std::vector<int>> roots;    // simple-root coordinates
};

struct JobSpec {
    std::string algebra;                    // "F4"
    Normalization normalization = Normalization::ThetaSquaredTwo;
    PairSpec pair;
    std::optional<std::vector<int>> aut;
    std::vector<Rational> weight;           // fundamental coordinates; empty means 0
    Rational level = 1;
    Rational delta = 0;
    std::vector<std::string> checks;
    Cutoffs cutoffs;
    std::string format = "json";
    std::string path = "-";
};

struct GridSpec {
    std::vector<std::string> algebras;
    Normalization normalization = Normalization::ThetaSquaredTwo;
    PairSpec pair{PairSpec::EqualRank, {}, {}};
    int max_m = 1;
    int max_height = 0;
    Rational level = 1;
    std::vector<std::string> checks;
    Cutoffs cutoffs;
    std::string format = "table";
    std::string path = "-";
};

struct CheckResult {
    std::string check;
    std::string cell;
    Status status = Status::Verified;
    std::string residual;
    json params = json::object();    // the inputs of this cell
    json detail = json::object();
    double wall_ms = 0;
};

struct Report {
    std::vector<CheckResult> results;
    int exit_code() const;
};

// Thrown for malformed input; maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string>& registered_checks();

// Parse a JSON document, reporting syntax errors with line and column.
json parse_document(const std::string& text, const std::string& source);
JobSpec parse_job(const json& j);
GridSpec parse_grid(const json& j);

Report run(const JobSpec& job);
Report sweep(const GridSpec& grid);

// Multiplet tables for the job's pair and weight.
json multiplet_json(const JobSpec& job);
std::string multiplet_table(const JobSpec& job);

std::string render_json_lines(const Report& r, bool with_timing = true);
std::string render_table(const Report& r);

}  // namespace mplt::cli
