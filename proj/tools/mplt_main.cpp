#include "mplt/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace mplt;
using namespace mplt::cli;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Overrides {
    int precision = 0;
    int max_length = 0;
    std::string depth;
    std::string format;
    bool no_timing = false;

    void apply(Cutoffs& c, std::string& fmt) const {
        if (precision) c.precision = precision;
        if (max_length) c.max_length = max_length;
        if (!depth.empty()) {
            try {
                c.depth = parse_rational(depth);
            } catch (const Error& e) {
                throw InputError(std::string("--depth: ") + e.what());
            }
        }
        if (!format.empty()) fmt = format;
        if (c.precision < 64 || c.max_length < 0 || c.depth < 0) throw InputError("cutoffs out of range");
    }
};

void emit(const std::string& text, const std::string& path) {
    if (path == "-" || path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

int default_precision() {
    if (const char* p = std::getenv("MPLT_PRECISION")) {
        try {
            return std::stoi(p);
        } catch (...) {
            throw InputError("MPLT_PRECISION is not an integer");
        }
    }
    return 256;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mplt: multiplet and character identity checks"};
    app.require_subcommand(1);
    Overrides ov;
    std::string file;
    // accepted before or after the subcommand
    auto common = [&](CLI::App* a) {
        a->add_option("--precision", ov.precision, "bits of floating precision for asdim");
        a->add_option("--max-length", ov.max_length, "coset enumeration length cutoff");
        a->add_option("--depth", ov.depth, "delta-depth cutoff, rational literal");
        a->add_option("--format", ov.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        a->add_flag("--no-timing", ov.no_timing, "omit the timing field in json output");
    };
    common(&app);

    auto* verify = app.add_subcommand("verify", "run the checks of a job file");
    verify->add_option("job", file, "job file (JSON)")->required();
    auto* sweep_cmd = app.add_subcommand("sweep", "run checks over a grid file");
    sweep_cmd->add_option("grid", file, "grid file (JSON)")->required();
    auto* mult = app.add_subcommand("multiplet", "print the multiplet of a job file");
    mult->add_option("job", file, "job file (JSON)")->required();
    for (auto* sub : {verify, sweep_cmd, mult}) common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        json doc = parse_document(slurp(file), file);
        std::string text;
        int code = 0;
        if (verify->parsed() || mult->parsed()) {
            JobSpec job = parse_job(doc);
            if (!doc.contains("cutoffs") || !doc["cutoffs"].contains("precision")) job.cutoffs.precision = default_precision();
            ov.apply(job.cutoffs, job.format);
            if (mult->parsed()) {
                text = job.format == "json" ? multiplet_json(job).dump(2) + "\n" : multiplet_table(job);
            } else {
                Report r = run(job);
                text = job.format == "json" ? render_json_lines(r, !ov.no_timing) : render_table(r);
                code = r.exit_code();
            }
            emit(text, job.path);
        } else {
            GridSpec grid = parse_grid(doc);
            if (!doc.contains("cutoffs") || !doc["cutoffs"].contains("precision")) grid.cutoffs.precision = default_precision();
            ov.apply(grid.cutoffs, grid.format);
            Report r = sweep(grid);
            text = grid.format == "json" ? render_json_lines(r, !ov.no_timing) : render_table(r);
            code = r.exit_code();
            emit(text, grid.path);
        }
        return code;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind << ": " << e.what() << "\n";
        return 2;
    }
}
