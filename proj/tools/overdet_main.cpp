// Command-line front end: reads a collection document (JSON), runs one of the
// analyses, writes a report document to stdout.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "overdet/errors.hpp"
#include "overdet/json_io.hpp"

namespace {

using nlohmann::json;
using namespace overdet;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path, "");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_error(const std::string& code, const std::string& message, const std::string& path) {
    json err{{"code", code}, {"message", message}, {"path", path}};
    std::cerr << err.dump() << "\n";
}

void print_supports_line(std::ostream& os, const std::vector<SupportSet>& supports) {
    for (std::size_t i = 0; i < supports.size(); ++i) {
        os << "  A" << (i + 1) << " = {";
        for (std::size_t p = 0; p < supports[i].points.size(); ++p) {
            os << (p ? ", " : "") << "(";
            for (std::size_t c = 0; c < supports[i].points[p].size(); ++c)
                os << (c ? "," : "") << supports[i].points[p][c].str();
            os << ")";
        }
        os << "}\n";
    }
}

void pretty_print(const std::string& command, const json& result, std::ostream& os) {
    if (command == "analyze") {
        os << "minimal defect:          " << result["minimal_defect"] << "\n";
        os << "essential subcollection: " << result["essential"].dump() << "\n";
        os << "codimension:             " << result["codimension"] << "\n";
        os << "generically consistent:  " << (result["generically_consistent"].get<bool>() ? "yes" : "no")
           << "\n";
    } else if (command == "count") {
        os << "predicted count:   " << result["predicted_count"] << "\n";
        os << "  = index " << result["index_factor"] << " * normalized mixed volume "
           << result["mixed_volume_normalized"] << "\n";
        os << "  (factorial factor " << result["factorial_factor"] << ", standard mixed volume "
           << result["mixed_volume_standard"].get<std::string>() << ")\n";
    } else if (command == "verify") {
        os << "predicted: " << result["predicted"] << "\n";
        for (const auto& t : result["trials"])
            os << "  seed " << t["seed"] << ": oracle count " << t["oracle_count"] << "\n";
        os << "agreement: " << result["agreement_fraction"].get<std::string>() << "\n";
    } else {
        os << result.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"support-level analysis of overdetermined sparse polynomial systems"};
    app.require_subcommand(1);

    std::string input_path;
    std::uint64_t seed = 0;
    long long coeff_bound = 1000000;
    std::size_t trials = 5;
    std::string format = "auto";

    app.add_option("-i,--input", input_path, "input collection JSON (default: stdin)");
    app.add_option("--seed", seed, "random seed (default 0)");
    app.add_option("--coeff-bound", coeff_bound, "coefficient bound for sampling");
    app.add_option("--trials", trials, "number of oracle trials");
    app.add_option("--format", format, "json|pretty (default: pretty on a terminal)")
        ->check(CLI::IsMember({"auto", "json", "pretty"}));

    for (const char* name : {"analyze", "reduce", "count", "degrees", "mixed-volume", "verify",
                             "sample"})
        app.add_subcommand(name);

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();
    const bool pretty =
        format == "pretty" || (format == "auto" && isatty(fileno(stdout)) != 0);

    try {
        ParsedCollection parsed = parse_collection(read_input(input_path));
        for (const std::string& w : parsed.warnings) emit_error("warning", w, "");
        const Collection& c = parsed.collection;
        const json echo = collection_to_json(c, parsed.name);

        json result;
        if (command == "analyze") {
            result = analysis_to_json(analyze(c));
        } else if (command == "reduce") {
            result = reduction_to_json(reduce(c));
        } else if (command == "count") {
            result = count_to_json(overdetermined_count(c));
        } else if (command == "degrees") {
            result = degrees_to_json(resultant_degrees(c));
        } else if (command == "mixed-volume") {
            result = mixed_volume_to_json(mixed_volume_of_supports(c.supports, c.n));
        } else if (command == "verify") {
            result = verification_to_json(verify_count(c, trials, seed, Int(coeff_bound)));
        } else if (command == "sample") {
            result = sample_to_json(sample_consistent_system(c, seed, Int(coeff_bound)));
        }

        if (pretty) {
            if (!parsed.name.empty()) std::cout << parsed.name << "\n";
            print_supports_line(std::cout, c.supports);
            pretty_print(command, result, std::cout);
        } else {
            std::cout << report_document(command, echo, std::move(result)).dump() << "\n";
        }
        return 0;
    } catch (const ParseError& e) {
        emit_error("parse", e.what(), e.path);
        return 2;
    } catch (const PreconditionError& e) {
        emit_error("precondition", e.what(), "");
        return 2;
    } catch (const CapacityError& e) {
        emit_error("capacity", e.what(), "");
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what(), "");
        return 1;
    }
}
