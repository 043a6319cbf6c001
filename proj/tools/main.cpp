// Command line front end: parse Gauss codes, print invariant profiles,
// enumerate colourings, project diagrams, fuzz the Reidemeister engine and
// audit corpus files against their golden values.
//
// Exit codes: 0 success, 1 check failure (census mismatch, fuzz violation),
// 2 unreadable or unparsable input, 3 a colouring-dependent quantity was
// requested for a non-2-colourable link.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linkparity/colouring.hpp"
#include "linkparity/corpus.hpp"
#include "linkparity/diagram.hpp"
#include "linkparity/invariants.hpp"
#include "linkparity/moves.hpp"
#include "linkparity/parity.hpp"
#include "linkparity/report.hpp"

namespace lp = linkparity;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNotColourable = 3;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The input argument is a file path, "-" for stdin, or an inline Gauss code.
std::string slurp_input(const std::string& input) {
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::error_code ec;
    if (std::filesystem::exists(input, ec)) {
        std::ifstream in(input);
        if (!in) throw BadInput("cannot read " + input);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return input;
}

lp::GaussDiagram read_diagram(const std::string& input) {
    return lp::parse(slurp_input(input));
}

int cmd_invariants(const std::string& input, bool json, bool oracle, bool check, bool allow_large,
                   const std::string& field) {
    lp::GaussDiagram d = read_diagram(input);
    lp::J2Mode mode = check ? lp::J2Mode::Check : oracle ? lp::J2Mode::Enum : lp::J2Mode::Fast;
    lp::WritheProfile profile = lp::report(d, mode, allow_large ? 62 : 20);
    nlohmann::ordered_json j = lp::profile_to_json(profile);

    if (!field.empty()) {
        if (!j.contains(field) && !j["flags"].contains(field))
            throw BadInput("unknown field '" + field + "'");
        const nlohmann::ordered_json& value = j.contains(field) ? j[field] : j["flags"][field];
        if (value.is_null()) {
            std::cerr << "field '" << field << "' is undefined for this link (not 2-colourable"
                      << (profile.two_colourable ? " or odd linking numbers" : "") << ")\n";
            return kExitNotColourable;
        }
        std::cout << value.dump() << "\n";
        return 0;
    }

    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << lp::profile_to_text(profile);
    return 0;
}

int cmd_colourings(const std::string& input, bool allow_large) {
    lp::GaussDiagram d = read_diagram(input);
    int n = d.components();
    if (!lp::two_colourable(d)) {
        std::cout << "count: 0\n";
        return 0;
    }
    if (n > 20 && !allow_large) throw BadInput("too many components; pass --allow-large to insist");
    std::cout << "count: 2^" << n << " = " << (1ULL << n) << "\n";
    std::cout << "generating set (one colouring per global-dual pair):\n";
    for (const lp::TwoColouring& c : lp::generating_set(n))
        std::cout << "  " << c.to_string() << "  writhe " << lp::writhe(d, c) << "\n";
    return 0;
}

int cmd_project(const std::string& input, const std::string& bits) {
    lp::GaussDiagram d = read_diagram(input);
    lp::TwoColouring c = lp::TwoColouring::from_string(bits);
    std::cout << lp::serialize(lp::project(d, c)) << "\n";
    return 0;
}

int cmd_compare(const std::string& input) {
    lp::GaussDiagram d = read_diagram(input);
    lp::WritheProfile p = lp::report(d);
    auto show = [](const std::vector<long long>& v) {
        std::ostringstream out;
        out << "(";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
        out << ")";
        return out.str();
    };
    std::cout << "j2:            " << (p.j2 ? show(*p.j2) : "n/a (not 2-colourable)") << "\n";
    std::cout << "j2_self:       " << (p.j2_self ? std::to_string(*p.j2_self) : "n/a") << "\n";
    std::cout << "naive:         " << p.naive << "\n";
    if (p.ip_candidates)
        std::cout << "ip_candidates: {" << (*p.ip_candidates)[0] << ", " << (*p.ip_candidates)[1]
                  << "} with ip_self " << *p.ip_self << "\n";
    else
        std::cout << "ip_candidates: n/a (odd pairwise linking numbers)\n";
    return 0;
}

int cmd_fuzz(const std::string& input, int steps, int trials, std::uint64_t seed, int max_chords,
             const std::string& witness_dir) {
    lp::GaussDiagram d = read_diagram(input);
    if (!lp::two_colourable(d)) {
        std::cerr << "fuzzing needs a 2-colourable start diagram\n";
        return kExitNotColourable;
    }

    lp::WritheProfile base = lp::report(d);
    long long projections = 0;
    long long colourable_projections = 0;
    int failures = 0;

    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);

        lp::AxiomReport two_colour = lp::verify_parity_axioms(d, steps, trial_seed, max_chords);
        lp::AxiomReport naive = lp::verify_parity_axioms(
            d, steps, trial_seed, max_chords,
            [](const lp::GaussDiagram& g, const lp::TwoColouring&) { return lp::naive_parity(g); },
            false);

        std::string invariant_drift;
        for (const lp::GaussDiagram& step : lp::random_walk(d, steps, trial_seed, max_chords)) {
            lp::WritheProfile p = lp::report(step);
            if (p.j2 != base.j2 || p.j2_self != base.j2_self || p.naive != base.naive ||
                p.lk != base.lk || p.ip_self != base.ip_self) {
                invariant_drift = lp::serialize(step);
                break;
            }
            for (const lp::TwoColouring& c : lp::generating_set(step.components())) {
                ++projections;
                if (lp::two_colourable(lp::project(step, c))) ++colourable_projections;
            }
        }

        bool ok = two_colour.pass && naive.pass && invariant_drift.empty();
        if (!ok) {
            ++failures;
            std::filesystem::create_directories(witness_dir);
            std::filesystem::path file =
                std::filesystem::path(witness_dir) / ("witness_trial" + std::to_string(t) + ".txt");
            std::ofstream out(file);
            out << "start: " << lp::serialize(d) << "\n";
            out << "seed: " << trial_seed << "\n";
            for (const lp::AxiomReport* r : {&two_colour, &naive}) {
                if (r->pass || !r->witness) continue;
                out << "scheme: " << (r == &two_colour ? "two-colour" : "naive") << "\n";
                out << "diagram: " << r->witness->diagram << "\n";
                out << "move: " << r->witness->move << "\n";
                out << "colouring: " << r->witness->colouring << "\n";
                out << "axiom: " << r->witness->axiom << "\n";
                out << "detail: " << r->witness->detail << "\n";
            }
            if (!invariant_drift.empty()) out << "invariants drifted at: " << invariant_drift << "\n";
            std::cout << "FAIL trial " << t << " (witness in " << file.string() << ")\n";
        }
    }

    std::cout << "trials: " << trials << ", steps each: " << steps << ", failures: " << failures
              << "\n";
    if (projections > 0)
        std::cout << "projection 2-colourable rate: " << colourable_projections << "/" << projections
                  << "\n";
    return failures == 0 ? 0 : kExitCheckFailed;
}

int cmd_census(const std::string& directory) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(directory))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::cout << "name\tn\tchords\tj2\tj2_self\tnaive\tip_self\tflags\n";
    int bad = 0;
    for (const auto& file : files) {
        lp::CorpusEntry entry;
        lp::WritheProfile p;
        try {
            entry = lp::load_corpus_entry(file);
            p = lp::report(lp::parse(entry.gauss_code));
        } catch (const lp::Error& e) {
            std::cout << file.filename().string() << "\tERROR\t" << e.what() << "\n";
            ++bad;
            continue;
        }

        std::ostringstream j2;
        if (p.j2) {
            j2 << "(";
            for (std::size_t i = 0; i < p.j2->size(); ++i) j2 << (i ? "," : "") << (*p.j2)[i];
            j2 << ")";
        } else {
            j2 << "n/a";
        }
        std::ostringstream flags;
        flags << (p.chequerboard_certified ? "cb" : "-") << ","
              << (p.slice_obstructed && *p.slice_obstructed ? "slice!" : "-") << ","
              << (p.amphichiral_obstructed && *p.amphichiral_obstructed ? "amphi!" : "-") << ","
              << (p.cb_concordance_obstructed && *p.cb_concordance_obstructed ? "cbconc!" : "-") << ","
              << (p.compatible ? "compat" : "-");
        std::cout << entry.name << "\t" << p.components << "\t" << p.chords << "\t" << j2.str()
                  << "\t" << (p.j2_self ? std::to_string(*p.j2_self) : "n/a") << "\t" << p.naive
                  << "\t" << (p.ip_self ? std::to_string(*p.ip_self) : "n/a") << "\t" << flags.str()
                  << "\n";

        for (const std::string& mismatch : lp::check_corpus_entry(entry, p)) {
            std::cout << "MISMATCH " << mismatch << "\n";
            ++bad;
        }
    }
    std::cout << files.size() << " entries, " << bad << " problems\n";
    return bad == 0 ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parity invariants of virtual links from Gauss codes"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string field;
    bool json = false, oracle = false, check = false, allow_large = false;
    auto* invariants = app.add_subcommand("invariants", "full invariant profile of one link");
    invariants->add_option("input", input, "file, '-' for stdin, or an inline Gauss code");
    invariants->add_flag("--json", json, "machine-readable output");
    invariants->add_flag("--oracle", oracle, "compute J^2 by enumeration instead of the fast path");
    invariants->add_flag("--check", check, "compute J^2 both ways and compare");
    invariants->add_flag("--allow-large", allow_large, "lift the 20-component cap on J^2");
    invariants->add_option("--field", field, "print a single field; exits 3 if it is null");

    std::string col_input = "-";
    bool col_allow_large = false;
    auto* colourings = app.add_subcommand("colourings", "count and generating set of 2-colourings");
    colourings->add_option("input", col_input, "file, '-' for stdin, or an inline Gauss code");
    colourings->add_flag("--allow-large", col_allow_large, "lift the 20-component cap");

    std::string proj_input = "-";
    std::string proj_bits;
    auto* project = app.add_subcommand("project", "delete the odd chords of a colouring");
    project->add_option("input", proj_input, "file, '-' for stdin, or an inline Gauss code");
    project->add_option("colouring", proj_bits, "colouring bits, e.g. 01")->required();

    std::string fuzz_input = "-";
    int fuzz_steps = 1000, fuzz_trials = 10, fuzz_max_chords = 24;
    std::uint64_t fuzz_seed = 1;
    std::string witness_dir = "fuzz-witnesses";
    auto* fuzz = app.add_subcommand("fuzz", "random Reidemeister walks checking the parity axioms");
    fuzz->add_option("input", fuzz_input, "start diagram");
    fuzz->add_option("--steps", fuzz_steps, "moves per trajectory");
    fuzz->add_option("--trials", fuzz_trials, "number of trajectories");
    fuzz->add_option("--seed", fuzz_seed, "seed of the first trajectory");
    fuzz->add_option("--max-chords", fuzz_max_chords, "size bound for the walk");
    fuzz->add_option("--witness-dir", witness_dir, "where failure witnesses are written");

    std::string cmp_input = "-";
    auto* compare = app.add_subcommand("compare", "j2 vs naive vs IP candidates side by side");
    compare->add_option("input", cmp_input, "file, '-' for stdin, or an inline Gauss code");

    std::string census_dir;
    auto* census = app.add_subcommand("census", "recompute a corpus directory and diff goldens");
    census->add_option("directory", census_dir, "directory of corpus .json files")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (invariants->parsed()) return cmd_invariants(input, json, oracle, check, allow_large, field);
        if (colourings->parsed()) return cmd_colourings(col_input, col_allow_large);
        if (project->parsed()) return cmd_project(proj_input, proj_bits);
        if (fuzz->parsed())
            return cmd_fuzz(fuzz_input, fuzz_steps, fuzz_trials, fuzz_seed, fuzz_max_chords,
                            witness_dir);
        if (compare->parsed()) return cmd_compare(cmp_input);
        if (census->parsed()) return cmd_census(census_dir);
    } catch (const lp::SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const lp::LabelError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const lp::NotTwoColourable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotColourable;
    } catch (const lp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
