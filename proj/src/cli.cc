// Copyright 2026 The kstele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kstele/cli.h"

#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "kstele/coloring.h"
#include "kstele/harness.h"
#include "kstele/hvt2d.h"
#include "kstele/ks_set.h"
#include "kstele/quantum.h"
#include "kstele/serialize.h"
#include "kstele/strategies.h"

namespace kstele {

namespace {

struct InvalidSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

KsSet load_set(const RunConfig &config) {
    if (config.set_source == "builtin") {
        return cabello_set();
    }
    return load_ks_set(config.set_source);
}

/// Loads the set and refuses non-orthogonal input for every command except verify.
KsSet load_valid_set(const RunConfig &config) {
    KsSet set = load_set(config);
    ValidationReport report = validate_ks_set(set);
    if (!report.ok()) {
        std::stringstream ss;
        ss << "Vector set '" << config.set_source << "' is invalid:";
        for (const auto &b : report.bases) {
            for (const auto &v : b.violations) {
                ss << " S" << b.basis << " slots " << v.slot_a << "," << v.slot_b << " have dot " << v.dot << ";";
            }
        }
        throw InvalidSet(ss.str());
    }
    return set;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("Failed to open '" + path + "'.");
    }
    return Json::parse(in);
}

std::unique_ptr<Strategy> make_strategy(const std::string &name, const KsSet &set) {
    if (name == "quantum") {
        return std::make_unique<QuantumStrategy>(set);
    }
    if (name == "best-classical") {
        return std::make_unique<DeterministicStrategy>(best_classical(set).strategy);
    }
    if (name == "one-cbit") {
        return std::make_unique<OneCbitStrategy>(set);
    }
    const std::string det = "deterministic:";
    const std::string mix = "mixture:";
    if (name.starts_with(det)) {
        return std::make_unique<DeterministicStrategy>(deterministic_from_json(set, read_json_file(name.substr(det.size()))));
    }
    if (name.starts_with(mix)) {
        return std::make_unique<MixtureStrategy>(mixture_from_json(set, read_json_file(name.substr(mix.size()))));
    }
    throw std::invalid_argument("Unknown strategy '" + name + "'.");
}

void print_json(std::ostream &out, const Json &doc) {
    out << doc.dump(2) << "\n";
}

int cmd_verify(const RunConfig &config, std::ostream &out) {
    KsSet set = load_set(config);
    ValidationReport report = validate_ks_set(set);
    if (config.format == OutputFormat::Json) {
        print_json(out, to_json(report));
    } else {
        for (const auto &b : report.bases) {
            out << "S" << b.basis << ": " << (b.orthogonal ? "orthogonal" : "NOT orthogonal");
            for (const auto &v : b.violations) {
                out << " [slots " << v.slot_a << "," << v.slot_b << " dot " << v.dot << "]";
            }
            out << "\n";
        }
        std::map<size_t, size_t> histogram;
        for (const auto &[ray, count] : report.occurrence_counts) {
            histogram[count]++;
        }
        out << "distinct vectors: " << report.distinct_vectors << "\n";
        for (const auto &[count, rays] : histogram) {
            out << "vectors occurring " << count << " time(s): " << rays << "\n";
        }
        out << (report.ok() ? "valid" : "INVALID") << "\n";
    }
    return report.ok() ? EXIT_OK : EXIT_INVALID_SET;
}

int cmd_search(const RunConfig &config, std::ostream &out) {
    KsSet set = load_valid_set(config);
    auto found = search_noncontextual(set);
    auto cert = parity_certificate(set);
    if (config.format == OutputFormat::Json) {
        print_json(out, search_json(set, found, cert));
        return EXIT_OK;
    }
    out << "non-contextual assignments: " << found.size() << "\n";
    for (const auto &a : found) {
        out << "  ones at:";
        for (size_t r = 0; r < set.num_rays(); r++) {
            if (a.values[r]) {
                out << " " << set.rays()[r];
            }
        }
        out << "\n";
    }
    if (cert.has_value()) {
        out << "parity certificate: " << cert->basis_count
            << " bases (odd), every vector occurs an even number of times\n";
    } else {
        out << "parity certificate: none\n";
    }
    return EXIT_OK;
}

int cmd_min_context(const RunConfig &config, std::ostream &out) {
    KsSet set = load_valid_set(config);
    ContextualityResult result = min_contextuality(set);
    if (config.format == OutputFormat::Json) {
        print_json(out, to_json(result));
        return EXIT_OK;
    }
    out << "minimum contextual vectors: " << result.defect << "\n";
    out << "witness (marked slot per basis):";
    for (int s : result.witness.choices) {
        out << " " << s;
    }
    out << "\n";
    for (const auto &v : result.mismatched) {
        out << "contextual vector: " << v;
        for (const auto &occ : set.occurrences(v)) {
            out << " S" << occ.basis << "=" << int(result.witness.value(occ));
        }
        out << "\n";
    }
    return EXIT_OK;
}

int cmd_best_classical(const RunConfig &config, std::ostream &out) {
    KsSet set = load_valid_set(config);
    BestClassical best = best_classical(set);
    if (config.format == OutputFormat::Json) {
        print_json(out, to_json(best));
        return EXIT_OK;
    }
    out << "best classical win probability: " << best.win_prob << "\n";
    out << "questions lost: " << best.min_losses << " of " << 4 * set.num_bases() << "\n";
    out << "alice slots:";
    for (int s : best.strategy.alice_choices()) {
        out << " " << s;
    }
    out << "\nbob ones at:";
    for (size_t r = 0; r < set.num_rays(); r++) {
        if (best.strategy.bob_table().values[r]) {
            out << " " << set.rays()[r];
        }
    }
    out << "\n";
    return EXIT_OK;
}

int cmd_play(const RunConfig &config, std::ostream &out) {
    KsSet set = load_valid_set(config);
    auto strategy = make_strategy(config.strategy, set);
    Transcript t = play_rounds(*strategy, config.rounds, config.seed, config.threads);
    // File-backed strategies are labelled without their path.
    t.strategy = config.strategy.substr(0, config.strategy.find(':'));
    if (config.format == OutputFormat::Json) {
        print_json(out, to_json(t));
        return EXIT_OK;
    }
    size_t errors = 0;
    for (const auto &r : t.rounds) {
        errors += !r.error.empty();
    }
    out << "strategy: " << t.strategy << "\n";
    out << "seed: " << t.seed << "\n";
    out << "rounds: " << t.summary.rounds << "\n";
    out << "wins: " << t.summary.wins << "\n";
    out << "win rate: " << t.summary.win_rate << " (" << std::fixed << std::setprecision(6)
        << t.summary.win_rate.to_double() << ")\n";
    out << "mean bits per round: " << rational_str(t.summary.mean_bits) << "\n";
    out << "forfeited rounds: " << errors << "\n";
    return EXIT_OK;
}

int cmd_hvt2d(const RunConfig &config, std::ostream &out) {
    auto rows = hvt2d::verification_table(config.grid, config.samples, config.seed);
    if (config.format == OutputFormat::Json) {
        print_json(out, to_json(rows));
        return EXIT_OK;
    }
    out << std::setw(10) << "n.m" << std::setw(14) << "analytic" << std::setw(14) << "born" << std::setw(14)
        << "mc" << std::setw(14) << "stderr" << "\n";
    out << std::fixed << std::setprecision(8);
    for (const auto &r : rows) {
        out << std::setw(10) << std::setprecision(4) << r.cosine << std::setprecision(8) << std::setw(14) << r.analytic
            << std::setw(14) << r.born << std::setw(14) << r.mc_estimate << std::setw(14) << r.std_error << "\n";
    }
    return EXIT_OK;
}

int cmd_inspect(const RunConfig &config, std::ostream &out) {
    KsSet set = load_valid_set(config);
    JointDistribution d = joint_distribution(set, config.alice_basis, config.bob_basis);
    if (config.format == OutputFormat::Json) {
        print_json(out, to_json(d));
        return EXIT_OK;
    }
    out << "Alice S" << d.alice_basis << " (rows) x Bob S" << d.bob_basis << " (columns)\n";
    for (int i = 1; i <= 4; i++) {
        out << std::setw(12) << set.basis(d.alice_basis).vectors[i - 1].str();
        for (int j = 1; j <= 4; j++) {
            out << std::setw(7) << d.at(i, j).str();
        }
        out << "\n";
    }
    return EXIT_OK;
}

}  // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        switch (config.command) {
            case Command::Verify:
                return cmd_verify(config, out);
            case Command::Search:
                return cmd_search(config, out);
            case Command::MinContext:
                return cmd_min_context(config, out);
            case Command::BestClassical:
                return cmd_best_classical(config, out);
            case Command::Play:
                return cmd_play(config, out);
            case Command::Hvt2d:
                return cmd_hvt2d(config, out);
            case Command::Inspect:
                return cmd_inspect(config, out);
        }
    } catch (const InvalidSet &ex) {
        err << "error: " << ex.what() << "\n";
        return EXIT_INVALID_SET;
    } catch (const std::exception &ex) {
        err << "error: " << ex.what() << "\n";
        return EXIT_TOOL_ERROR;
    }
    return EXIT_TOOL_ERROR;
}

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig config;
    CLI::App app{"Kochen-Specker set verification and pseudo-telepathy game simulator"};
    app.name("kstele");

    const std::map<std::string, Command> commands{
        {"verify", Command::Verify},
        {"search", Command::Search},
        {"min-context", Command::MinContext},
        {"best-classical", Command::BestClassical},
        {"play", Command::Play},
        {"hvt2d", Command::Hvt2d},
        {"inspect", Command::Inspect},
    };
    const std::map<std::string, OutputFormat> formats{{"human", OutputFormat::Human}, {"json", OutputFormat::Json}};

    app.add_option("command", config.command, "verify | search | min-context | best-classical | play | hvt2d | inspect")
        ->required()
        ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
    app.add_option("--set", config.set_source, "Vector-set file, or 'builtin'")->capture_default_str();
    app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
    app.add_option("--rounds", config.rounds, "Rounds to play")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--strategy", config.strategy, "quantum | best-classical | one-cbit | deterministic:<file> | mixture:<file>")
        ->capture_default_str();
    app.add_option("--format", config.format, "human | json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--alice-basis", config.alice_basis, "Alice's basis for inspect")->check(CLI::Range(1, 64));
    app.add_option("--bob-basis", config.bob_basis, "Bob's basis for inspect")->check(CLI::Range(1, 64));
    app.add_option("--samples", config.samples, "Monte Carlo samples per hvt2d grid pair")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--grid", config.grid, "Number of hvt2d grid pairs")->check(CLI::Range(3, 100000))->capture_default_str();
    app.add_option("--threads", config.threads, "Worker threads for play")->check(CLI::Range(1, 256))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::ParseError &ex) {
        err << "error: " << ex.what() << "\n";
        return EXIT_TOOL_ERROR;
    }
    return run(config, out, err);
}

}  // namespace kstele
