// Command-line front end: orbit / omega-limit / p-iterate / continuity /
// dichotomy / semigroup / crt analyses and the omega2 reproduction suite.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordyn/continuity.hpp"
#include "ordyn/dynamics.hpp"
#include "ordyn/fixtures.hpp"
#include "ordyn/iterates.hpp"
#include "ordyn/repro.hpp"
#include "ordyn/ultrafilter.hpp"

using json = nlohmann::ordered_json;
using namespace ordyn;

namespace {

struct LoadedSystem {
    std::string name;
    SpaceSpec space;
    MapSpec map;
    std::shared_ptr<const ContinuityCertifier> certifier;
    bool accumulation_points_periodic = false;

    LoadedSystem(std::string n, SpaceSpec s, MapSpec m,
                 std::shared_ptr<const ContinuityCertifier> c, bool app)
        : name(std::move(n)), space(std::move(s)), map(std::move(m)), certifier(std::move(c)),
          accumulation_points_periodic(app) {}

    DynMap as_map() const { return map.as_map(name); }
};

LoadedSystem load_system(const std::string& fixture, const std::string& map_file,
                         const std::string& space_text) {
    if (!fixture.empty() && !map_file.empty())
        throw DomainError("use at most one of --fixture and --map");
    if (!fixture.empty()) {
        fixtures::Fixture fx = fixtures::by_name(fixture);
        return LoadedSystem(fx.name, fx.space, fx.map, fx.certifier,
                            fx.metadata.accumulation_points_periodic);
    }
    if (map_file.empty()) throw DomainError("one of --fixture or --map is required");
    std::ifstream in(map_file);
    if (!in) throw DomainError("cannot open map file " + map_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string source = buffer.str();

    std::string top_text = space_text;
    if (top_text.empty()) {
        // optional "# space: <point>" directive in the file
        std::istringstream lines(source);
        std::string line;
        while (std::getline(lines, line)) {
            const auto pos = line.find("# space:");
            if (pos != std::string::npos) {
                top_text = line.substr(pos + 8);
                break;
            }
        }
    }
    if (top_text.empty())
        throw DomainError("map files need --space <point> or a '# space: <point>' line");
    const auto first = top_text.find_first_not_of(" \t");
    const auto last = top_text.find_last_not_of(" \t\r");
    top_text = top_text.substr(first, last - first + 1);

    SpaceSpec space{Point::parse(top_text), map_file};
    MapSpec map = MapSpec::parse(source, space);
    map.validate_total(8);
    return LoadedSystem(map_file, space, std::move(map), nullptr, false);
}

json point_list(const std::vector<Point>& pts) {
    json out = json::array();
    for (const Point& p : pts) out.push_back(p.str());
    return out;
}

json orbit_json(const OrbitRecord& rec) {
    json out;
    if (rec.eventually_periodic()) {
        out["kind"] = "eventually-periodic";
        out["transient"] = rec.ep().transient;
        out["period"] = rec.ep().period;
        out["listing"] = point_list(rec.ep().listing);
    } else if (rec.converges_to_cycle()) {
        out["kind"] = "converges-to-cycle";
        out["cycle_point"] = rec.ctc().cycle_point.str();
        out["period"] = rec.ctc().period;
        out["phase"] = rec.ctc().phase;
        out["evidence_depth"] = rec.ctc().evidence_depth;
    } else {
        out["kind"] = "unresolved";
        out["budget"] = std::get<Unresolved>(rec.kind).budget;
    }
    return out;
}

json table_json(const IterateTable& t) {
    json records = json::array();
    for (std::size_t i = 0; i < t.domain.size(); ++i)
        records.push_back(json{{"point", t.domain[i].str()}, {"value", t.values[i].str()}});
    return records;
}

json verdict_json(const ContinuityVerdict& v) {
    json out;
    out["point"] = v.point.str();
    out["function"] = v.function;
    out["status"] = to_string(v.status);
    if (!v.method.empty()) out["method"] = v.method;
    out["depth"] = v.depth;
    if (v.certificate) {
        json cert;
        cert["witness_family"] = v.certificate->family.description;
        cert["image_tail_index"] = v.certificate->tail_index;
        cert["image_target"] = v.certificate->image_target.str();
        json terms = json::array();
        for (std::uint32_t k = 0; k < 8; ++k) terms.push_back(v.certificate->family.at(k).str());
        cert["family_prefix"] = terms;
        cert["violating_indices"] = v.certificate->violating_indices;
        out["certificate"] = cert;
    }
    return out;
}

void emit(const json& report, const std::string& out_path, const std::string& csv = "") {
    const std::string text = csv.empty() ? report.dump(2) + "\n" : csv;
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw DomainError("cannot write " + out_path);
        out << text;
    }
}

std::vector<ResidueSystem> sample_systems(std::size_t count, std::uint64_t seed) {
    std::vector<ResidueSystem> samples{parse_ultrafilter_spec("residues: n-1 on primes"),
                                       parse_ultrafilter_spec(
                                           "residues: (n+1)/2 on odd primes; 2 -> 1"),
                                       ResidueSystem::zero()};
    std::mt19937_64 rng(seed);
    while (samples.size() < count) {
        const std::uint64_t m = 2 + rng() % 2400;
        samples.push_back(ResidueSystem::table({{m, rng() % m}}));
    }
    if (samples.size() > count) samples.erase(samples.begin() + count, samples.end());
    return samples;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordyn: iterates, ultrafilter traces and continuity on countable ordinal spaces"};
    app.require_subcommand(1);

    std::string fixture, map_file, space_text, point_text, ultrafilter_spec, out_path;
    std::string format = "json", constraints;
    std::uint64_t budget = kDefaultOrbitBudget, truncation_cap = 8, seed = 2026, moduli_bound = 64;
    std::uint32_t depth = 12;
    std::size_t sample_count = 8;

    auto add_system_opts = [&](CLI::App* cmd) {
        cmd->add_option("--fixture", fixture, "built-in fixture name");
        cmd->add_option("--map", map_file, ".dynmap file");
        cmd->add_option("--space", space_text, "top ordinal for --map files, e.g. w^2");
        cmd->add_option("--out", out_path, "write the report here instead of stdout");
        cmd->add_option("--budget", budget, "orbit analysis step budget");
    };

    CLI::App* orbit = app.add_subcommand("orbit", "analyze one orbit");
    add_system_opts(orbit);
    orbit->add_option("--point", point_text, "point, e.g. w*3")->required();

    CLI::App* omega = app.add_subcommand("omega", "omega-limit set of a point");
    add_system_opts(omega);
    omega->add_option("--point", point_text, "point")->required();

    CLI::App* piterate = app.add_subcommand("piterate", "p-iterate of a point or truncation");
    add_system_opts(piterate);
    piterate->add_option("--ultrafilter", ultrafilter_spec, "residue-system presentation")
        ->required();
    piterate->add_option("--point", point_text, "single point");
    piterate->add_option("--truncation", truncation_cap, "coefficient cap for the table");
    piterate->add_option("--format", format, "json or csv");

    CLI::App* continuity = app.add_subcommand("continuity", "continuity verdict at a point");
    add_system_opts(continuity);
    continuity->add_option("--ultrafilter", ultrafilter_spec, "residue-system presentation")
        ->required();
    continuity->add_option("--point", point_text, "point")->required();
    continuity->add_option("--depth", depth, "tail depth");

    CLI::App* dichotomy = app.add_subcommand("dichotomy", "per-point verdict grid");
    add_system_opts(dichotomy);
    dichotomy->add_option("--samples", sample_count, "number of sampled residue systems");
    dichotomy->add_option("--seed", seed, "sampling seed");
    dichotomy->add_option("--truncation", truncation_cap, "coefficient cap");
    dichotomy->add_option("--depth", depth, "tail depth");

    CLI::App* semigroup = app.add_subcommand("semigroup", "restricted Ellis semigroup");
    add_system_opts(semigroup);
    semigroup->add_option("--truncation", truncation_cap, "coefficient cap");
    semigroup->add_option("--moduli-bound", moduli_bound, "largest admissible period");
    semigroup->add_option("--format", format, "json or csv");

    CLI::App* crt = app.add_subcommand("crt", "solve simultaneous congruences");
    crt->add_option("--constraints", constraints, "comma list modulus:residue, e.g. 3:2,5:4")
        ->required();
    crt->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* repro_cmd = app.add_subcommand("repro", "run the reproduction suite of a fixture");
    std::string repro_target;
    repro_cmd->add_option("target", repro_target, "fixture name (example-omega2)")->required();
    repro_cmd->add_option("--seed", seed, "randomized-criteria seed");
    repro_cmd->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints usage or the error
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        if (budget == 0) throw DomainError("--budget must be positive");
        if (*orbit || *omega) {
            const LoadedSystem sys = load_system(fixture, map_file, space_text);
            const Point x = Point::parse(point_text);
            json report;
            report["command"] = *orbit ? "orbit" : "omega";
            report["system"] = sys.name;
            report["point"] = x.str();
            report["budget"] = budget;
            if (*orbit) {
                report["orbit"] = orbit_json(orbit_analyze(sys.as_map(), x, budget));
            } else {
                auto lim = omega_limit(sys.as_map(), x, budget);
                if (std::holds_alternative<Unresolved>(lim)) {
                    report["omega_limit"] = "unresolved";
                } else {
                    report["omega_limit"] = point_list(std::get<std::vector<Point>>(lim));
                }
            }
            emit(report, out_path);
            return 0;
        }

        if (*piterate) {
            const LoadedSystem sys = load_system(fixture, map_file, space_text);
            const ResidueSystem p = parse_ultrafilter_spec(ultrafilter_spec);
            json report;
            report["command"] = "piterate";
            report["system"] = sys.name;
            report["ultrafilter"] = p.describe();
            if (!point_text.empty()) {
                const Point x = Point::parse(point_text);
                const PIterateResult r = p_iterate_point(sys.as_map(), p, x, budget);
                report["point"] = x.str();
                report["value"] = std::holds_alternative<Point>(r)
                                      ? json(std::get<Point>(r).str())
                                      : json("unresolved");
                emit(report, out_path);
            } else {
                const IterateTable t =
                    p_iterate_table(sys.as_map(), p, truncation(sys.space, truncation_cap), budget);
                report["truncation"] = truncation_cap;
                report["table"] = table_json(t);
                emit(report, out_path, format == "csv" ? t.to_csv() : "");
            }
            return 0;
        }

        if (*continuity) {
            const LoadedSystem sys = load_system(fixture, map_file, space_text);
            const ResidueSystem p = parse_ultrafilter_spec(ultrafilter_spec);
            const Point x = Point::parse(point_text);
            const ContinuityVerdict v =
                continuity_at(sys.map, p, x, depth, sys.certifier.get(), budget);
            json report;
            report["command"] = "continuity";
            report["system"] = sys.name;
            report["ultrafilter"] = p.describe();
            report["verdict"] = verdict_json(v);
            if (v.certificate)
                report["verdict"]["replay"] = replay_certificate(sys.as_map(), p, v, depth, budget);
            emit(report, out_path);
            return 0;
        }

        if (*dichotomy) {
            const LoadedSystem sys = load_system(fixture, map_file, space_text);
            const std::vector<ResidueSystem> samples = sample_systems(sample_count, seed);
            const DichotomyReport rep =
                dichotomy_scan(sys.as_map(), sys.accumulation_points_periodic, samples,
                               truncation_cap, depth, sys.certifier.get(), false, budget);
            json report;
            report["command"] = "dichotomy";
            report["system"] = sys.name;
            report["seed"] = seed;
            report["accumulation_points_periodic"] = rep.accumulation_points_periodic;
            report["samples"] = rep.samples;
            json grid = json::array();
            for (std::size_t i = 0; i < rep.points.size(); ++i) {
                json row;
                row["point"] = rep.points[i].str();
                json verdicts = json::array();
                for (const auto st : rep.grid[i]) verdicts.push_back(to_string(st));
                row["verdicts"] = verdicts;
                grid.push_back(row);
            }
            report["grid"] = grid;
            report["mixed_points"] = point_list(rep.mixed_points);
            report["unresolved_points"] = point_list(rep.unresolved_points);
            report["homogeneous"] = rep.homogeneous;
            report["falsifications"] = point_list(rep.falsifications);
            emit(report, out_path);
            return rep.falsifications.empty() ? 0 : 1;
        }

        if (*semigroup) {
            const LoadedSystem sys = load_system(fixture, map_file, space_text);
            const SemigroupTable s = semigroup_table(
                sys.as_map(), truncation(sys.space, truncation_cap), moduli_bound, budget);
            json report;
            report["command"] = "semigroup";
            report["system"] = sys.name;
            report["truncation"] = truncation_cap;
            report["modulus"] = s.modulus;
            report["horizon"] = s.horizon;
            report["closed"] = s.closed;
            report["element_count"] = s.elements.size();
            report["free_count"] = s.free_count();
            report["free_only_count"] = s.free_only_count();
            json elems = json::array();
            std::ostringstream csv;
            csv << "index,finite_reps,free_reps\n";
            for (std::size_t i = 0; i < s.elements.size(); ++i) {
                const SemigroupElement& e = s.elements[i];
                json el;
                el["index"] = i;
                el["finite_reps"] = e.finite_reps;
                el["free_reps"] = e.free_reps;
                el["table"] = table_json(e.table);
                elems.push_back(el);
                csv << i << ",";
                for (std::size_t j = 0; j < e.finite_reps.size(); ++j)
                    csv << (j ? " " : "") << "f^" << e.finite_reps[j];
                csv << ",";
                for (std::size_t j = 0; j < e.free_reps.size(); ++j)
                    csv << (j ? " " : "") << e.free_reps[j];
                csv << "\n";
            }
            report["elements"] = elems;
            emit(report, out_path, format == "csv" ? csv.str() : "");
            return s.closed ? 0 : 1;
        }

        if (*crt) {
            CongruenceConstraintSet cs;
            std::istringstream in(constraints);
            std::string item;
            while (std::getline(in, item, ',')) {
                const auto colon = item.find(':');
                if (colon == std::string::npos)
                    throw DomainError("constraint must look like modulus:residue");
                cs.push_back(Congruence{std::stoull(item.substr(0, colon)),
                                        std::stoull(item.substr(colon + 1))});
            }
            const CrtResult r = crt_solve(cs);
            json report;
            report["command"] = "crt";
            json cons = json::array();
            for (const Congruence& c : cs)
                cons.push_back(json{{"modulus", c.modulus}, {"residue", c.residue}});
            report["constraints"] = cons;
            if (std::holds_alternative<Progression>(r)) {
                const Progression& prog = std::get<Progression>(r);
                report["result"] = "progression";
                report["modulus"] = prog.modulus;
                report["residue"] = prog.residue;
            } else {
                const CrtConflict& c = std::get<CrtConflict>(r);
                report["result"] = "inconsistent";
                report["conflict"] =
                    json::array({json{{"modulus", c.a.modulus}, {"residue", c.a.residue}},
                                 json{{"modulus", c.b.modulus}, {"residue", c.b.residue}}});
            }
            emit(report, out_path);
            return 0;
        }

        if (*repro_cmd) {
            if (repro_target != "example-omega2")
                throw DomainError("unknown reproduction target: " + repro_target);
            repro::Options opts;
            opts.seed = seed;
            const std::vector<repro::CriterionResult> results = repro::run_suite(false, opts);
            json report;
            report["command"] = "repro";
            report["target"] = repro_target;
            report["seed"] = seed;
            json criteria = json::array();
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << repro::format_line(r) << "\n";
                // timings stay on the console; the report is byte-deterministic
                criteria.push_back(json{{"id", r.id},
                                        {"status", r.pass ? "pass" : "fail"},
                                        {"detail", r.detail}});
                all_pass = all_pass && r.pass;
            }
            report["criteria"] = criteria;
            report["all_pass"] = all_pass;
            if (!out_path.empty()) emit(report, out_path);
            return all_pass ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "ordyn: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
