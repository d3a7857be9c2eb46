// dna: command-line front end.
//
// Exit status: 0 success, 1 property violation found, 2 invalid input.

#include <dna/dna.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_invalid = 2;

constexpr double violation_tol = 1e-9;

void print(const dna::Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_metrics(const std::string& file) {
    const auto poly = dna::planar_from_json(dna::read_json_file(file));
    const auto verdict = dna::dna_check(poly);
    print(dna::to_json(verdict));
    return verdict.margin < -violation_tol ? exit_violation : exit_ok;
}

int cmd_improve(const std::string& file, const std::string& trace_csv, const std::string& svg_dir) {
    const auto poly = dna::planar_from_json(dna::read_json_file(file));
    const auto [result, trace] = dna::improve_to_circuit(poly);
    const auto k = dna::is_multiple_circuit(result, trace.container);
    const auto bad_step = dna::hull_monotonicity_violation(trace);

    if (!trace_csv.empty()) {
        std::ofstream os(trace_csv);
        if (!os) {
            throw dna::IoError("cannot write " + trace_csv);
        }
        dna::write_trace_csv(trace, os);
    }
    dna::Json out{{"steps", trace.size()},
                  {"initial", dna::to_json(dna::dna_check(poly))},
                  {"final", dna::to_json(dna::dna_check(result))},
                  {"k", k ? dna::Json(*k) : dna::Json(nullptr)},
                  {"hull_monotone", !bad_step.has_value()},
                  {"polyline", dna::to_json(result)}};
    if (!svg_dir.empty()) {
        out["svg_frames"] = dna::emit_svg(trace, svg_dir).size();
    }
    print(out);
    return k && !bad_step ? exit_ok : exit_violation;
}

int cmd_fuzz(const std::string& property, std::uint64_t count, std::uint64_t seed, std::size_t max_vertices,
             unsigned threads, bool timing) {
    const auto p = dna::property_from_string(property);
    if (!p) {
        throw dna::InvalidInput("unknown property \"" + property + "\"");
    }
    dna::FuzzConfig cfg;
    cfg.property = *p;
    cfg.count = count;
    cfg.seed = seed;
    if (max_vertices != 0) {
        cfg.max_vertices = max_vertices;
    }
    cfg.threads = threads;
    cfg.timing = timing;
    const auto report = dna::run_fuzz(cfg);
    print(dna::to_json(report));
    return report.ok() ? exit_ok : exit_violation;
}

int cmd_sphere_check(const std::string& file) {
    const auto poly = dna::spherical_from_json(dna::read_json_file(file));
    const auto verdict = dna::theorem_s_check(poly);
    print(dna::to_json(verdict));
    return verdict.margin < -violation_tol ? exit_violation : exit_ok;
}

int cmd_hyperbolic_demo(double t) {
    const auto r = dna::counterexample(t);
    auto j = dna::to_json(r);
    j["dna_holds"] = r.margin >= 0.0;
    print(j);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mean absolute curvature of closed polylines and the DNA inequality"};
    app.require_subcommand(1);

    std::string file, trace_csv, svg_dir, property;
    std::uint64_t count = 1000, seed = 0;
    std::size_t max_vertices = 0;
    unsigned threads = 0;
    bool timing = false;
    double t = 20.0;

    auto* metrics = app.add_subcommand("metrics", "L, V, T, hull perimeter and DNA margin of a planar polyline");
    metrics->add_option("file", file, "planar polyline JSON")->required();

    auto* improve = app.add_subcommand("improve", "Improve a planar polyline to a multiple circuit of its hull");
    improve->add_option("file", file, "planar polyline JSON")->required();
    improve->add_option("--trace", trace_csv, "write the move trace as CSV");
    improve->add_option("--svg", svg_dir, "write one SVG frame per step into this directory");

    auto* fuzz = app.add_subcommand("fuzz", "Seeded fuzz campaign over one property");
    fuzz->add_option("--property", property, "lemma4|lemma5|dna|improve|lemma1s|lemma2s|lemma3s|theorem_s")
        ->required();
    fuzz->add_option("--count", count, "number of instances");
    fuzz->add_option("--seed", seed, "campaign seed");
    fuzz->add_option("--max-vertices", max_vertices, "largest polyline size")->check(CLI::Range(3, 1000));
    fuzz->add_option("--threads", threads, "worker threads (0: hardware concurrency)");
    fuzz->add_flag("--timing", timing, "include wall time in the report");

    auto* sphere = app.add_subcommand("sphere", "Spherical checks");
    sphere->require_subcommand(1);
    auto* sphere_check = sphere->add_subcommand("check", "Spherical DNA check of a polyline");
    sphere_check->add_option("file", file, "spherical polyline JSON")->required();

    auto* hyperbolic = app.add_subcommand("hyperbolic", "Hyperbolic plane");
    hyperbolic->require_subcommand(1);
    auto* demo = hyperbolic->add_subcommand("demo", "Evaluate the counterexample family at parameter t");
    demo->add_option("--t", t, "side length parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*metrics) {
            return cmd_metrics(file);
        }
        if (*improve) {
            return cmd_improve(file, trace_csv, svg_dir);
        }
        if (*fuzz) {
            return cmd_fuzz(property, count, seed, max_vertices, threads, timing);
        }
        if (*sphere_check) {
            return cmd_sphere_check(file);
        }
        if (*demo) {
            return cmd_hyperbolic_demo(t);
        }
    } catch (const dna::NonTermination& e) {
        std::cerr << "dna: " << e.what() << '\n';
        return exit_violation;
    } catch (const dna::InvalidInput& e) {
        std::cerr << "dna: invalid input: " << e.what() << '\n';
        return exit_invalid;
    } catch (const dna::DegenerateInput& e) {
        std::cerr << "dna: degenerate input: " << e.what() << '\n';
        return exit_invalid;
    } catch (const dna::PreconditionError& e) {
        std::cerr << "dna: " << e.what() << '\n';
        return exit_invalid;
    } catch (const dna::DomainError& e) {
        std::cerr << "dna: " << e.what() << '\n';
        return exit_invalid;
    } catch (const dna::IoError& e) {
        std::cerr << "dna: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}
