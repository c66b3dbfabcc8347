// toricorb: equivariant cohomology and Chen-Ruan rings of labeled simple
// polytopes from the command line.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toric/chen_ruan.hpp"
#include "toric/io.hpp"
#include "toric/nh_restriction.hpp"
#include "toric/properties.hpp"
#include "toric/report.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kParse = 2 };

struct Options {
    std::string file;
    std::string format = "pretty";
    unsigned degree_bound = 3;
    bool strict_z = false;
    std::size_t samples = 100;
    std::uint64_t seed = 20120401;
    std::string lhs;
    std::string rhs;
};

void emit(const Options& opt, const toric::report::Json& machine, const std::string& pretty) {
    if (opt.format == "machine") {
        std::cout << machine.dump(2) << "\n";
    } else {
        std::cout << pretty;
    }
}

int run(const std::string& command, const Options& opt) {
    const toric::LabeledPolytope polytope = toric::io::read_polytope_file(opt.file);
    const auto diagnostic = toric::validate(polytope);
    if (command == "validate" || diagnostic) {
        emit(opt, toric::report::diagnostic_json(diagnostic), toric::report::diagnostic_pretty(diagnostic));
        return diagnostic ? kValidation : kOk;
    }

    const auto ring = toric::ChenRuanRing::from_polytope(polytope);
    const auto& fc = ring.complex();
    namespace r = toric::report;

    if (command == "vertices") {
        emit(opt, r::vertices_json(fc), r::vertices_pretty(fc));
    } else if (command == "complex") {
        emit(opt, r::complex_json(fc), r::complex_pretty(fc));
    } else if (command == "sectors") {
        emit(opt, r::sectors_json(ring.sectors()), r::sectors_pretty(ring.sectors()));
    } else if (command == "sr") {
        emit(opt, r::sr_json(ring.sectors()), r::sr_pretty(ring.sectors()));
    } else if (command == "product-table") {
        emit(opt, r::product_table_json(ring), r::product_table_pretty(ring));
    } else if (command == "multiply") {
        const auto a = toric::io::parse_class(opt.lhs, ring);
        const auto b = toric::io::parse_class(opt.rhs, ring);
        const auto product = ring.multiply(a, b);
        emit(opt, r::class_json(ring, product), r::class_pretty(ring, product));
    } else if (command == "restrict") {
        const auto a = toric::io::parse_class(opt.lhs, ring);
        const toric::NHRing nh(ring);
        const auto restricted = nh.restrict(a);
        emit(opt, r::nh_json(ring, restricted), r::nh_pretty(ring, restricted));
    } else if (command == "check") {
        toric::PropertyOptions po;
        po.degree_bound = opt.degree_bound;
        po.strict_z = opt.strict_z;
        po.samples = opt.samples;
        po.seed = opt.seed;
        const auto results = toric::run_property_suite(ring, po);
        emit(opt, r::check_json(results), r::check_pretty(results));
        for (const auto& res : results)
            if (!res.passed) return kValidation;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant (Chen-Ruan) cohomology of symplectic toric orbifolds from labeled polytopes"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", opt.file, "Polytope file")->required();
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"pretty", "machine"}))
            ->capture_default_str();
    };

    add_common(app.add_subcommand("validate", "Check that the input is a valid labeled simple polytope"));
    add_common(app.add_subcommand("vertices", "List vertices and their facet sets"));
    add_common(app.add_subcommand("complex", "Minimal non-faces and edges of the facet complex"));
    add_common(app.add_subcommand("sectors", "Twisted sectors, ages and sector ideals"));
    add_common(app.add_subcommand("sr", "Stanley-Reisner presentation and sector modules"));
    add_common(app.add_subcommand("product-table", "Products of sector identities"));

    auto* multiply = app.add_subcommand("multiply", "Orbifold product of two classes");
    add_common(multiply);
    multiply->add_option("lhs", opt.lhs, "First class, e.g. '2*x1 @ 0 + 1 @ 1'")->required();
    multiply->add_option("rhs", opt.rhs, "Second class")->required();

    auto* restrict_cmd = app.add_subcommand("restrict", "Restrict a class to the fixed points");
    add_common(restrict_cmd);
    restrict_cmd->add_option("class", opt.lhs, "Class, e.g. 'x3 @ 0'")->required();

    auto* check = app.add_subcommand("check", "Run the ring-axiom, grading, homomorphism and injectivity checks");
    add_common(check);
    check->add_option("--degree-bound", opt.degree_bound, "Degree bound for the injectivity rank check")
        ->capture_default_str();
    check->add_flag("--strict-z", opt.strict_z, "Also require unit elementary divisors over Z");
    check->add_option("--samples", opt.samples, "Random triples per property")->capture_default_str();
    check->add_option("--seed", opt.seed, "Random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opt);
    } catch (const toric::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (e.condition() == "ParseError" || e.condition() == "IOError") ? kParse : kValidation;
    }
}
