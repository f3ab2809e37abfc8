// Command-line front end: parse ribbon-graph files, evaluate intersection
// norms and dual unit balls, certify realizability, realize torus polygons,
// and run the bundled corpus.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "intnorm/corpus.hpp"
#include "intnorm/errors.hpp"
#include "intnorm/format.hpp"
#include "intnorm/norm.hpp"
#include "intnorm/thurston.hpp"

namespace {

using namespace intnorm;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string render_certificate(const CertificateReport& report) {
    std::ostringstream out;
    out << "genus: " << report.genus << "\n";
    out << "components: " << report.component_count << "\n";
    out << "certificate:";
    if (report.certificate) {
        for (int e : report.certificate.value()) out << " " << (e > 0 ? "+1" : "-1");
    } else {
        out << " NONE";
    }
    out << "\n";
    if (report.ball) {
        out << "ball:\n" << to_text(*report.ball);
        out << "basis:\n";
        for (size_t j = 0; j < report.basis.size(); ++j) {
            out << "delta " << j + 1 << ":";
            for (std::int64_t t : report.basis[j]) out << " " << t;
            out << "\n";
        }
    }
    out << "verdict: " << verdict_name(report.verdict) << "\n";
    out << "statement: " << report.statement << "\n";
    return out.str();
}

int run_check(const std::string& path, bool quiet) {
    const RibbonGraph g = RibbonGraph::parse(read_file(path));
    std::cout << "vertices: " << g.vertex_count() << "\n"
              << "edges: " << g.edge_count() << "\n"
              << "faces: " << g.face_count() << "\n"
              << "genus: " << g.genus() << "\n"
              << "components: " << g.components().size() << "\n";
    if (g.genus() == 0 && !quiet)
        std::cerr << "note: genus 0, norm operations on this input are trivial\n";
    return 0;
}

int run_norm(const std::string& path, const std::string& cls, bool oracle, int bound,
             int max_edges) {
    const RibbonGraph g = RibbonGraph::parse(read_file(path));
    if (g.genus() == 0) throw TrivialNorm("genus 0: trivial norm");
    const HomologyModel m = HomologyModel::build(g);
    const ClassVector a = parse_class_vector(cls);
    std::int64_t value = 0;
    if (oracle) {
        value = norm_oracle(m, a, OracleLimits{bound});
    } else {
        const LatticePolytope ball = dual_unit_ball(g, m, EnumerationLimits{max_edges});
        value = norm(ball, a);
    }
    std::cout << value << "\n";
    return 0;
}

int run_ball(const std::string& path, int max_edges) {
    const RibbonGraph g = RibbonGraph::parse(read_file(path));
    if (g.genus() == 0) throw TrivialNorm("genus 0: trivial norm");
    const HomologyModel m = HomologyModel::build(g);
    const LatticePolytope ball = dual_unit_ball(g, m, EnumerationLimits{max_edges});
    std::cout << to_text(ball);
    std::cout << "symmetric: " << (ball.is_symmetric() ? "true" : "false") << "\n";
    std::cout << "parity: " << (ball.parity_property() ? "true" : "false") << "\n";
    return 0;
}

int run_certify(const std::string& path, int max_edges) {
    const RibbonGraph g = RibbonGraph::parse(read_file(path));
    std::cout << render_certificate(certify(g, EnumerationLimits{max_edges}));
    return 0;
}

int run_realize(const std::string& path) {
    const LatticePolytope polygon = parse_polygon(read_file(path));
    for (const auto& geo : realize_torus_polygon(polygon))
        std::cout << "geodesic: p=" << geo.p << " q=" << geo.q
                  << " m=" << geo.multiplicity << "\n";
    return 0;
}

int run_corpus(int max_edges) {
    int failures = 0;
    const auto items = corpus();
    for (const auto& item : items) {
        std::string reason;
        try {
            const RibbonGraph g = RibbonGraph::parse(item.text);
            if (g.genus() != item.genus)
                reason = "genus " + std::to_string(g.genus()) + ", expected " +
                         std::to_string(item.genus);
            else if (static_cast<int>(g.components().size()) != item.components)
                reason = "component count " + std::to_string(g.components().size()) +
                         ", expected " + std::to_string(item.components);
            else if (g.genus() > 0) {
                const HomologyModel m = HomologyModel::build(g);
                const LatticePolytope ball = dual_unit_ball(g, m, EnumerationLimits{max_edges});
                if (!ball.is_symmetric())
                    reason = "ball is not symmetric";
                else if (!ball.parity_property())
                    reason = "ball fails the parity property";
                else if (item.expected_ball && to_text(ball) != item.expected_ball)
                    reason = "ball differs from the expected polytope";
            }
        } catch (const std::exception& e) {
            reason = e.what();
        }
        if (reason.empty()) {
            std::cout << item.name << ": PASS\n";
        } else {
            std::cout << item.name << ": FAIL (" << reason << ")\n";
            ++failures;
        }
    }
    std::cout << "result: " << (items.size() - failures) << "/" << items.size()
              << " PASS\n";
    return failures == 0 ? 0 : 1;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const DimensionMismatch*>(&e)) return 2;
    if (dynamic_cast<const ValidationError*>(&e)) return 3;
    if (dynamic_cast<const TrivialNorm*>(&e)) return 4;
    if (dynamic_cast<const Degenerate*>(&e)) return 4;
    if (dynamic_cast<const SingleSlope*>(&e)) return 4;
    if (dynamic_cast<const DegenerateSmoothing*>(&e)) return 4;
    if (dynamic_cast<const NotSymmetric*>(&e)) return 4;
    if (dynamic_cast<const ParityFailure*>(&e)) return 4;
    if (dynamic_cast<const NotClosed*>(&e)) return 4;
    if (dynamic_cast<const ResourceLimit*>(&e)) return 5;
    if (dynamic_cast<const Unconverged*>(&e)) return 5;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intersection norms of filling curve collections on closed oriented surfaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool quiet = false;
    int max_edges = 24;
    app.add_flag("--quiet", quiet, "suppress informational notes");
    app.add_option("--max-edges", max_edges, "cap on edges for coorientation enumeration");

    std::string path, cls;
    bool oracle = false;
    int bound = 6;

    auto* cmd_check = app.add_subcommand("check", "parse a collection and report its invariants");
    cmd_check->add_option("path", path)->required();

    auto* cmd_norm = app.add_subcommand("norm", "evaluate the norm of a class");
    cmd_norm->add_option("path", path)->required();
    cmd_norm->add_option("class", cls, "comma-separated integers of length 2g")->required();
    cmd_norm->add_flag("--oracle", oracle, "use the min-weight cycle search instead");
    cmd_norm->add_option("--bound", bound, "deepening cap for the oracle");

    auto* cmd_ball = app.add_subcommand("ball", "print the dual unit ball");
    cmd_ball->add_option("path", path)->required();

    auto* cmd_certify = app.add_subcommand("certify", "certify realizability as a Thurston-norm ball");
    cmd_certify->add_option("path", path)->required();

    auto* cmd_realize = app.add_subcommand("realize-torus", "realize a symmetric parity polygon on the torus");
    cmd_realize->add_option("path", path)->required();

    auto* cmd_corpus = app.add_subcommand("corpus", "run the bundled example corpus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_check->parsed()) return run_check(path, quiet);
        if (cmd_norm->parsed()) return run_norm(path, cls, oracle, bound, max_edges);
        if (cmd_ball->parsed()) return run_ball(path, max_edges);
        if (cmd_certify->parsed()) return run_certify(path, max_edges);
        if (cmd_realize->parsed()) return run_realize(path);
        if (cmd_corpus->parsed()) return run_corpus(max_edges);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    }
    return 1;
}
