// Command line front end. Subcommands:
//   poly          polynomial of a chord diagram (tracing) or graph (corank)
//   genus         ribbon statistics of a partially Petrialed chord diagram
//   trace         boundary walks of a chord diagram
//   witness       make or check reduction certificates
//   check-theorem exhaustive and randomized sweeps of the main claims
// Exit codes: 0 pass, 1 property failure, 2 bad input, 3 resource guard.
// Stdout is deterministic for a fixed invocation; timings go to stderr.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "petrial/bouquet.hpp"
#include "petrial/errors.hpp"
#include "petrial/graph.hpp"
#include "petrial/harness.hpp"
#include "petrial/poly.hpp"
#include "petrial/witness.hpp"

namespace {

using namespace petrial;
using nlohmann::ordered_json;

constexpr const char* kVersion = "petrial 1.0.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
    std::uint64_t value = 0;
    std::size_t used = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        throw InvalidInputError(what + " must be a positive integer, got '" + text + "'");
    }
    if (used != text.size() || text[0] == '-' || value == 0)
        throw InvalidInputError(what + " must be a positive integer, got '" + text + "'");
    return value;
}

// "--shard i/k" with 1 <= i <= k.
Shard parse_shard(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        throw InvalidInputError("shard must look like i/k, got '" + text + "'");
    Shard s;
    s.index = parse_count(text.substr(0, slash), "shard index");
    s.count = parse_count(text.substr(slash + 1), "shard count");
    if (s.index > s.count)
        throw InvalidInputError("shard index " + std::to_string(s.index) +
                                " exceeds shard count " + std::to_string(s.count));
    return s;
}

struct Global {
    std::string format = "text";
    std::uint64_t max_n = 0;
    bool has_max_n = false;
    Shard shard;
};

EvalOptions eval_options(const Global& g) {
    EvalOptions opt;
    if (g.has_max_n) opt.max_n = static_cast<std::size_t>(g.max_n);
    return opt;
}

void emit(const Global& g, const ordered_json& j, const std::string& text) {
    if (g.format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

// ---------------------------------------------------------------- poly ----

struct PolyInputs {
    std::string mode; // empty means: tracing for diagrams, corank for graphs
    std::string word;
    std::string edges;
    std::string file;
    std::string input_kind = "cdf";
};

Bouquet single_diagram(const std::string& text) {
    auto all = parse_bouquet_file(text);
    if (all.size() != 1)
        throw InvalidInputError("expected exactly one chord diagram, got " +
                                std::to_string(all.size()));
    return all[0];
}

int run_poly(const Global& g, const PolyInputs& in) {
    int sources = (!in.word.empty()) + (!in.edges.empty()) + (!in.file.empty());
    if (sources != 1)
        throw InvalidInputError("give exactly one of --word, --edges, --file");

    bool have_bouquet = false;
    Bouquet b;
    SimpleGraph graph;
    if (!in.word.empty()) {
        b = parse_bouquet_line(in.word);
        have_bouquet = true;
    } else if (!in.edges.empty()) {
        graph = parse_edge_list(in.edges);
    } else if (in.input_kind == "cdf") {
        b = single_diagram(read_file(in.file));
        have_bouquet = true;
    } else {
        graph = parse_edge_list(read_file(in.file));
    }

    std::string mode = in.mode;
    if (mode.empty()) mode = have_bouquet ? "tracing" : "corank";
    if (!have_bouquet && mode != "corank")
        throw PreconditionError("mode '" + mode +
                                "' needs a chord diagram; a plain graph only supports --mode corank");

    const EvalOptions opt = eval_options(g);
    ordered_json j;
    j["mode"] = mode;
    j["input"] = have_bouquet ? "cdf" : "graph";

    if (mode == "both") {
        PetrialPolynomial by_trace = poly_by_tracing(b, opt);
        PetrialPolynomial by_corank = poly_by_corank(b.intersection_graph(), opt);
        bool equal = by_trace == by_corank;
        j["tracing"] = by_trace.to_json();
        j["corank"] = by_corank.to_json();
        j["equal"] = equal;
        std::string text = equal ? by_trace.text() + "\nEQUAL\n"
                                 : "tracing: " + by_trace.text() + "\ncorank: " +
                                       by_corank.text() + "\nUNEQUAL\n";
        emit(g, j, text);
        return equal ? 0 : 1;
    }

    PetrialPolynomial p;
    if (mode == "tracing") {
        p = poly_by_tracing(b, opt);
    } else if (have_bouquet) {
        p = poly_by_corank(b.intersection_graph(), opt);
    } else {
        p = poly_by_corank(graph, opt);
        j["extension"] = "corank-sum";
        std::cerr << "note: plain-graph input; the corank sum equals the partial Petrial"
                     " polynomial only when the graph is a circle graph\n";
    }
    j["polynomial"] = p.to_json();
    emit(g, j, p.text() + "\n");
    return 0;
}

// ------------------------------------------------------- genus / trace ----

Bouquet diagram_input(const std::string& word, const std::string& file) {
    int sources = (!word.empty()) + (!file.empty());
    if (sources != 1) throw InvalidInputError("give exactly one of --word, --file");
    if (!word.empty()) return parse_bouquet_line(word);
    return single_diagram(read_file(file));
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int run_genus(const Global& g, const std::string& word, const std::string& file,
              const std::string& twist) {
    Bouquet b = diagram_input(word, file).partial_petrial(split_tokens(twist));
    BouquetStats s = b.stats();
    ordered_json j;
    j["vertices"] = s.vertices;
    j["edges"] = s.edges;
    j["boundaries"] = s.boundaries;
    j["euler_characteristic"] = s.euler_characteristic;
    j["euler_genus"] = s.euler_genus;
    std::ostringstream text;
    text << "v=" << s.vertices << " e=" << s.edges << " f=" << s.boundaries
         << " chi=" << s.euler_characteristic << " genus=" << s.euler_genus << '\n';
    emit(g, j, text.str());
    return 0;
}

// Split point 2p is the entry side of slot p, 2p+1 the exit side.
std::string point_name(std::size_t point) {
    return std::to_string(point / 2) + (point % 2 ? "+" : "-");
}

int run_trace(const Global& g, const std::string& word, const std::string& file,
              const std::string& twist) {
    Bouquet b = diagram_input(word, file).partial_petrial(split_tokens(twist));
    auto walks = b.boundary_walks();
    ordered_json j;
    j["boundaries"] = walks.size();
    j["walks"] = ordered_json::array();
    std::ostringstream text;
    text << "boundaries: " << walks.size() << '\n';
    for (const auto& walk : walks) {
        ordered_json jw = ordered_json::array();
        text << "walk:";
        for (std::size_t point : walk) {
            jw.push_back(point_name(point));
            text << ' ' << point_name(point);
        }
        j["walks"].push_back(jw);
        text << '\n';
    }
    emit(g, j, text.str());
    return 0;
}

// ------------------------------------------------------------- witness ----

SimpleGraph graph_input(const std::string& edges, const std::string& file) {
    int sources = (!edges.empty()) + (!file.empty());
    if (sources != 1) throw InvalidInputError("give exactly one of --edges, --file");
    return parse_edge_list(edges.empty() ? read_file(file) : edges);
}

int run_witness_make(const std::string& edges, const std::string& file,
                     const std::string& cert_path) {
    SimpleGraph g = graph_input(edges, file);
    WitnessCertificate cert = g.is_path() ? path_witness(g) : nonpath_witness(g);
    std::string text = to_json(cert).dump(2) + "\n";
    if (cert_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cert_path, std::ios::binary);
        if (!out) throw InvalidInputError("cannot write '" + cert_path + "'");
        out << text;
    }
    return 0;
}

int run_witness_check(const Global& g, const std::string& cert_path) {
    WitnessCertificate cert = parse_certificate(read_file(cert_path));
    CheckReport rep = check_witness(cert);
    ordered_json j;
    j["ok"] = rep.ok;
    j["kind"] = to_string(cert.kind);
    j["corank"] = rep.corank;
    j["steps"] = rep.steps;
    j["failure"] = rep.ok ? ordered_json() : ordered_json(rep.failure);
    std::string text = rep.ok ? "PASS corank=" + std::to_string(rep.corank) + " steps=" +
                                    std::to_string(rep.steps) + "\n"
                              : "FAIL " + rep.failure + "\n";
    emit(g, j, text);
    return rep.ok ? 0 : 1;
}

// ------------------------------------------------------- check-theorem ----

struct ScopeReport {
    std::string scope;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
};

ScopeReport run_scope(const Global& g, const std::string& scope) {
    auto bounded = [&](std::size_t fallback, std::size_t cap, const char* what) {
        std::size_t n = g.has_max_n ? static_cast<std::size_t>(g.max_n) : fallback;
        if (n > cap)
            throw ResourceLimitError("--max-n " + std::to_string(n) + " exceeds the " +
                                     what + " cap of " + std::to_string(cap));
        return n;
    };
    SweepResult r;
    if (scope == "paths") {
        r = sweep_paths(bounded(12, 62, "path sweep"), g.shard);
    } else if (scope == "lemma3") {
        r = sweep_boundary_lemma(bounded(5, 17, "chord diagram sweep"), g.shard);
    } else if (scope == "circle") {
        std::size_t n = bounded(7, 17, "chord diagram sweep");
        r = sweep_circle(n, std::min<std::size_t>(5, n), g.shard).total();
    } else { // grafts
        std::size_t n = bounded(6, 11, "labeled graph sweep");
        r = sweep_grafts(n, 10000, kCorankTrialSeed, g.shard).total();
    }
    return {scope, r.instances, r.failures, r.first_failure};
}

int run_check_theorem(const Global& g, const std::string& scope) {
    std::vector<std::string> scopes;
    if (scope == "all")
        scopes = {"paths", "circle", "grafts", "lemma3"};
    else
        scopes = {scope};

    ordered_json all = ordered_json::array();
    std::ostringstream text;
    std::uint64_t failures = 0;
    bool first = true;
    for (const auto& s : scopes) {
        auto start = std::chrono::steady_clock::now();
        ScopeReport rep = run_scope(g, s);
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::cerr << "elapsed " << s << ": " << std::fixed << std::setprecision(3)
                  << elapsed.count() << "s\n";
        failures += rep.failures;

        ordered_json j;
        j["command"] = "check-theorem " + s;
        j["instances"] = rep.instances;
        j["failures"] = rep.failures;
        j["first_failure"] = rep.failures ? ordered_json(rep.first_failure) : ordered_json();
        all.push_back(j);

        if (!first) text << '\n';
        first = false;
        text << "command: check-theorem " << s << '\n'
             << "instances: " << rep.instances << '\n'
             << "failures: " << rep.failures << '\n';
        if (rep.failures) text << "first-failure: " << rep.first_failure << '\n';
    }
    emit(g, scopes.size() == 1 ? all[0] : all, text.str());
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial Petrial polynomials of chord diagrams and circle graphs", "petrial"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    std::string shard_text;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    auto* max_n_opt =
        app.add_option("--max-n", g.max_n,
                       "subset-sweep guard for poly, sweep bound for check-theorem");
    app.add_option("--shard", shard_text, "run slice i of k (i/k, 1-based)");

    PolyInputs poly_in;
    auto* poly = app.add_subcommand("poly", "polynomial of a chord diagram or graph");
    poly->fallthrough();
    poly->add_option("--mode", poly_in.mode, "tracing, corank, or both")
        ->check(CLI::IsMember({"tracing", "corank", "both"}));
    poly->add_option("--word", poly_in.word, "chord diagram line, e.g. \"1 2 1 2 | 2\"");
    poly->add_option("--edges", poly_in.edges, "edge list text, e.g. \"3 3 0 1 0 2 1 2\"");
    poly->add_option("--file", poly_in.file, "read the input from a file");
    poly->add_option("--input", poly_in.input_kind, "file format for --file")
        ->check(CLI::IsMember({"cdf", "edgelist"}))
        ->capture_default_str();

    std::string word, file, twist;
    auto* genus = app.add_subcommand("genus", "ribbon statistics after a partial Petrial");
    genus->fallthrough();
    genus->add_option("--word", word, "chord diagram line");
    genus->add_option("--file", file, "chord diagram file");
    genus->add_option("--twist", twist, "labels whose twist to toggle");

    auto* trace = app.add_subcommand("trace", "boundary walks of a chord diagram");
    trace->fallthrough();
    trace->add_option("--word", word, "chord diagram line");
    trace->add_option("--file", file, "chord diagram file");
    trace->add_option("--twist", twist, "labels whose twist to toggle");

    auto* witness = app.add_subcommand("witness", "reduction certificates");
    witness->require_subcommand(1);
    witness->fallthrough();
    std::string w_edges, w_file, w_cert;
    auto* make = witness->add_subcommand("make", "build a certificate for a graph");
    make->fallthrough();
    make->add_option("--edges", w_edges, "edge list text");
    make->add_option("--file", w_file, "edge list file");
    make->add_option("--cert", w_cert, "write the certificate here instead of stdout");
    auto* check = witness->add_subcommand("check", "replay a certificate");
    check->fallthrough();
    check->add_option("--cert", w_cert, "certificate file")->required();

    std::string scope = "all";
    auto* theorem = app.add_subcommand("check-theorem", "sweep the library's main claims");
    theorem->fallthrough();
    theorem->add_option("--scope", scope, "paths, circle, grafts, lemma3, or all")
        ->check(CLI::IsMember({"paths", "circle", "grafts", "lemma3", "all"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        g.has_max_n = max_n_opt->count() > 0;
        if (!shard_text.empty()) g.shard = parse_shard(shard_text);
        if (app.got_subcommand(poly)) return run_poly(g, poly_in);
        if (app.got_subcommand(genus)) return run_genus(g, word, file, twist);
        if (app.got_subcommand(trace)) return run_trace(g, word, file, twist);
        if (app.got_subcommand(witness)) {
            if (witness->got_subcommand(make)) return run_witness_make(w_edges, w_file, w_cert);
            return run_witness_check(g, w_cert);
        }
        return run_check_theorem(g, scope);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
