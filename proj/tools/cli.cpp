#include "cli.hpp"

#include "egr/bounds.hpp"
#include "egr/constructions.hpp"
#include "egr/graph6.hpp"
#include "egr/report.hpp"
#include "egr/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace egr::cli {

using nlohmann::json;

namespace {

// invalid input from the user; maps to exit code 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class Stopwatch {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

json metadata(const std::vector<std::string>& args) {
    return {{"schema_version", kSchemaVersion},
            {"tool", {{"name", "egr"}, {"version", kVersion}}},
            {"command_line", args},
            {"timestamp", utc_timestamp()}};
}

std::string signature_text(const EgrSignature& s) {
    return "egr(" + std::to_string(s.n) + ", " + std::to_string(s.k) + ", " + std::to_string(s.g) + ", " +
           std::to_string(s.lambda) + ")" + (s.bipartite ? " bipartite" : "");
}

struct FamilyOptions {
    std::string family;
    std::uint32_t q = 0;
    std::string name;

    FamilySpec spec() const {
        auto f = parse_family(family);
        if (!f) throw UsageError("unknown family '" + family + "'");
        if (*f == Family::named && name.empty()) throw UsageError("--family named needs --name");
        if (*f != Family::named && q == 0) throw UsageError("--family " + family + " needs --q");
        return {*f, q, name};
    }

    json describe() const {
        const auto s = spec();
        json out{{"family", to_string(s.family)}};
        if (s.family == Family::named) {
            out["name"] = s.name;
        } else {
            out["q"] = s.q;
        }
        return out;
    }
};

void add_family_options(CLI::App* cmd, FamilyOptions& opts) {
    cmd->add_option("--family", opts.family, "biaffine1, biaffine2, gq_truncation, ovoid_spread, pencil or named")
        ->required();
    cmd->add_option("--q", opts.q, "field order (prime power)");
    cmd->add_option("--name", opts.name, "reference graph for --family named, e.g. petersen or cycle(7)");
}

Graph build_graph(const FamilyOptions& opts) {
    try {
        return build(opts.spec());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

EgrSignature require_egr(const Graph& g) {
    auto r = verify_egr(g);
    if (auto* f = std::get_if<EgrFailure>(&r)) {
        throw std::logic_error("constructed graph failed verification: " + f->message);
    }
    return std::get<EgrSignature>(r);
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << doc.dump(2) << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << doc.dump(2) << '\n';
}

std::string read_first_line(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::string line;
    while (std::getline(f, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) return line;
    }
    throw UsageError(path + " contains no graph");
}

Graph decode(const std::string& text) {
    try {
        return graph6_decode(text);
    } catch (const Graph6Error& e) {
        throw UsageError(std::string("graph6: ") + e.what() + " at byte " + std::to_string(e.offset()));
    }
}

int cmd_construct(const FamilyOptions& opts, const std::string& format, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
    const Graph g = build_graph(opts);
    const auto sig = require_egr(g);
    std::string payload;
    if (format == "graph6") {
        payload = graph6_encode(g) + "\n";
    } else {
        json doc{{"schema_version", kSchemaVersion}, {"source", opts.describe()}, {"graph", graph_json(g)},
                 {"signature", signature_json(sig)}};
        payload = doc.dump(2) + "\n";
    }
    if (out_path.empty()) {
        out << payload;
        err << signature_text(sig) << '\n';
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + out_path);
        f << payload;
        out << signature_text(sig) << '\n';
    }
    return ok;
}

int cmd_verify(const std::vector<std::string>& args, const std::string& in_path, const std::string& out_path,
               std::ostream& out) {
    Stopwatch clock;
    const Graph g = decode(read_first_line(in_path));
    const double t_parse = clock.lap();
    const auto r = verify_egr(g);
    const double t_verify = clock.lap();
    json doc = metadata(args);
    doc["input"] = {{"path", in_path}, {"n", g.order()}, {"m", g.size()}};
    doc["result"] = result_json(r);
    doc["timing"] = {{"parse", t_parse}, {"verify", t_verify}};
    emit(doc, out_path, out);
    return std::holds_alternative<EgrSignature>(r) ? ok : not_egr;
}

int cmd_verify_stream(std::istream& in, std::ostream& out) {
    int code = ok;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        json row{{"line", lineno}};
        try {
            const auto r = verify_egr(decode(line));
            row["result"] = result_json(r);
            if (!std::holds_alternative<EgrSignature>(r) && code == ok) code = not_egr;
        } catch (const UsageError& e) {
            row["error"] = e.what();
            code = usage_error;
        }
        out << row.dump() << '\n';
    }
    return code;
}

int cmd_bounds(const std::vector<std::string>& args, std::uint32_t k, std::uint32_t g, std::uint64_t lambda,
               bool bipartite, std::ostream& out) {
    if (k < 3) throw UsageError("k must be at least 3");
    if (g < 3) throw UsageError("g must be at least 3");
    if (lambda < 1) throw UsageError("lambda must be at least 1");
    if (bipartite && g % 2 == 1) throw UsageError("a bipartite graph has even girth");
    json doc = metadata(args);
    doc["bounds"] = bounds_json(bound_report(k, g, lambda, bipartite));
    out << doc.dump(2) << '\n';
    return ok;
}

int cmd_report(const std::vector<std::string>& args, const FamilyOptions& opts, const std::string& out_path,
               std::ostream& out) {
    Stopwatch clock;
    json timing;
    json doc = metadata(args);
    doc["source"] = opts.describe();

    const Graph g = build_graph(opts);
    timing["construct"] = clock.lap();
    doc["graph6"] = graph6_encode(g);

    const auto sig = require_egr(g);
    timing["verify"] = clock.lap();
    doc["signature"] = signature_json(sig);

    if (g.order() <= kMaxSpectralOrder) {
        const auto len = std::min<std::uint32_t>(std::max<std::uint32_t>(sig.g, 8), kMaxMomentLength);
        const auto moments = walk_moments(g, len);
        BigInt expected = BigInt(sig.n) * sig.k * sig.lambda;
        if (sig.g % 2 == 0) expected += BigInt(sig.n) * tree_walk_count(sig.g, sig.k);
        doc["moments"] = {{"values", moments_json(moments)},
                          {"girth_identity", sig.g <= len ? json(moments.moments[sig.g] == expected) : json(nullptr)}};
        timing["moments"] = clock.lap();

        const auto spectrum = eigenvalues(g);
        doc["spectrum"] = spectrum_json(spectrum);
        if (sig.g == 4 && sig.bipartite) {
            const auto cert = certify_tight_spectrum(spectrum, sig);
            doc["tight_spectrum"] = {{"certified", cert.certified},
                                     {"second_eigenvalue_squared", rational_json(cert.second_eigenvalue_squared)},
                                     {"second_eigenvalue", cert.second_eigenvalue},
                                     {"multiplicity", cert.multiplicity},
                                     {"max_deviation", cert.max_deviation},
                                     {"reason", cert.reason}};
        } else {
            doc["tight_spectrum"] = nullptr;
        }
        timing["spectrum"] = clock.lap();
    } else {
        doc["moments"] = nullptr;
        doc["spectrum"] = nullptr;
        doc["tight_spectrum"] = nullptr;
    }

    const auto verdict = certify_extremal(sig);
    doc["bounds"] = bounds_json(verdict.bounds);
    doc["extremal"] = verdict_json(verdict);
    timing["bounds"] = clock.lap();
    doc["timing"] = timing;
    emit(doc, out_path, out);
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge-girth-regular graph toolkit: constructions, verification, spectra and order bounds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    FamilyOptions construct_opts;
    std::string format = "graph6";
    std::string construct_out;
    auto* construct = app.add_subcommand("construct", "build a graph from a family and verify it");
    add_family_options(construct, construct_opts);
    construct->add_option("--format", format, "graph6 or json")->check(CLI::IsMember({"graph6", "json"}));
    construct->add_option("--out", construct_out, "output file (default: standard output)");

    std::string verify_in;
    std::string verify_out;
    bool stream = false;
    auto* verify = app.add_subcommand("verify", "check whether a graph6 file holds an egr graph");
    verify->add_option("input", verify_in, "graph6 file");
    verify->add_flag("--stdin-g6-stream", stream, "verify one graph6 string per line of standard input");
    verify->add_option("--out", verify_out, "write the JSON report here");

    std::uint32_t k = 0;
    std::uint32_t g = 0;
    std::uint64_t lambda = 0;
    bool bipartite = false;
    auto* bounds = app.add_subcommand("bounds", "lower bounds on the order of an egr(n,k,g,lambda) graph");
    bounds->add_option("-k", k, "degree")->required();
    bounds->add_option("-g", g, "girth")->required();
    bounds->add_option("-l,--lambda", lambda, "girth cycles per edge")->required();
    bounds->add_flag("--bipartite", bipartite, "bipartite bounds");

    FamilyOptions report_opts;
    std::string report_out;
    auto* report = app.add_subcommand("report", "construct, verify, spectrum, bounds and extremality in one report");
    add_family_options(report, report_opts);
    report->add_option("--out", report_out, "write the JSON report here");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*construct) return cmd_construct(construct_opts, format, construct_out, out, err);
        if (*verify) {
            if (stream) {
                if (!verify_in.empty()) throw UsageError("--stdin-g6-stream takes no input file");
                return cmd_verify_stream(in, out);
            }
            if (verify_in.empty()) throw UsageError("verify needs an input file or --stdin-g6-stream");
            return cmd_verify(args, verify_in, verify_out, out);
        }
        if (*bounds) return cmd_bounds(args, k, g, lambda, bipartite, out);
        if (*report) return cmd_report(args, report_opts, report_out, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
    return internal_error;
}

}  // namespace egr::cli
