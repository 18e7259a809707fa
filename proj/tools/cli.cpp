#include "cli.hpp"

#include "chambered/certify.hpp"
#include "chambered/error.hpp"
#include "chambered/fan.hpp"
#include "chambered/geometric.hpp"
#include "chambered/io.hpp"
#include "chambered/parallel.hpp"
#include "chambered/trunc.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace chambered::cli {

namespace {

struct Config {
    std::string graph;
    std::optional<std::string> word;
    std::optional<int> length;
    std::string family = "P";
    int trunc = 8;
    std::size_t count = 1000;
    std::uint64_t seed = 1;
    int bound = 50;
    std::string out;
    std::string format = "json";
    std::vector<std::string> covector;
};

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out);
    if (!file || !(file << text))
        throw IoError("cannot write '" + cfg.out + "'");
}

void emit_json(const Config& cfg, const io::Json& doc, std::ostream& out) {
    if (cfg.format != "json")
        throw InputError("this command supports --format json only");
    emit(cfg, doc.dump(2) + "\n", out);
}

CoxeterSystem load_system(const Config& cfg) {
    return CoxeterSystem(io::load_graph(cfg.graph));
}

std::vector<Family> families(const std::string& text) {
    if (text == "both")
        return {Family::P, Family::R};
    return {parse_family(text)};
}

int cmd_gmatrix(const Config& cfg, std::ostream& out) {
    const CoxeterSystem sys = load_system(cfg);
    if (cfg.word.has_value() == cfg.length.has_value())
        throw InputError("gmatrix needs exactly one of --word and --length");
    std::vector<GMatrix> gs;
    if (cfg.word) {
        const Element w = sys.element(io::parse_word(*cfg.word, sys.rank()));
        for (Family f : families(cfg.family))
            gs.push_back(g_matrix(w, f));
    } else {
        const Ball ball = sys.enumerate_up_to_length(*cfg.length);
        for (Family f : families(cfg.family))
            for (const auto& w : ball.elements)
                gs.push_back(g_matrix(w, f));
    }
    if (cfg.format == "csv") {
        emit(cfg, io::gmatrices_to_csv(gs), out);
        return kOk;
    }
    if (cfg.word && gs.size() == 1) {
        emit_json(cfg, io::to_json(gs.front()), out);
        return kOk;
    }
    io::Json doc = io::Json::array();
    for (const auto& g : gs)
        doc.push_back(io::to_json(g));
    emit_json(cfg, doc, out);
    return kOk;
}

int cmd_locate(const Config& cfg, std::ostream& out) {
    const CoxeterSystem sys = load_system(cfg);
    if (static_cast<int>(cfg.covector.size()) != sys.rank())
        throw InputError("covector needs " + std::to_string(sys.rank()) + " coordinates, got " +
                         std::to_string(cfg.covector.size()));
    Covector f;
    for (const auto& c : cfg.covector)
        f.push_back(parse_rational(c));
    emit_json(cfg, io::to_json(chamber_locate(sys, f)), out);
    return kOk;
}

int cmd_enumerate(const Config& cfg, std::ostream& out) {
    const CoxeterSystem sys = load_system(cfg);
    const Ball ball = sys.enumerate_up_to_length(cfg.length.value_or(4));
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "index,length,word\n";
        for (std::size_t k = 0; k < ball.elements.size(); ++k) {
            csv << k << ',' << ball.elements[k].length() << ',';
            const auto& w = ball.elements[k].word();
            for (std::size_t j = 0; j < w.size(); ++j)
                csv << (j ? " " : "") << w[j] + 1;
            csv << '\n';
        }
        emit(cfg, csv.str(), out);
        return kOk;
    }
    io::Json elements = io::Json::array();
    for (const auto& w : ball.elements)
        elements.push_back(io::word_to_json(w.word()));
    io::Json edges = io::Json::array();
    for (const auto& e : ball.edges)
        edges.push_back(io::Json{{"from", e.from}, {"to", e.to}, {"generator", e.generator + 1}});
    emit_json(cfg,
              io::Json{{"max_length", ball.max_length},
                       {"size", ball.elements.size()},
                       {"elements", elements},
                       {"edges", edges}},
              out);
    return kOk;
}

int cmd_roots(const Config& cfg, std::ostream& out) {
    const CoxeterSystem sys = load_system(cfg);
    io::Json doc = io::Json::array();
    for (const auto& r : real_roots_up_to(sys, cfg.length.value_or(2)))
        doc.push_back(io::vector_to_json(r.coords));
    emit_json(cfg, doc, out);
    return kOk;
}

int cmd_oracle(const Config& cfg, std::ostream& out) {
    const CoxeterSystem sys = load_system(cfg);
    const Word word = io::parse_word(cfg.word.value_or(""), sys.rank());
    const trunc::OracleContext ctx(sys, cfg.trunc);
    const trunc::OracleResult res = trunc::oracle_g_matrix(ctx, word);
    io::Json doc = io::to_json(res);
    doc["formula"] = io::matrix_to_json(g_matrix_P(sys.element(word)).matrix);
    doc["agrees"] = res.g == g_matrix_P(sys.element(word)).matrix;
    emit_json(cfg, doc, out);
    return kOk;
}

int cmd_certify(const Config& cfg, std::ostream& out, std::ostream& err) {
    const CoxeterSystem sys = load_system(cfg);
    CertifyOptions opts;
    opts.length = cfg.length.value_or(4);
    opts.truncation = cfg.trunc;
    opts.count = cfg.count;
    opts.seed = cfg.seed;
    opts.bound = cfg.bound;
    const CertifyReport rep = certify(sys, opts);
    for (const auto& c : rep.checks) {
        err << (c.passed ? "pass " : "FAIL ") << c.name << " (" << c.seconds << " s)";
        if (!c.passed)
            err << ": " << c.witness;
        err << '\n';
    }
    emit_json(cfg, to_json(rep), out);
    return rep.passed() ? kOk : kCheckFailed;
}

int cmd_fan_export(const Config& cfg, std::ostream& out) {
    const CoxeterSystem sys = load_system(cfg);
    io::Json doc = io::Json::array();
    for (const auto& cell : fan_slice_export(sys, cfg.length.value_or(4)))
        doc.push_back(io::to_json(cell));
    emit_json(cfg, doc, out);
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    configure_threads_from_env();
    Config cfg;
    CLI::App app{"Chambers, g-matrices and tilting complexes of affine preprojective algebras"};
    app.require_subcommand(1);

    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph", cfg.graph, "graph JSON file")->required();
        sub->add_option("--out", cfg.out, "write data here instead of stdout");
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* gmatrix = app.add_subcommand("gmatrix", "g-matrices of P_w / R_w");
    add_graph(gmatrix);
    gmatrix->add_option("--word", cfg.word, "space separated generators, 1-based");
    gmatrix->add_option("--length", cfg.length, "all elements up to this length");
    gmatrix->add_option("--family", cfg.family, "P, R or both");

    auto* locate = app.add_subcommand("locate", "chamber containing a covector");
    add_graph(locate);
    locate->add_option("covector", cfg.covector, "rational coordinates (after --)")->required();

    auto* enumerate = app.add_subcommand("enumerate", "weak order ball and Hasse edges");
    add_graph(enumerate);
    enumerate->add_option("--length", cfg.length, "length bound")->check(CLI::NonNegativeNumber);

    auto* roots = app.add_subcommand("roots", "real roots sigma_w(alpha_i), l(w) <= L");
    add_graph(roots);
    roots->add_option("--length", cfg.length, "length bound")->check(CLI::NonNegativeNumber);

    auto* oracle = app.add_subcommand("oracle", "g-matrix from the truncated algebra");
    add_graph(oracle);
    oracle->add_option("--word", cfg.word, "space separated generators, 1-based");
    oracle->add_option("--trunc", cfg.trunc, "truncation N")->check(CLI::PositiveNumber);

    auto* cert = app.add_subcommand("certify", "run the property suite");
    add_graph(cert);
    cert->add_option("--length", cfg.length, "ball length bound")->check(CLI::NonNegativeNumber);
    cert->add_option("--trunc", cfg.trunc, "oracle truncation N")->check(CLI::PositiveNumber);
    cert->add_option("--count", cfg.count, "coverage samples")->check(CLI::PositiveNumber);
    cert->add_option("--seed", cfg.seed, "sampling seed");
    cert->add_option("--bound", cfg.bound, "coordinate bound")->check(CLI::PositiveNumber);

    auto* fan = app.add_subcommand("fan-export", "level-one slice of the fan");
    add_graph(fan);
    fan->add_option("--length", cfg.length, "length bound")->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return e.get_exit_code() == 0 ? kOk : kBadInput;
    }

    try {
        if (*gmatrix)
            return cmd_gmatrix(cfg, out);
        if (*locate)
            return cmd_locate(cfg, out);
        if (*enumerate)
            return cmd_enumerate(cfg, out);
        if (*roots)
            return cmd_roots(cfg, out);
        if (*oracle)
            return cmd_oracle(cfg, out);
        if (*cert)
            return cmd_certify(cfg, out, err);
        if (*fan)
            return cmd_fan_export(cfg, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const NotAffineError& e) {
        err << "error: " << e.what() << '\n';
        return kNotAffine;
    } catch (const CriticalHyperplane& e) {
        err << "error: " << e.what() << '\n';
        return kLevelZero;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kBadInput;
}

} // namespace chambered::cli
