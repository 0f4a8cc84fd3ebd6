#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zq/census.hpp"
#include "zq/families.hpp"
#include "zq/graph_io.hpp"
#include "zq/solver.hpp"
#include "zq/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw zq::ContractViolation("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw zq::ContractViolation("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

std::vector<int> parse_int_list(const std::string& s, char sep) {
    std::vector<int> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

zq::Graph generate_family(const std::string& family, const std::string& param) {
    if (family == "spider") return zq::gen_spider(std::stoi(param));
    if (family == "double-star") {
        auto ab = parse_int_list(param, ',');
        if (ab.size() != 2) throw zq::ContractViolation("double-star needs --param a,b");
        return zq::gen_double_star(ab[0], ab[1]);
    }
    if (family == "binary") return zq::gen_complete_binary(std::stoi(param));
    if (family == "comb" || family == "pick-comb") {
        std::string comb_spec = param;
        std::string attach;
        std::optional<std::pair<int, int>> pair;
        if (family == "pick-comb") {
            comb_spec.clear();
            std::istringstream in(param);
            std::string piece;
            while (std::getline(in, piece, ';')) {
                if (piece.rfind("comb=", 0) == 0) comb_spec = piece.substr(5);
                else if (piece.rfind("attach=", 0) == 0) attach = piece.substr(7);
                else if (piece.rfind("pair=", 0) == 0) {
                    auto uv = parse_int_list(piece.substr(5), ',');
                    if (uv.size() != 2) throw zq::ContractViolation("pick-comb pair needs u,v");
                    pair = {uv[0], uv[1]};
                } else {
                    throw zq::ContractViolation("pick-comb param piece not understood: '" + piece + "'");
                }
            }
            if (comb_spec.empty() || attach.empty())
                throw zq::ContractViolation("pick-comb needs --param comb=<spec>;attach=path:N|zigzag:N");
        }
        std::vector<std::vector<int>> teeth;
        std::istringstream in(comb_spec);
        std::string seg;
        while (std::getline(in, seg, '|')) teeth.push_back(parse_int_list(seg, ','));
        if (comb_spec.empty() || comb_spec.back() == '|') teeth.push_back({});
        zq::Graph comb = zq::gen_comb(teeth);
        if (family == "comb") return comb;
        auto colon = attach.find(':');
        if (colon == std::string::npos)
            throw zq::ContractViolation("pick-comb attach needs kind:size");
        std::string kind = attach.substr(0, colon);
        int size = std::stoi(attach.substr(colon + 1));
        if (kind == "path") return zq::gen_pick_comb(comb, zq::PickAttachment::path, size, pair);
        if (kind == "zigzag") return zq::gen_pick_comb(comb, zq::PickAttachment::zigzag, size, pair);
        throw zq::ContractViolation("pick-comb attach kind must be path or zigzag");
    }
    throw zq::ContractViolation("unknown family '" + family +
                                "' (spider, double-star, binary, comb, pick-comb)");
}

struct Options {
    std::string q = "inf";
    std::string input = "-";
    std::string edges;
    std::string format = "edgelist";
    std::string output = "-";
    std::string range;
    std::string family;
    std::string param;
    int workers = 0;
    std::size_t cap_states = 2'000'000;
};

zq::Graph load_graph(const Options& o) {
    std::string text = o.edges.empty() ? read_all(o.input) : o.edges;
    return zq::parse_graph(text, zq::parse_format(o.format));
}

zq::SolverConfig solver_config(const Options& o) {
    zq::SolverConfig cfg;
    cfg.q = zq::QValue::parse(o.q);
    cfg.state_limit = o.cap_states;
    return cfg;
}

int default_workers() {
    if (const char* env = std::getenv("ZQ_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-analogue zero-forcing computations"};
    app.require_subcommand(1);

    Options o;
    o.workers = default_workers();

    auto add_graph_flags = [&](CLI::App* cmd) {
        cmd->add_option("--input", o.input, "input path or '-' for stdin");
        cmd->add_option("--edges", o.edges, "inline edge list, e.g. '0 1 1 2'");
        cmd->add_option("--format", o.format, "graph6 or edgelist");
    };

    CLI::App* compute = app.add_subcommand("compute", "Z_q of a graph plus an optimal first move");
    compute->add_option("--q", o.q, "nonnegative integer or 'inf'")->required();
    compute->add_option("--cap-states", o.cap_states, "solver state limit");
    compute->add_option("--output", o.output, "output path or '-'");
    add_graph_flags(compute);

    CLI::App* classify = app.add_subcommand("classify", "value plus structural label and witnesses");
    classify->add_option("--q", o.q)->required();
    classify->add_option("--cap-states", o.cap_states);
    classify->add_option("--output", o.output);
    add_graph_flags(classify);

    CLI::App* census = app.add_subcommand("census", "Z_1 histogram over non-isomorphic trees, CSV");
    census->add_option("--n", o.range, "vertex range, e.g. 3..16")->required();
    census->add_option("--workers", o.workers, "parallel tree evaluation");
    census->add_option("--output", o.output);

    CLI::App* generate = app.add_subcommand("generate", "emit a named family graph");
    generate->add_option("--family", o.family, "spider | double-star | binary | comb | pick-comb")->required();
    generate->add_option("--param", o.param, "family parameters")->required();
    generate->add_option("--format", o.format);
    generate->add_option("--output", o.output);

    CLI::App* verify = app.add_subcommand("verify", "cross-validation suite; nonzero exit on mismatch");
    verify->add_option("--n", o.range, "max connected-graph size (default 6, capped at 7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (compute->parsed()) {
            zq::Graph g = load_graph(o);
            zq::GameResult r = zq_number(g, solver_config(o));
            Output out(o.output);
            out.stream() << r.value << "\n";
            out.stream() << "first move: " << r.first_move.to_string() << "\n";
        } else if (classify->parsed()) {
            zq::Graph g = load_graph(o);
            zq::Classification c = zq::classify(g, zq::QValue::parse(o.q), solver_config(o));
            Output out(o.output);
            out.stream() << c.describe() << "\n";
        } else if (census->parsed()) {
            auto [lo, hi] = parse_range(o.range);
            auto rows = zq::census(lo, hi, o.workers);
            Output out(o.output);
            zq::write_census_csv(out.stream(), rows);
        } else if (generate->parsed()) {
            zq::Graph g = generate_family(o.family, o.param);
            Output out(o.output);
            out.stream() << zq::emit_graph(g, zq::parse_format(o.format));
            if (o.format == "graph6" || o.format == "g6") out.stream() << "\n";
        } else if (verify->parsed()) {
            zq::VerifyOptions vo;
            if (!o.range.empty()) {
                auto [lo, hi] = parse_range(o.range);
                (void)lo;
                vo.max_graph_n = std::min(hi, 7);
                vo.max_tree_n = std::min(hi + 4, 11);
            }
            zq::VerifyReport report = zq::run_verify(vo, &std::cout);
            if (!report.ok()) {
                std::cout << report.issues.size() << " mismatch(es) in " << report.checks << " checks\n";
                return kExitMismatch;
            }
            std::cout << "all " << report.checks << " checks passed\n";
        }
    } catch (const zq::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const zq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const zq::ContractViolation& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
