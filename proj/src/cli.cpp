#include "sgo/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sgo/config.hpp"
#include "sgo/errors.hpp"
#include "sgo/orbits.hpp"
#include "sgo/serialize.hpp"
#include "sgo/verify.hpp"
#include "sgo/zastava.hpp"

namespace sgo {

namespace {

struct CliConfig {
    int M = 0;
    int N = 0;
    int box = 2;
    int samples = 200;
    std::uint64_t seed = 1;
    int precision = kDefaultPrecision;
    int pole_bound = 2;
    int failure_cap = 20;
    int truncation = 0;
    bool serial = false;
    std::string output;  // empty: stdout
    std::string format = "json";
    std::string matrix;
    std::string component = "grN";
    std::string w_O;
    std::string w_S;
    std::string divisor;
    std::string suite;
    std::string json_out;
};

class UsageError : public Error {
public:
    using Error::Error;
};

void validate(const CliConfig& c, bool needs_rank) {
    if (needs_rank && !(0 < c.M && c.M < c.N)) throw UsageError("need 0 < M < N");
    if (c.box < 0) throw UsageError("box must be nonnegative");
    if (c.precision < 8) throw UsageError("precision must be at least 8");
}

json stamped(const char* kind, json body) {
    json out{{"schema", std::string("sgo.") + kind + "/1"}};
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
}

json roots_json(int M, int N) {
    json simple = json::array();
    for (const auto& r : simple_roots(M, N))
        simple.push_back(json{{"index", r.index}, {"parity", r.odd ? "odd" : "even"}, {"flat", r.flat}});
    const CompositeRoots c = composite_roots(M, N);
    auto list = [](const std::vector<CompositeRoot>& v) {
        json a = json::array();
        for (const auto& x : v) a.push_back(json{{"flat", x.flat}, {"simple", x.simple.coeffs}});
        return a;
    };
    return stamped("roots", json{{"M", M}, {"N", N}, {"simple", simple}, {"gl_m", list(c.gl_m)}, {"gl_n", list(c.gl_n)}});
}

json enumerate_json(int M, int N, int box) {
    json rows = json::array();
    int relevant = 0, dominant = 0;
    for (const auto& w : weight_box(M, N, box)) {
        const bool r = is_relevant(w), d = is_hw_dominant(w);
        relevant += r;
        dominant += d;
        json row = to_json(w);
        row["relevant"] = r;
        row["hw_dominant"] = d;
        row["orbit_dimension"] = orbit_dimension(w);
        rows.push_back(row);
    }
    return stamped("enumerate", json{{"M", M},
                                     {"N", N},
                                     {"box", box},
                                     {"counts", json{{"total", rows.size()}, {"relevant", relevant}, {"hw_dominant", dominant}}},
                                     {"weights", rows}});
}

std::string closure_dot(int M, int N, int box) {
    std::vector<SuperWeight> ws;
    for (const auto& w : weight_box(M, N, box))
        if (is_relevant(w)) ws.push_back(w);
    const std::size_t n = ws.size();
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) lt[a][b] = a != b && leq(ws[a], ws[b]);
    std::ostringstream os;
    os << "digraph closure {\n";
    for (std::size_t a = 0; a < n; ++a) os << "  n" << a << " [label=\"" << ws[a].str() << "\"];\n";
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!lt[a][b]) continue;
            bool covers = true;
            for (std::size_t c = 0; c < n && covers; ++c) covers = !(lt[a][c] && lt[c][b]);
            if (covers) os << "  n" << a << " -> n" << b << ";\n";
        }
    os << "}\n";
    return os.str();
}

LoopMatrix load_matrix(const json& j, const char* key) {
    if (j.contains(key)) return matrix_from_json(j.at(key));
    return matrix_from_json(j);
}

json dim_report_json(const SuperWeight& wO, const SuperWeight& wS) {
    const DimReport r = intersection_dim_bound(wO, wS);
    const Cor813Result c = cor813_classify(wO, wS);
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    json cor{{"kind", kind_name(c.kind)}};
    if (c.kind == Cor813Result::Kind::OddPlusAlpha) cor["alpha"] = c.alpha;
    if (c.kind != Cor813Result::Kind::Neither) cor["decomposition"] = json{{"a", c.decomposition.a}, {"b", c.decomposition.b}};
    return stamped("zastava-bound", json{{"zastava_dim", r.zastava_dim},
                                         {"bound", r.bound},
                                         {"witnesses", witnesses},
                                         {"cor813", cor}});
}

json exponents_json(const ColoredDivisor& d) {
    json e = json::object();
    for (const auto& [x, v] : line_bundle_exponents(d)) e[x] = v;
    return stamped("config-exponents", json{{"exponents", e}, {"open_stratum", is_open_stratum(d)}});
}

void add_rank(CLI::App* sub, CliConfig& c) {
    sub->add_option("--M", c.M, "rank of the GL_M factor")->required();
    sub->add_option("--N", c.N, "rank of the GL_N factor")->required();
}

}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig c;
    if (const char* env = std::getenv("SGO_PRECISION")) {
        try {
            c.precision = std::stoi(env);
        } catch (const std::exception&) {
            err << "error: SGO_PRECISION is not an integer\n";
            return 2;
        }
    }

    CLI::App app{"orbit classification and root combinatorics for gl(M|N)"};
    app.require_subcommand(1);
    app.add_option("-o,--output", c.output, "write the result here instead of stdout");

    auto* roots = app.add_subcommand("roots", "simple and composite roots");
    add_rank(roots, c);

    auto* enumerate = app.add_subcommand("enumerate", "weights in a box with relevance flags and orbit dimensions");
    add_rank(enumerate, c);
    enumerate->add_option("--box", c.box, "entries range over [-box, box]");

    auto* classify_cmd = app.add_subcommand("classify", "orbit label of a matrix in Gr_N");
    add_rank(classify_cmd, c);
    classify_cmd->add_option("--matrix", c.matrix, "matrix JSON file")->required();
    classify_cmd->add_option("--prec", c.precision, "initial working precision");

    auto* semi = app.add_subcommand("semi-infinite", "semi-infinite orbit of a point");
    add_rank(semi, c);
    semi->add_option("--matrix", c.matrix, "matrix JSON file, or {\"grM\": ..., \"grN\": ...}")->required();
    semi->add_option("--component", c.component, "which component a single matrix is")
        ->check(CLI::IsMember({"grM", "grN"}));
    semi->add_option("--prec", c.precision, "initial working precision");

    auto* closure = app.add_subcommand("closure", "Hasse diagram of the closure order on relevant weights (DOT)");
    add_rank(closure, c);
    closure->add_option("--box", c.box, "entries range over [-box, box]");

    auto setup_bound = [&](CLI::App* sub) {
        sub->add_option("--wO", c.w_O, "orbit weight JSON file")->required();
        sub->add_option("--wS", c.w_S, "semi-infinite weight JSON file")->required();
        sub->add_flag("--json", "JSON output (the default)");
    };
    auto* zbound = app.add_subcommand("zastava-bound", "intersection dimension bound");
    setup_bound(zbound);
    auto* zastava = app.add_subcommand("zastava", "zastava dimension commands");
    zastava->require_subcommand(1);
    auto* zbound_alias = zastava->add_subcommand("bound", "same as zastava-bound");
    setup_bound(zbound_alias);

    auto* cexp = app.add_subcommand("config-exponents", "line bundle exponents of a colored divisor");
    cexp->add_option("--divisor", c.divisor, "divisor JSON file")->required();
    auto* config = app.add_subcommand("config", "configuration space commands");
    config->require_subcommand(1);
    auto* cexp_alias = config->add_subcommand("exponents", "same as config-exponents");
    cexp_alias->add_option("--divisor", c.divisor, "divisor JSON file")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", c.suite, "roundtrip | prop81 | closure | relevance | config")->required();
    add_rank(verify, c);
    verify->add_option("--box", c.box, "entries range over [-box, box]");
    verify->add_option("--samples", c.samples, "samples per weight (roundtrip) or in total (prop81, config)");
    verify->add_option("--seed", c.seed, "base seed");
    verify->add_option("--prec", c.precision, "initial working precision");
    verify->add_option("--pole-bound", c.pole_bound, "largest pole order in sampled group elements");
    verify->add_option("--failure-cap", c.failure_cap, "failures kept in the report");
    verify->add_option("--truncation", c.truncation, "relevance: generator degrees below T (default box + 2)");
    verify->add_option("--json", c.json_out, "write the report here");
    verify->add_flag("--serial", c.serial, "run the serial reference loop instead of OpenMP");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, x;
        const int code = app.exit(e, o, x);
        out << o.str();
        err << x.str();
        return code == 0 ? 0 : 2;
    }

    auto emit = [&](const std::string& text) {
        if (c.output.empty()) {
            out << text;
            return;
        }
        std::ofstream f(c.output);
        if (!f) throw UsageError("cannot write " + c.output);
        f << text;
    };
    auto emit_json = [&](const json& j) { emit(j.dump(2) + "\n"); };
    const PrecisionPolicy policy{c.precision, std::max(kMaxPrecision, c.precision)};

    try {
        if (roots->parsed()) {
            validate(c, true);
            emit_json(roots_json(c.M, c.N));
        } else if (enumerate->parsed()) {
            validate(c, true);
            emit_json(enumerate_json(c.M, c.N, c.box));
        } else if (classify_cmd->parsed()) {
            validate(c, true);
            const LoopMatrix a = load_matrix(read_json_file(c.matrix), "grN");
            emit_json(stamped("weight", to_json(classify(a, c.M, c.N, policy))));
        } else if (semi->parsed()) {
            validate(c, true);
            const json j = read_json_file(c.matrix);
            SuperWeight w = SuperWeight::zero(c.M, c.N);
            if (j.contains("grN")) {
                OrbitPoint p{std::nullopt, matrix_from_json(j.at("grN"))};
                if (j.contains("grM")) p.grM = matrix_from_json(j.at("grM"));
                w = semi_infinite_weight(p, c.M, c.N, policy);
            } else if (c.component == "grM") {
                w.lambda = semi_infinite_xi(matrix_from_json(j), policy);
                if (static_cast<int>(w.lambda.size()) != c.M) throw PatternMismatch("grM must be M x M");
            } else {
                w = semi_infinite_weight(OrbitPoint{std::nullopt, matrix_from_json(j)}, c.M, c.N, policy);
            }
            emit_json(stamped("weight", to_json(w)));
        } else if (closure->parsed()) {
            validate(c, true);
            emit(closure_dot(c.M, c.N, c.box));
        } else if (zbound->parsed() || (zastava->parsed() && zbound_alias->parsed())) {
            emit_json(dim_report_json(weight_from_json(read_json_file(c.w_O)), weight_from_json(read_json_file(c.w_S))));
        } else if (cexp->parsed() || (config->parsed() && cexp_alias->parsed())) {
            emit_json(exponents_json(divisor_from_json(read_json_file(c.divisor))));
        } else if (verify->parsed()) {
            validate(c, true);
            const auto& names = suite_names();
            if (std::find(names.begin(), names.end(), c.suite) == names.end())
                throw UsageError("unknown suite '" + c.suite + "'");
            if (c.pole_bound > 4) err << "warning: pole bound above 4 needs much more precision\n";
            SuiteParams p;
            p.M = c.M;
            p.N = c.N;
            p.box = c.box;
            p.samples = c.samples;
            p.seed = c.seed;
            p.precision = c.precision;
            p.pole_bound = c.pole_bound;
            p.failure_cap = c.failure_cap;
            p.truncation = c.truncation;
            p.execution = c.serial ? Execution::Serial : Execution::Parallel;
            const SuiteReport r = run_suite(c.suite, p);
            const std::string text = r.to_json().dump(2) + "\n";
            if (!c.json_out.empty()) {
                std::ofstream f(c.json_out);
                if (!f) throw UsageError("cannot write " + c.json_out);
                f << text;
            }
            emit(c.suite + ": " + (r.passed() ? "pass" : "FAIL") + " trials=" + std::to_string(r.trials) +
                 " violations=" + std::to_string(r.violations) +
                 " precision_failures=" + std::to_string(r.precision_failures) + "\n");
            return r.exit_code();
        }
    } catch (const PrecisionExhausted& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InsufficientPrecision& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}
