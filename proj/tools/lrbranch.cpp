// lrbranch: exact Littlewood-Richardson, Schubert, Horn-cone and Kronecker
// computations with deterministic machine-readable output.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 internal assertion (a verified identity failed; never expected).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lrb/horncone.hpp"
#include "lrb/kronecker.hpp"
#include "lrb/lrcalc.hpp"
#include "lrb/reduction.hpp"
#include "lrb/schubert.hpp"
#include "lrb/weights.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;

json json_int(const lrb::Int& v) {
    // Decimal string once past 64 bits; plain number otherwise.
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

// Every command renders through the same envelope so bytes are reproducible.
struct Envelope {
    std::string command;
    json inputs;
    json result;
    std::vector<std::string> text_lines;  // human rendering of `result`
};

void emit(const Envelope& env, const OutputOptions& opts) {
    std::string payload;
    if (opts.format == "json") {
        json doc;
        doc["command"] = env.command;
        doc["inputs"] = env.inputs;
        doc["result"] = env.result;
        doc["version"] = kVersion;
        payload = doc.dump() + "\n";
    } else {
        std::ostringstream os;
        os << "command: " << env.command << "\n";
        for (auto& [key, value] : env.inputs.items()) {
            os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
               << "\n";
        }
        for (const std::string& line : env.text_lines) os << line << "\n";
        payload = os.str();
    }
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file: " + opts.out_path);
        f << payload;
    } else {
        std::cout << payload;
    }
}

std::string verdict_name(lrb::Verdict v) { return lrb::to_string(v); }

json report_json(const lrb::FactorizationReport& rep) {
    json j;
    j["lambda"] = lrb::to_string(rep.lambda);
    j["mu"] = lrb::to_string(rep.mu);
    j["nu"] = lrb::to_string(rep.nu);
    j["I"] = lrb::to_string(rep.I);
    j["J"] = lrb::to_string(rep.J);
    j["K"] = lrb::to_string(rep.K);
    j["lhs"] = json_int(rep.lhs);
    j["factor_small"] = json_int(rep.factor_small);
    j["factor_large"] = json_int(rep.factor_large);
    j["degree"] = json_int(rep.degree);
    j["on_face"] = rep.on_face;
    j["verdict"] = verdict_name(rep.verdict);
    return j;
}

std::string report_line(const lrb::FactorizationReport& rep) {
    std::ostringstream os;
    os << "lambda=" << lrb::to_string(rep.lambda) << " mu=" << lrb::to_string(rep.mu)
       << " nu=" << lrb::to_string(rep.nu) << " I=" << lrb::to_string(rep.I)
       << " J=" << lrb::to_string(rep.J) << " K=" << lrb::to_string(rep.K)
       << " lhs=" << rep.lhs << " factors=" << rep.factor_small << "*" << rep.factor_large
       << " degree=" << rep.degree << " on_face=" << (rep.on_face ? "true" : "false")
       << " verdict=" << verdict_name(rep.verdict);
    return os.str();
}

int oracle_rank_bound() {
    if (const char* env = std::getenv("LR_REDUCE_ORACLE_BOUND")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw lrb::ParseError("LR_REDUCE_ORACLE_BOUND: not an integer");
        }
    }
    return lrb::OracleLimits{}.max_rank;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact type-A branching computations"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", opts.out_path, "write output to a file instead of stdout");

    // ---- lr ----
    std::string lr_lambda, lr_mu, lr_nu;
    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c_{lambda,mu}^nu");
    lr_cmd->add_option("--lambda", lr_lambda, "partition, e.g. 2,1")->required();
    lr_cmd->add_option("--mu", lr_mu, "partition")->required();
    lr_cmd->add_option("--nu", lr_nu, "partition")->required();
    lr_cmd->callback([&] {
        const lrb::Partition lambda = lrb::parse_partition(lr_lambda);
        const lrb::Partition mu = lrb::parse_partition(lr_mu);
        const lrb::Partition nu = lrb::parse_partition(lr_nu);
        const lrb::Int c = lrb::lr_coefficient(lambda, mu, nu);
        Envelope env;
        env.command = "lr";
        env.inputs = {{"lambda", lrb::to_string(lambda)},
                      {"mu", lrb::to_string(mu)},
                      {"nu", lrb::to_string(nu)}};
        env.result = {{"coefficient", json_int(c)}};
        env.text_lines = {"coefficient: " + c.str()};
        emit(env, opts);
    });

    // ---- triple ----
    int triple_n = 0;
    std::string t_lambda, t_mu, t_nu;
    bool t_oracle = false;
    auto* triple_cmd =
        app.add_subcommand("triple", "invariant dimension c^n_{lambda,mu,nu} for GL_n weights");
    triple_cmd->add_option("--n", triple_n, "rank")->required();
    triple_cmd->add_option("--lambda", t_lambda, "weight, e.g. 1,1,0,0,-1,-1")->required();
    triple_cmd->add_option("--mu", t_mu, "weight")->required();
    triple_cmd->add_option("--nu", t_nu, "weight")->required();
    triple_cmd->add_flag("--oracle", t_oracle,
                         "cross-check with the independent torus-weight oracle");
    triple_cmd->callback([&] {
        const lrb::Weight lambda = lrb::parse_weight(t_lambda);
        const lrb::Weight mu = lrb::parse_weight(t_mu);
        const lrb::Weight nu = lrb::parse_weight(t_nu);
        const auto tc = lrb::triple_coefficient(lambda, mu, nu, triple_n);
        Envelope env;
        env.command = "triple";
        env.inputs = {{"lambda", lrb::to_string(lambda)},
                      {"mu", lrb::to_string(mu)},
                      {"n", triple_n},
                      {"nu", lrb::to_string(nu)}};
        env.result = {{"coefficient", json_int(tc.value)}};
        env.text_lines = {"coefficient: " + tc.value.str()};
        if (t_oracle) {
            lrb::OracleLimits limits;
            limits.max_rank = oracle_rank_bound();
            const lrb::Int check = lrb::oracle_triple_coefficient(lambda, mu, nu, triple_n, limits);
            env.result["oracle"] = json_int(check);
            env.text_lines.push_back("oracle: " + check.str());
            if (check != tc.value) {
                throw lrb::TheoremViolation("oracle disagrees with triple_coefficient");
            }
        }
        emit(env, opts);
    });

    // ---- schubert ----
    auto* schubert_cmd = app.add_subcommand("schubert", "cohomology of Gr(r,n)");
    schubert_cmd->require_subcommand(1);
    schubert_cmd->fallthrough();
    int s_r = 0, s_n = 0;
    std::string s_I, s_J, s_K;
    int faces_d = 1;
    bool faces_all = false;

    auto* degree_cmd = schubert_cmd->add_subcommand("degree", "d with sigma_I.sigma_J.sigma_K = d[pt]");
    degree_cmd->add_option("--r", s_r)->required();
    degree_cmd->add_option("--n", s_n)->required();
    degree_cmd->add_option("--I", s_I)->required();
    degree_cmd->add_option("--J", s_J)->required();
    degree_cmd->add_option("--K", s_K)->required();
    degree_cmd->callback([&] {
        const lrb::SchubertIndex I = lrb::parse_subset(s_I, s_n);
        const lrb::SchubertIndex J = lrb::parse_subset(s_J, s_n);
        const lrb::SchubertIndex K = lrb::parse_subset(s_K, s_n);
        if (I.r() != s_r || J.r() != s_r || K.r() != s_r) {
            throw std::invalid_argument("subset size does not match --r");
        }
        const auto deg = lrb::triple_degree(I, J, K);
        Envelope env;
        env.command = "schubert-degree";
        env.inputs = {{"I", lrb::to_string(I)}, {"J", lrb::to_string(J)},
                      {"K", lrb::to_string(K)}, {"n", s_n}, {"r", s_r}};
        env.result = {{"d", json_int(deg.d)}};
        env.text_lines = {"d: " + deg.d.str()};
        emit(env, opts);
    });

    auto* expand_cmd = schubert_cmd->add_subcommand("expand", "sigma_I.sigma_J in the sigma basis");
    expand_cmd->add_option("--r", s_r)->required();
    expand_cmd->add_option("--n", s_n)->required();
    expand_cmd->add_option("--I", s_I)->required();
    expand_cmd->add_option("--J", s_J)->required();
    expand_cmd->callback([&] {
        const lrb::SchubertIndex I = lrb::parse_subset(s_I, s_n);
        const lrb::SchubertIndex J = lrb::parse_subset(s_J, s_n);
        if (I.r() != s_r || J.r() != s_r) {
            throw std::invalid_argument("subset size does not match --r");
        }
        const auto terms = lrb::product_expansion(I, J);
        Envelope env;
        env.command = "schubert-expand";
        env.inputs = {{"I", lrb::to_string(I)}, {"J", lrb::to_string(J)},
                      {"n", s_n}, {"r", s_r}};
        json arr = json::array();
        for (const auto& [index, coeff] : terms) {
            arr.push_back({{"coefficient", json_int(coeff)}, {"index", lrb::to_string(index)}});
            env.text_lines.push_back("sigma_{" + lrb::to_string(index) + "}: " + coeff.str());
        }
        env.result = {{"terms", arr}};
        if (terms.empty()) env.text_lines = {"terms: none (product is zero)"};
        emit(env, opts);
    });

    auto* faces_cmd = schubert_cmd->add_subcommand("faces", "triples with sigma_I.sigma_J.sigma_K = d[pt]");
    faces_cmd->add_option("--r", s_r)->required();
    faces_cmd->add_option("--n", s_n)->required();
    faces_cmd->add_option("--d", faces_d, "degree filter")->capture_default_str();
    faces_cmd->add_flag("--all-degrees", faces_all, "every triple with d >= 1");
    faces_cmd->callback([&] {
        const auto triples = faces_all ? lrb::enumerate_positive_triples(s_r, s_n)
                                       : lrb::enumerate_pt_triples(s_r, s_n, faces_d);
        Envelope env;
        env.command = "schubert-faces";
        env.inputs = {{"n", s_n}, {"r", s_r}};
        if (faces_all) {
            env.inputs["d"] = "all";
        } else {
            env.inputs["d"] = faces_d;
        }
        json arr = json::array();
        env.text_lines.push_back("count: " + std::to_string(triples.size()));
        for (const auto& t : triples) {
            arr.push_back({{"I", lrb::to_string(t.I)}, {"J", lrb::to_string(t.J)},
                           {"K", lrb::to_string(t.K)}});
            env.text_lines.push_back("I={" + lrb::to_string(t.I) + "} J={" + lrb::to_string(t.J) +
                                     "} K={" + lrb::to_string(t.K) + "}");
        }
        env.result = {{"count", triples.size()}, {"triples", arr}};
        emit(env, opts);
    });

    // ---- horn ----
    int h_n = 0;
    std::string h_lambda, h_mu, h_nu;
    bool h_variant = false;
    auto* horn_cmd = app.add_subcommand("horn", "cone membership by the face inequality system");
    horn_cmd->add_option("--n", h_n)->required();
    horn_cmd->add_option("--lambda", h_lambda)->required();
    horn_cmd->add_option("--mu", h_mu)->required();
    horn_cmd->add_option("--nu", h_nu)->required();
    horn_cmd->add_flag("--d-variant", h_variant, "use every triple with d >= 1");
    horn_cmd->callback([&] {
        const lrb::Weight lambda = lrb::parse_weight(h_lambda);
        const lrb::Weight mu = lrb::parse_weight(h_mu);
        const lrb::Weight nu = lrb::parse_weight(h_nu);
        const auto cert = lrb::horn_member(lambda, mu, nu, h_n, h_variant);
        Envelope env;
        env.command = "horn";
        env.inputs = {{"d_variant", h_variant},
                      {"lambda", lrb::to_string(lambda)},
                      {"mu", lrb::to_string(mu)},
                      {"n", h_n},
                      {"nu", lrb::to_string(nu)}};
        env.result = {{"member", cert.member}, {"trace", cert.trace}};
        env.text_lines = {std::string("member: ") + (cert.member ? "true" : "false"),
                          "trace: " + std::to_string(cert.trace)};
        if (cert.violated) {
            const auto& v = *cert.violated;
            env.result["violated"] = {{"I", lrb::to_string(v.I)}, {"J", lrb::to_string(v.J)},
                                      {"K", lrb::to_string(v.K)}, {"lhs", v.lhs}, {"r", v.r}};
            env.text_lines.push_back("violated: r=" + std::to_string(v.r) + " I={" +
                                     lrb::to_string(v.I) + "} J={" + lrb::to_string(v.J) +
                                     "} K={" + lrb::to_string(v.K) +
                                     "} lhs=" + std::to_string(v.lhs));
        }
        emit(env, opts);
    });

    // ---- reduce ----
    int rd_n = 0, rd_r = 0, rd_bound = 0;
    std::string rd_lambda, rd_mu, rd_nu, rd_I, rd_J, rd_K;
    bool rd_sweep = false, rd_all = false;
    auto* reduce_cmd = app.add_subcommand("reduce", "face factorization of c^n, single or sweep");
    reduce_cmd->add_option("--n", rd_n)->required();
    reduce_cmd->add_flag("--sweep", rd_sweep, "verify every face over a bounded weight box");
    reduce_cmd->add_option("--lambda", rd_lambda);
    reduce_cmd->add_option("--mu", rd_mu);
    reduce_cmd->add_option("--nu", rd_nu);
    reduce_cmd->add_option("--r", rd_r);
    reduce_cmd->add_option("--I", rd_I);
    reduce_cmd->add_option("--J", rd_J);
    reduce_cmd->add_option("--K", rd_K);
    reduce_cmd->add_option("--bound", rd_bound, "entry bound for --sweep");
    reduce_cmd->add_flag("--all-degrees", rd_all, "sweep triples with any d >= 1");
    reduce_cmd->callback([&] {
        Envelope env;
        if (rd_sweep) {
            if (rd_bound <= 0) throw std::invalid_argument("--sweep requires --bound >= 1");
            std::optional<int> only_r;
            if (reduce_cmd->count("--r")) only_r = rd_r;
            json inputs = {{"all_degrees", rd_all}, {"bound", rd_bound}, {"n", rd_n}};
            if (only_r) inputs["r"] = *only_r;

            // Sweeps can run to millions of reports; stream them instead of
            // building one envelope in memory. The key order stays canonical
            // because "total" sorts after "reports".
            std::ofstream file;
            if (!opts.out_path.empty()) {
                file.open(opts.out_path, std::ios::binary);
                if (!file) throw std::invalid_argument("cannot open output file: " + opts.out_path);
            }
            std::ostream& os = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
            long long total = 0;
            if (opts.format == "json") {
                os << R"({"command":"reduce-sweep","inputs":)" << inputs.dump()
                   << R"(,"result":{"reports":[)";
                lrb::sweep_faces_visit(rd_n, rd_bound, only_r, rd_all, {},
                                       [&](const lrb::FactorizationReport& rep) {
                                           if (total++) os << ",";
                                           os << report_json(rep).dump();
                                       });
                os << R"(],"total":)" << total << R"(},"version":")" << kVersion << "\"}\n";
            } else {
                os << "command: reduce-sweep\n";
                for (auto& [key, value] : inputs.items()) {
                    os << key << ": " << value.dump() << "\n";
                }
                lrb::sweep_faces_visit(rd_n, rd_bound, only_r, rd_all, {},
                                       [&](const lrb::FactorizationReport& rep) {
                                           ++total;
                                           os << report_line(rep) << "\n";
                                       });
                os << "total: " << total << "\n";
            }
            return;
        }
        for (const char* flag : {"--lambda", "--mu", "--nu", "--I", "--J", "--K"}) {
            if (!reduce_cmd->count(flag)) {
                throw lrb::ParseError(std::string("reduce: missing ") + flag);
            }
        }
        const lrb::Weight lambda = lrb::parse_weight(rd_lambda);
        const lrb::Weight mu = lrb::parse_weight(rd_mu);
        const lrb::Weight nu = lrb::parse_weight(rd_nu);
        const lrb::SchubertIndex I = lrb::parse_subset(rd_I, rd_n);
        const lrb::SchubertIndex J = lrb::parse_subset(rd_J, rd_n);
        const lrb::SchubertIndex K = lrb::parse_subset(rd_K, rd_n);
        const auto rep = lrb::factorize(lambda, mu, nu, I, J, K);
        env.command = "reduce";
        env.inputs = {{"I", lrb::to_string(I)},      {"J", lrb::to_string(J)},
                      {"K", lrb::to_string(K)},      {"lambda", lrb::to_string(lambda)},
                      {"mu", lrb::to_string(mu)},    {"n", rd_n},
                      {"nu", lrb::to_string(nu)}};
        env.result = {{"degree", json_int(rep.degree)},
                      {"factor_large", json_int(rep.factor_large)},
                      {"factor_small", json_int(rep.factor_small)},
                      {"lhs", json_int(rep.lhs)},
                      {"on_face", rep.on_face},
                      {"verdict", verdict_name(rep.verdict)}};
        env.text_lines = {"lhs: " + rep.lhs.str(),
                          "factor_small: " + rep.factor_small.str(),
                          "factor_large: " + rep.factor_large.str(),
                          "degree: " + rep.degree.str(),
                          std::string("on_face: ") + (rep.on_face ? "true" : "false"),
                          "verdict: " + verdict_name(rep.verdict)};
        emit(env, opts);
    });

    // ---- kron ----
    auto* kron_cmd = app.add_subcommand("kron", "symmetric group characters and Kronecker coefficients");
    kron_cmd->require_subcommand(1);
    kron_cmd->fallthrough();
    std::string k_alpha, k_beta, k_gamma;
    int k_n = 0;

    auto* coeff_cmd = kron_cmd->add_subcommand("coeff", "k_{alpha,beta,gamma}");
    coeff_cmd->add_option("--alpha", k_alpha)->required();
    coeff_cmd->add_option("--beta", k_beta)->required();
    coeff_cmd->add_option("--gamma", k_gamma)->required();
    coeff_cmd->callback([&] {
        const lrb::Partition a = lrb::parse_partition(k_alpha);
        const lrb::Partition b = lrb::parse_partition(k_beta);
        const lrb::Partition g = lrb::parse_partition(k_gamma);
        const auto k = lrb::kronecker_coefficient(a, b, g);
        Envelope env;
        env.command = "kron-coeff";
        env.inputs = {{"alpha", lrb::to_string(a)}, {"beta", lrb::to_string(b)},
                      {"gamma", lrb::to_string(g)}};
        env.result = {{"coefficient", json_int(k.value)}};
        env.text_lines = {"coefficient: " + k.value.str()};
        emit(env, opts);
    });

    auto* table_cmd = kron_cmd->add_subcommand("table", "character table of S_n");
    table_cmd->add_option("--n", k_n)->required();
    table_cmd->callback([&] {
        const auto& t = lrb::character_table(k_n);
        Envelope env;
        env.command = "kron-table";
        env.inputs = {{"n", k_n}};
        json classes = json::array(), irreps = json::array(), sizes = json::array(),
             values = json::array();
        for (const auto& c : t.classes) classes.push_back(lrb::to_string(c));
        for (const auto& r : t.irreps) irreps.push_back(lrb::to_string(r));
        for (long long s : t.class_sizes) sizes.push_back(s);
        for (const auto& row : t.values) values.push_back(row);
        env.result = {{"class_sizes", sizes}, {"classes", classes},
                      {"irreps", irreps},     {"values", values}};
        {
            std::ostringstream os;
            os << "classes:";
            for (const auto& c : t.classes) os << " (" << lrb::to_string(c) << ")";
            env.text_lines.push_back(os.str());
        }
        for (std::size_t i = 0; i < t.irreps.size(); ++i) {
            std::ostringstream os;
            os << "chi(" << lrb::to_string(t.irreps[i]) << "):";
            for (long long v : t.values[i]) os << " " << v;
            env.text_lines.push_back(os.str());
        }
        emit(env, opts);
    });

    auto* ml_cmd = kron_cmd->add_subcommand("ml-check", "first-row reduction report");
    ml_cmd->add_option("--alpha", k_alpha)->required();
    ml_cmd->add_option("--beta", k_beta)->required();
    ml_cmd->add_option("--gamma", k_gamma)->required();
    ml_cmd->callback([&] {
        const lrb::Partition a = lrb::parse_partition(k_alpha);
        const lrb::Partition b = lrb::parse_partition(k_beta);
        const lrb::Partition g = lrb::parse_partition(k_gamma);
        const auto rep = lrb::murnaghan_littlewood_check(a, b, g);
        Envelope env;
        env.command = "kron-ml-check";
        env.inputs = {{"alpha", lrb::to_string(a)}, {"beta", lrb::to_string(b)},
                      {"gamma", lrb::to_string(g)}};
        env.result = {{"depth_lhs", rep.depth_lhs},
                      {"depth_rhs", rep.depth_rhs},
                      {"equality_case", rep.equality_case},
                      {"k", json_int(rep.k)}};
        env.text_lines = {"k: " + rep.k.str(),
                          "depth_lhs: " + std::to_string(rep.depth_lhs),
                          "depth_rhs: " + std::to_string(rep.depth_rhs),
                          std::string("equality_case: ") + (rep.equality_case ? "true" : "false")};
        if (rep.lr) {
            env.result["lr"] = json_int(*rep.lr);
            env.text_lines.push_back("lr: " + rep.lr->str());
        }
        emit(env, opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const lrb::ParseError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    } catch (const lrb::TheoremViolation& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 4;
    }
    return 0;
}
