// Batch front-end: parses words/lengths/Fourier data, dispatches the module
// pipelines, and emits machine-readable reports with the resolved settings
// embedded.  Exit codes: 0 pass, 1 fail verdict, 2 input error, 3 undecided
// or budget outcomes.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "lacunae/errors.hpp"
#include "lacunae/json_io.hpp"
#include "lacunae/magnus.hpp"

namespace {

using namespace lacunae;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;

struct Output {
    std::string path;    // empty = stdout
    std::string format;  // json | csv

    void emit(const std::string& json_text) const {
        std::string body = format == "csv" ? json_to_csv(json_text) : json_text + "\n";
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(path);
            if (!out) throw InputError("cannot write '" + path + "'");
            out << body;
        }
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<double> parse_t_list(const std::string& spec) {
    std::vector<double> out;
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    if (out.empty()) throw InputError("empty t list");
    return out;
}

void apply_config_file(JobConfig& config, const std::string& path) {
    auto doc = nlohmann::json::parse(slurp(path));
    if (!doc.is_object()) throw InputError("config must be a JSON object");
    config.rank = doc.value("rank", config.rank);
    config.length = doc.value("length", config.length);
    config.truncation_degree = doc.value("truncation_degree", config.truncation_degree);
    config.ball_radius = doc.value("ball_radius", config.ball_radius);
    if (doc.contains("t_grid")) {
        const auto& grid = doc.at("t_grid");
        config.t_grid.count = grid.value("count", config.t_grid.count);
        config.t_grid.lo_factor = grid.value("lo_factor", config.t_grid.lo_factor);
        config.t_grid.hi_factor = grid.value("hi_factor", config.t_grid.hi_factor);
    }
    config.eig_tolerance = doc.value("eig_tolerance", config.eig_tolerance);
    config.norm_tolerance = doc.value("norm_tolerance", config.norm_tolerance);
    config.positivity_tolerance = doc.value("positivity_tolerance", config.positivity_tolerance);
    config.seed = doc.value("seed", config.seed);
    config.output_format = doc.value("output_format", config.output_format);
    config.jobs = doc.value("jobs", config.jobs);
}

// Wraps a payload writer in the common envelope with the resolved config.
template <typename Fn>
std::string envelope(const JobConfig& config, const std::string& schema, Fn&& payload) {
    JsonWriter w;
    w.begin_object();
    w.field("schema", schema);
    w.key("config");
    write_config(w, config);
    payload(w);
    w.end_object();
    return w.str();
}

std::vector<std::vector<Word>> load_sequences(int rank, const std::string& path) {
    auto doc = nlohmann::json::parse(slurp(path));
    std::vector<std::vector<Word>> out;
    auto parse_list = [rank](const nlohmann::json& list) {
        std::vector<Word> words;
        for (const auto& item : list) {
            if (item.is_string())
                words.push_back(parse_word(rank, item.get<std::string>()));
            else
                words.push_back(word_from_json_text(rank, item.dump()));
        }
        return words;
    };
    if (doc.is_object() && doc.contains("sequences")) {
        for (const auto& seq : doc.at("sequences")) out.push_back(parse_list(seq));
    } else if (doc.is_object() && doc.contains("words")) {
        out.push_back(parse_list(doc.at("words")));
    } else if (doc.is_array()) {
        out.push_back(parse_list(doc));
    } else {
        throw InputError("expected a word array, a {\"words\": []} or a {\"sequences\": [[]]} document");
    }
    return out;
}

std::vector<Coefficient> parse_coefficients(const nlohmann::json& doc, std::size_t count, int dim) {
    std::vector<Coefficient> coeffs;
    if (!doc.is_array()) throw InputError("'coefficients' must be an array");
    for (const auto& entry : doc) {
        Coefficient c = Coefficient::Zero(dim, dim);
        if (entry.is_number()) {
            if (dim != 1) throw InputError("scalar coefficient for matrix dimension");
            c(0, 0) = entry.get<double>();
        } else if (entry.is_array()) {
            if (static_cast<int>(entry.size()) != dim * dim)
                throw InputError("coefficient needs dim*dim entries");
            int idx = 0;
            for (const auto& cell : entry) {
                double re, im = 0.0;
                if (cell.is_number()) {
                    re = cell.get<double>();
                } else {
                    re = cell.at(0).get<double>();
                    im = cell.at(1).get<double>();
                }
                c(idx / dim, idx % dim) = {re, im};
                ++idx;
            }
        } else {
            throw InputError("bad coefficient entry");
        }
        coeffs.push_back(std::move(c));
    }
    if (coeffs.size() != count)
        throw InputError("coefficient count does not match the sequence");
    return coeffs;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Desk-scale toolkit for free-group Fourier analysis: exact word "
                 "and series arithmetic, bi-invariant order computations, "
                 "kernel certificates and compression-based norm estimates"};
    app.require_subcommand(1);

    JobConfig config;
    config.budget_bytes = budget_bytes_from_env(config.budget_bytes);
    Output output;
    output.format = "json";

    app.add_option("--rank", config.rank, "free group rank")->capture_default_str();
    app.add_option("--length", config.length,
                   "length kind: word | q:<v> | psiz | pullback:m1,m2,...")
        ->capture_default_str();
    app.add_option("--degree", config.truncation_degree, "series truncation degree (0 = auto)");
    app.add_option("--radius", config.ball_radius, "compression ball radius")
        ->capture_default_str();
    app.add_option("--tgrid", config.t_grid.count, "t-grid point count")->capture_default_str();
    app.add_option("--seed", config.seed, "estimator start-vector seed");
    app.add_option("--norm-tol", config.norm_tolerance, "iterative norm tolerance");
    app.add_option("--jobs", config.jobs, "parallel jobs for batched certifications");
    app.add_option("--format", output.format, "json | csv")->capture_default_str();
    app.add_option("--out", output.path, "write the report here instead of stdout");
    std::string config_path;
    app.add_option("--config", config_path, "JSON file with JobConfig fields");

    int exit_code = kExitPass;

    // ---- words -------------------------------------------------------------
    auto* words_cmd = app.add_subcommand("words", "reduce, multiply, invert, enumerate");
    words_cmd->fallthrough();
    std::vector<std::string> word_args;
    std::string words_action;
    words_cmd->add_option("action", words_action, "reduce | mul | inv | ball | length")
        ->required();
    words_cmd->add_option("operands", word_args, "word operands");
    words_cmd->callback([&] {
        if (words_action == "ball") {
            auto b = ball(config.rank, config.ball_radius, config.max_ball_words());
            output.emit(envelope(config, "ball/1", [&](JsonWriter& w) {
                w.field("size", b.size());
                w.key("words");
                w.begin_array();
                for (const auto& g : b) w.value(to_string(g));
                w.end_array();
            }));
            return;
        }
        if (word_args.empty()) throw InputError("missing word operand");
        Word g = word_from_json_text(config.rank, word_args[0]);
        if (words_action == "reduce") {
            output.emit(envelope(config, "word/1",
                                 [&](JsonWriter& w) { w.field("word", to_string(g)); }));
        } else if (words_action == "inv") {
            output.emit(envelope(config, "word/1",
                                 [&](JsonWriter& w) { w.field("word", to_string(inverse(g))); }));
        } else if (words_action == "mul") {
            if (word_args.size() < 2) throw InputError("mul needs two operands");
            Word h = word_from_json_text(config.rank, word_args[1]);
            output.emit(envelope(config, "word/1", [&](JsonWriter& w) {
                w.field("word", to_string(multiply(g, h)));
            }));
        } else if (words_action == "length") {
            LengthFunction psi = parse_length(config.length);
            output.emit(envelope(config, "length/1", [&](JsonWriter& w) {
                w.field("word", to_string(g));
                w.field("kind", psi.describe());
                w.field("value", psi(g));
                auto exact = psi.exact(g);
                if (exact) w.field("exact", exact->str());
            }));
        } else {
            throw InputError("unknown words action '" + words_action + "'");
        }
    });

    // ---- magnus ------------------------------------------------------------
    auto* magnus_cmd = app.add_subcommand("magnus", "series embedding and J coefficients");
    magnus_cmd->fallthrough();
    std::string magnus_action, magnus_word, magnus_monomial = "A";
    magnus_cmd->add_option("action", magnus_action, "embed | j | membership | transfer")
        ->required();
    magnus_cmd->add_option("word", magnus_word, "input word")->required();
    magnus_cmd->add_option("--monomial", magnus_monomial, "monomial name for 'j'");
    magnus_cmd->callback([&] {
        Word g = word_from_json_text(config.rank, magnus_word);
        if (magnus_action == "embed") {
            int degree = config.truncation_degree > 0 ? config.truncation_degree
                                                      : default_truncation_degree(g);
            NCPolynomial mu = magnus_embed(g, degree);
            output.emit(envelope(config, "magnus-embed/1", [&](JsonWriter& w) {
                w.field("word", to_string(g));
                w.key("series");
                write_polynomial(w, mu);
            }));
        } else if (magnus_action == "j") {
            Monomial m = parse_monomial(magnus_monomial, config.rank);
            output.emit(envelope(config, "magnus-j/1", [&](JsonWriter& w) {
                w.field("word", to_string(g));
                w.field("monomial", monomial_name(m, config.rank));
                w.key("coefficient");
                w.value(j_coefficient(g, m));
            }));
        } else if (magnus_action == "membership") {
            SubgroupMembership m = subgroup_membership(g);
            output.emit(envelope(config, "magnus-membership/1", [&](JsonWriter& w) {
                w.field("word", to_string(g));
                w.field("in_f0", m.in_f0);
                w.field("in_f00", m.in_f00);
            }));
        } else if (magnus_action == "transfer") {
            bool ok = transference_check(g);
            if (!ok) exit_code = kExitFail;
            output.emit(envelope(config, "magnus-transfer/1", [&](JsonWriter& w) {
                w.field("word", to_string(g));
                w.field("identity_holds", ok);
            }));
        } else {
            throw InputError("unknown magnus action '" + magnus_action + "'");
        }
    });

    // ---- order -------------------------------------------------------------
    auto* order_cmd = app.add_subcommand("order", "bi-invariant order queries");
    order_cmd->fallthrough();
    std::string order_action;
    std::vector<std::string> order_args;
    order_cmd->add_option("action", order_action, "compare | sort | split")->required();
    order_cmd->add_option("operands", order_args, "words or input file");
    order_cmd->callback([&] {
        int max_degree = config.truncation_degree;
        if (order_action == "compare") {
            if (order_args.size() < 2) throw InputError("compare needs two words");
            Word g = word_from_json_text(config.rank, order_args[0]);
            Word h = word_from_json_text(config.rank, order_args[1]);
            OrderVerdict v = order_compare(g, h, max_degree);
            if (!v.decided()) exit_code = kExitUndecided;
            output.emit(envelope(config, "order-compare/1", [&](JsonWriter& w) {
                w.field("lhs", to_string(g));
                w.field("rhs", to_string(h));
                w.key("verdict");
                write_order_verdict(w, v, config.rank);
            }));
        } else if (order_action == "sort") {
            if (order_args.empty()) throw InputError("sort needs an input file");
            auto sequences = load_sequences(config.rank, order_args[0]);
            auto sorted = order_sort(sequences.at(0), max_degree);
            output.emit(envelope(config, "order-sort/1", [&](JsonWriter& w) {
                w.key("words");
                w.begin_array();
                for (const auto& g : sorted) w.value(to_string(g));
                w.end_array();
            }));
        } else if (order_action == "split") {
            if (order_args.empty()) throw InputError("split needs a Fourier element file");
            FourierElement x = parse_fourier_file(order_args[0]);
            auto [pos, neg] = positive_part_split(x, max_degree);
            output.emit(envelope(config, "order-split/1", [&](JsonWriter& w) {
                w.key("positive");
                write_fourier(w, pos);
                w.key("negative");
                write_fourier(w, neg);
            }));
        } else {
            throw InputError("unknown order action '" + order_action + "'");
        }
    });

    // ---- cnd ---------------------------------------------------------------
    auto* cnd_cmd = app.add_subcommand("cnd", "conditional negativity certificates");
    cnd_cmd->fallthrough();
    std::string schoenberg_spec;
    cnd_cmd->add_option("--schoenberg", schoenberg_spec, "comma-separated t grid");
    cnd_cmd->callback([&] {
        LengthFunction psi = parse_length(config.length);
        auto words = ball(config.rank, config.ball_radius, config.max_ball_words());
        GramReport gram = cnd_gram_test(psi, words, config.eig_tolerance);
        if (!gram.pass) exit_code = kExitFail;
        bool with_schoenberg = !schoenberg_spec.empty();
        SchoenbergReport schoenberg;
        if (with_schoenberg) {
            schoenberg = schoenberg_test(psi, words, parse_t_list(schoenberg_spec),
                                         config.positivity_tolerance);
            if (!schoenberg.pass) exit_code = kExitFail;
        }
        output.emit(envelope(config, "cnd/1", [&](JsonWriter& w) {
            w.field("length", psi.describe());
            w.key("gram");
            write_gram_report(w, gram);
            if (with_schoenberg) {
                w.key("schoenberg");
                write_schoenberg_report(w, schoenberg);
            }
        }));
    });

    // ---- certify -----------------------------------------------------------
    auto* certify_cmd = app.add_subcommand("certify", "lacunarity certificates");
    certify_cmd->fallthrough();
    std::string certify_kind, certify_words;
    int candidate_length = 6;
    certify_cmd->add_option("kind", certify_kind, "psi | rudin | prop51")->required();
    certify_cmd->add_option("--words", certify_words, "JSON word sequence file")->required();
    certify_cmd->add_option("--candidate-length", candidate_length,
                            "positive-word candidate length for rudin");
    certify_cmd->callback([&] {
        auto sequences = load_sequences(config.rank, certify_words);
        LengthFunction psi = parse_length(config.length);
        auto run_one = [&](const std::vector<Word>& seq) {
            if (certify_kind == "psi") return psi_lacunary_delta(psi, seq);
            if (certify_kind == "rudin")
                return rudin_lacunarity_estimate(seq, {},
                                                 RudinOptions{candidate_length,
                                                              config.truncation_degree});
            if (certify_kind == "prop51") return prop51_check(seq);
            throw InputError("unknown certify kind '" + certify_kind + "'");
        };
        std::vector<LacunarityCertificate> certs(sequences.size());
        if (config.jobs > 1 && sequences.size() > 1) {
            std::vector<std::future<LacunarityCertificate>> futures;
            for (const auto& seq : sequences)
                futures.push_back(std::async(std::launch::async, run_one, std::cref(seq)));
            for (std::size_t i = 0; i < futures.size(); ++i) certs[i] = futures[i].get();
        } else {
            for (std::size_t i = 0; i < sequences.size(); ++i) certs[i] = run_one(sequences[i]);
        }
        for (const auto& cert : certs)
            if (!cert.pass) exit_code = kExitFail;
        output.emit(envelope(config, "certify/1", [&](JsonWriter& w) {
            w.field("kind", certify_kind);
            w.field("length", psi.describe());
            w.key("certificates");
            w.begin_array();
            for (const auto& cert : certs) write_certificate(w, cert);
            w.end_array();
        }));
    });

    // ---- norm --------------------------------------------------------------
    auto* norm_cmd = app.add_subcommand("norm", "compression norm estimates");
    norm_cmd->fallthrough();
    std::string norm_action, norm_input;
    norm_cmd->add_option("action", norm_action, "op | bmo | h1")->required();
    norm_cmd->add_option("--input", norm_input, "Fourier element JSON file")->required();
    norm_cmd->callback([&] {
        FourierElement x = parse_fourier_file(norm_input);
        EstimatorOptions opts = config.estimator();
        if (norm_action == "op") {
            NormEstimate est = operator_norm_estimate(x, config.ball_radius, opts);
            output.emit(envelope(config, "norm-op/1", [&](JsonWriter& w) {
                w.key("estimate");
                write_norm_estimate(w, est);
            }));
        } else if (norm_action == "bmo") {
            LengthFunction psi = parse_length(config.length);
            auto grid = default_t_grid(x, psi, config.t_grid);
            BmoEstimate est = bmo_norm_estimate(x, psi, grid, config.ball_radius, opts);
            output.emit(envelope(config, "norm-bmo/1", [&](JsonWriter& w) {
                w.field("length", psi.describe());
                w.key("estimate");
                write_bmo_estimate(w, est);
            }));
        } else if (norm_action == "h1") {
            LengthFunction psi = parse_length(config.length);
            SpectralTraceReport est = h1_norm_estimate(x, psi, config.ball_radius, opts);
            output.emit(envelope(config, "norm-h1/1", [&](JsonWriter& w) {
                w.field("length", psi.describe());
                w.key("estimate");
                write_spectral_report(w, est);
            }));
        } else {
            throw InputError("unknown norm action '" + norm_action + "'");
        }
    });

    // ---- paley -------------------------------------------------------------
    auto* paley_cmd = app.add_subcommand("paley", "equivalence and split reports");
    paley_cmd->fallthrough();
    std::string paley_action, paley_input;
    paley_cmd->add_option("action", paley_action, "theorem1 | lambda4 | split | jab")
        ->required();
    paley_cmd->add_option("--input", paley_input, "input JSON file")->required();
    paley_cmd->callback([&] {
        auto doc = nlohmann::json::parse(slurp(paley_input));
        if (paley_action == "theorem1" || paley_action == "lambda4") {
            if (!doc.contains("sequence")) throw InputError("input needs a 'sequence' field");
            int rank = doc.value("rank", config.rank);
            int dim = doc.value("dim", 1);
            std::vector<Word> seq;
            for (const auto& item : doc.at("sequence"))
                seq.push_back(word_from_json_text(rank, item.is_string()
                                                            ? item.get<std::string>()
                                                            : item.dump()));
            std::vector<Coefficient> coeffs;
            if (doc.contains("coefficients")) {
                coeffs = parse_coefficients(doc.at("coefficients"), seq.size(), dim);
            } else {
                coeffs.assign(seq.size(), Coefficient::Identity(dim, dim));
            }
            LengthFunction psi = parse_length(config.length);
            if (paley_action == "theorem1") {
                PaleyConfig pc;
                pc.radius = config.ball_radius;
                pc.t_grid = config.t_grid;
                pc.estimator = config.estimator();
                PaleyReport report = theorem1_check(seq, coeffs, psi, pc);
                if (!report.pass) exit_code = kExitFail;
                output.emit(envelope(config, "paley-theorem1/1", [&](JsonWriter& w) {
                    w.key("report");
                    write_paley_report(w, report);
                }));
            } else {
                Lambda4Report report = lambda4_check(seq, coeffs, psi);
                if (!report.pass) exit_code = kExitFail;
                output.emit(envelope(config, "paley-lambda4/1", [&](JsonWriter& w) {
                    w.key("report");
                    write_lambda4_report(w, report);
                }));
            }
        } else if (paley_action == "split") {
            if (!doc.contains("y") || !doc.contains("z") || !doc.contains("targets"))
                throw InputError("split input needs 'y', 'z' and 'targets'");
            FourierElement y = parse_fourier_json(doc.at("y").dump());
            FourierElement z = parse_fourier_json(doc.at("z").dump());
            std::vector<Word> targets;
            for (const auto& item : doc.at("targets"))
                targets.push_back(word_from_json_text(
                    y.rank(), item.is_string() ? item.get<std::string>() : item.dump()));
            SplitReport report = paley_split(y, z, targets, config.truncation_degree);
            if (!report.pass) exit_code = kExitFail;
            output.emit(envelope(config, "paley-split/1", [&](JsonWriter& w) {
                w.key("report");
                write_split_report(w, report);
            }));
        } else if (paley_action == "jab") {
            FourierElement x = parse_fourier_json(doc.dump());
            JabDecomposition d = jab_decomposition(x);
            output.emit(envelope(config, "paley-jab/1", [&](JsonWriter& w) {
                w.key("p0");
                write_fourier(w, d.p0);
                w.key("p00");
                write_fourier(w, d.p00);
                w.key("ab_plus");
                write_fourier(w, d.ab_plus);
                w.key("ab_minus");
                write_fourier(w, d.ab_minus);
            }));
        } else {
            throw InputError("unknown paley action '" + paley_action + "'");
        }
    });

    // Config file values sit between built-in defaults and explicit flags,
    // so it is applied before CLI11 parses (and runs the verb callbacks).
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") apply_config_file(config, argv[i + 1]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitInput;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const UndecidedOrderError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const ConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
