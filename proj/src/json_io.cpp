#include "lacunae/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lacunae/errors.hpp"

namespace lacunae {

void JsonWriter::separator() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_in_scope_.empty()) {
        if (!first_in_scope_.back()) out_ += ',';
        first_in_scope_.back() = false;
    }
}

void JsonWriter::begin_object() {
    separator();
    out_ += '{';
    first_in_scope_.push_back(true);
}

void JsonWriter::end_object() {
    out_ += '}';
    first_in_scope_.pop_back();
}

void JsonWriter::begin_array() {
    separator();
    out_ += '[';
    first_in_scope_.push_back(true);
}

void JsonWriter::end_array() {
    out_ += ']';
    first_in_scope_.pop_back();
}

namespace {

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

void JsonWriter::key(const std::string& name) {
    separator();
    out_ += '"';
    out_ += escape(name);
    out_ += "\":";
    pending_key_ = true;
}

void JsonWriter::value(const std::string& text) {
    separator();
    out_ += '"';
    out_ += escape(text);
    out_ += '"';
}

void JsonWriter::value(double number) {
    separator();
    if (std::isnan(number) || std::isinf(number)) {
        out_ += "null";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", number);
    out_ += buf;
}

void JsonWriter::value(long long number) {
    separator();
    out_ += std::to_string(number);
}

void JsonWriter::value(unsigned long long number) {
    separator();
    out_ += std::to_string(number);
}

void JsonWriter::value(bool flag) {
    separator();
    out_ += flag ? "true" : "false";
}

void JsonWriter::value_null() {
    separator();
    out_ += "null";
}

void JsonWriter::value(const Integer& number) { value(number.str()); }

void write_config(JsonWriter& w, const JobConfig& config) {
    w.begin_object();
    w.field("rank", config.rank);
    w.field("length", config.length);
    w.field("truncation_degree", config.truncation_degree);
    w.field("ball_radius", config.ball_radius);
    w.key("t_grid");
    w.begin_object();
    w.field("count", config.t_grid.count);
    w.field("lo_factor", config.t_grid.lo_factor);
    w.field("hi_factor", config.t_grid.hi_factor);
    w.end_object();
    w.field("eig_tolerance", config.eig_tolerance);
    w.field("norm_tolerance", config.norm_tolerance);
    w.field("positivity_tolerance", config.positivity_tolerance);
    w.field("seed", static_cast<unsigned long long>(config.seed));
    w.field("output_format", config.output_format);
    w.field("budget_bytes", config.budget_bytes);
    w.field("jobs", config.jobs);
    w.end_object();
}

void write_word(JsonWriter& w, const Word& g) { w.value(to_string(g)); }

void write_polynomial(JsonWriter& w, const NCPolynomial& p) {
    w.begin_object();
    w.field("rank", p.rank());
    w.field("truncation_degree", p.truncation_degree());
    w.key("terms");
    w.begin_object();
    for (const auto& [m, c] : p.terms()) {
        w.key(monomial_name(m, p.rank()));
        w.value(c);
    }
    w.end_object();
    w.field("text", p.to_string());
    w.end_object();
}

void write_fourier(JsonWriter& w, const FourierElement& x) {
    w.begin_object();
    w.field("rank", x.rank());
    w.field("dim", x.coeff_dim());
    w.key("terms");
    w.begin_array();
    for (const auto& [g, c] : x.terms()) {
        w.begin_object();
        w.field("word", to_string(g));
        w.key("coeff");
        w.begin_array();
        for (Eigen::Index i = 0; i < c.rows(); ++i)
            for (Eigen::Index j = 0; j < c.cols(); ++j) {
                w.begin_array();
                w.value(c(i, j).real());
                w.value(c(i, j).imag());
                w.end_array();
            }
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

void write_order_verdict(JsonWriter& w, const OrderVerdict& v, int rank) {
    w.begin_object();
    w.field("relation", relation_name(v.relation));
    if (v.deciding_monomial) {
        w.field("deciding_monomial", monomial_name(*v.deciding_monomial, rank));
        w.field("deciding_degree", *v.deciding_degree);
    }
    w.field("depth", v.depth);
    w.end_object();
}

void write_gram_report(JsonWriter& w, const GramReport& report) {
    w.begin_object();
    w.field("schema", "gram-report/1");
    w.field("matrix_dim", report.matrix_dim);
    w.field("max_constrained_eigenvalue", report.max_constrained_eigenvalue);
    w.field("tolerance", report.tolerance);
    w.field("symmetric_ok", report.symmetric_ok);
    w.field("zero_iff_identity_ok", report.zero_iff_identity_ok);
    if (!report.structural_notes.empty()) {
        w.key("structural_notes");
        w.begin_array();
        for (const auto& note : report.structural_notes) w.value(note);
        w.end_array();
    }
    w.field("verdict", report.pass ? "pass" : "fail");
    w.end_object();
}

void write_schoenberg_report(JsonWriter& w, const SchoenbergReport& report) {
    w.begin_object();
    w.field("schema", "schoenberg-report/1");
    w.field("tolerance", report.tolerance);
    w.key("entries");
    w.begin_array();
    for (const auto& e : report.entries) {
        w.begin_object();
        w.field("t", e.t);
        w.field("min_eigenvalue", e.min_eigenvalue);
        w.field("pass", e.pass);
        w.end_object();
    }
    w.end_array();
    w.field("verdict", report.pass ? "pass" : "fail");
    w.end_object();
}

void write_certificate(JsonWriter& w, const LacunarityCertificate& cert) {
    w.begin_object();
    w.field("schema", "lacunarity-certificate/1");
    switch (cert.kind) {
        case LacunarityCertificate::Kind::psi: w.field("kind", "psi"); break;
        case LacunarityCertificate::Kind::integer: w.field("kind", "integer"); break;
        case LacunarityCertificate::Kind::rudin: w.field("kind", "rudin"); break;
        case LacunarityCertificate::Kind::prop51: w.field("kind", "criteria"); break;
    }
    w.field("pass", cert.pass);
    if (cert.kind == LacunarityCertificate::Kind::rudin) {
        w.field("n_hat_lower_bound", cert.n_hat);
        if (cert.n_hat_witness) w.field("witness_center", to_string(*cert.n_hat_witness));
    } else {
        w.field("delta", cert.delta);
        if (cert.delta_rational) w.field("delta_rational", cert.delta_rational->str());
    }
    if (cert.kind == LacunarityCertificate::Kind::prop51) {
        w.field("criterion", cert.criterion);
        w.key("tested_values");
        w.begin_array();
        for (const auto& v : cert.tested_values) w.value(v);
        w.end_array();
    }
    if (cert.witness_pair) {
        w.key("witness_pair");
        w.begin_array();
        w.value(static_cast<long long>(cert.witness_pair->first));
        w.value(static_cast<long long>(cert.witness_pair->second));
        w.end_array();
    }
    if (!cert.witness_note.empty()) w.field("witness_note", cert.witness_note);
    w.end_object();
}

void write_norm_estimate(JsonWriter& w, const NormEstimate& est) {
    w.begin_object();
    w.field("value", est.value);
    w.field("radius", est.radius);
    w.field("iterations", est.iterations);
    w.field("residual", est.residual);
    w.field("converged", est.converged);
    w.end_object();
}

void write_spectral_report(JsonWriter& w, const SpectralTraceReport& report) {
    w.begin_object();
    w.field("value", report.value);
    w.field("radius", report.radius);
    w.field("steps", report.steps);
    w.field("exactness_horizon", report.exactness_horizon);
    w.field("min_ritz_value", report.min_ritz_value);
    w.end_object();
}

void write_bmo_estimate(JsonWriter& w, const BmoEstimate& est) {
    w.begin_object();
    w.field("trace_bound", est.trace_bound);
    w.field("operator_bound", est.operator_bound);
    w.field("trace_argmax_t", est.trace_argmax_t);
    w.field("operator_argmax_t", est.operator_argmax_t);
    w.field("radius", est.radius);
    w.field("t_grid_size", est.t_grid.size());
    w.end_object();
}

void write_paley_report(JsonWriter& w, const PaleyReport& report) {
    w.begin_object();
    w.field("schema", "paley-report/1");
    w.key("lacunarity");
    write_certificate(w, report.lacunarity);
    w.field("delta", report.delta);
    w.field("c_delta", report.c_delta_value);
    w.field("coeff_column_norm", report.coeff_column_norm);
    w.field("coeff_row_norm", report.coeff_row_norm);
    w.field("coeff_column_trace", report.coeff_column_trace);
    w.key("bmo");
    write_bmo_estimate(w, report.bmo);
    w.key("h1");
    write_spectral_report(w, report.h1);
    w.field("upper_bmo_ok", report.upper_bmo_ok);
    w.field("upper_h1_ok", report.upper_h1_ok);
    w.field("lower_floor_ok", report.lower_floor_ok);
    w.field("verdict", report.pass ? "pass" : "fail");
    if (!report.note.empty()) w.field("note", report.note);
    w.end_object();
}

void write_lambda4_report(JsonWriter& w, const Lambda4Report& report) {
    w.begin_object();
    w.field("schema", "lambda4-report/1");
    w.key("lacunarity");
    write_certificate(w, report.lacunarity);
    w.field("delta", report.delta);
    w.field("c_delta", report.c_delta_value);
    w.field("l4_norm", report.l4_norm);
    w.field("l2_norm", report.l2_norm);
    w.field("column_s4", report.column_s4);
    w.field("row_s4", report.row_s4);
    w.field("upper_bound", report.upper_bound);
    w.field("upper_ok", report.upper_ok);
    w.field("l2_ok", report.l2_ok);
    w.field("verdict", report.pass ? "pass" : "fail");
    if (!report.note.empty()) w.field("note", report.note);
    w.end_object();
}

namespace {

void write_coefficient_array(JsonWriter& w, const std::vector<Coefficient>& parts) {
    w.begin_array();
    for (const auto& c : parts) {
        w.begin_array();
        for (Eigen::Index i = 0; i < c.rows(); ++i)
            for (Eigen::Index j = 0; j < c.cols(); ++j) {
                w.begin_array();
                w.value(c(i, j).real());
                w.value(c(i, j).imag());
                w.end_array();
            }
        w.end_array();
    }
    w.end_array();
}

}  // namespace

void write_split_report(JsonWriter& w, const SplitReport& report) {
    w.begin_object();
    w.field("schema", "split-report/1");
    w.key("a_parts");
    write_coefficient_array(w, report.a_parts);
    w.key("b_parts");
    write_coefficient_array(w, report.b_parts);
    w.field("window_count", report.window_count);
    w.field("a_row_norm", report.a_row_norm);
    w.field("b_column_norm", report.b_column_norm);
    w.field("l2_product", report.l2_product);
    w.field("reconstruction_residual", report.reconstruction_residual);
    w.field("row_bound_ok", report.row_bound_ok);
    w.field("column_bound_ok", report.column_bound_ok);
    w.field("verdict", report.pass ? "pass" : "fail");
    w.end_object();
}

void write_reh1_report(JsonWriter& w, const ReH1Report& report) {
    w.begin_object();
    w.field("value", report.value);
    w.key("positive_part");
    write_spectral_report(w, report.positive_part);
    w.key("negative_part");
    write_spectral_report(w, report.negative_part);
    w.end_object();
}

// --- parsing ----------------------------------------------------------------

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (buffer.str().find_first_not_of(" \t\r\n") == std::string::npos)
        throw InputError("empty input file '" + path + "'");
    return parse_json(buffer.str());
}

Word word_from_json(int rank, const json& j) {
    if (j.is_string()) return parse_word(rank, j.get<std::string>());
    if (j.is_array()) {
        std::vector<Syllable> syls;
        for (const auto& pair : j) {
            if (!pair.is_array() || pair.size() != 2)
                throw InputError("word syllable must be a [generator, exponent] pair");
            Syllable s;
            s.gen = pair[0].get<int>();
            if (pair[1].is_string())
                s.exp = Integer(pair[1].get<std::string>());
            else
                s.exp = Integer(pair[1].get<long long>());
            syls.push_back(std::move(s));
        }
        return reduce(rank, syls);
    }
    throw InputError("word must be a string or a [[gen, exp], ...] array");
}

Coefficient coefficient_from_json(const json& j, int dim) {
    Coefficient c = Coefficient::Zero(dim, dim);
    if (j.is_number()) {
        if (dim != 1) throw InputError("scalar coefficient for a matrix-valued element");
        c(0, 0) = j.get<double>();
        return c;
    }
    if (!j.is_array() || static_cast<int>(j.size()) != dim * dim)
        throw InputError("coefficient must list dim*dim [re, im] pairs in row-major order");
    int idx = 0;
    for (const auto& entry : j) {
        double re = 0.0, im = 0.0;
        if (entry.is_number()) {
            re = entry.get<double>();
        } else if (entry.is_array() && entry.size() == 2) {
            re = entry[0].get<double>();
            im = entry[1].get<double>();
        } else {
            throw InputError("coefficient entries must be numbers or [re, im] pairs");
        }
        c(idx / dim, idx % dim) = std::complex<double>(re, im);
        ++idx;
    }
    return c;
}

FourierElement fourier_from_json(const json& j) {
    if (!j.is_object()) throw InputError("Fourier element must be a JSON object");
    if (!j.contains("rank")) throw InputError("Fourier element needs a 'rank' field");
    int rank = j.at("rank").get<int>();
    int dim = j.value("dim", 1);
    FourierElement x(rank, dim);
    if (j.contains("terms")) {
        for (const auto& term : j.at("terms")) {
            if (!term.contains("word")) throw InputError("Fourier term needs a 'word' field");
            Word g = word_from_json(rank, term.at("word"));
            x.add_term(g, coefficient_from_json(term.value("coeff", json(1.0)), dim));
        }
    }
    return x;
}

}  // namespace

Word word_from_json_text(int rank, const std::string& text) {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '[')
        return word_from_json(rank, parse_json(text));
    return parse_word(rank, text);
}

std::vector<Word> parse_word_list_file(int rank, const std::string& path) {
    json doc = load_json_file(path);
    const json* list = &doc;
    if (doc.is_object()) {
        if (!doc.contains("words")) throw InputError("word list object needs a 'words' field");
        list = &doc.at("words");
    }
    if (!list->is_array()) throw InputError("word list must be a JSON array");
    std::vector<Word> out;
    for (const auto& item : *list) out.push_back(word_from_json(rank, item));
    return out;
}

FourierElement parse_fourier_file(const std::string& path) {
    return fourier_from_json(load_json_file(path));
}

FourierElement parse_fourier_json(const std::string& text) {
    return fourier_from_json(parse_json(text));
}

namespace {

void flatten(const json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    if (j.is_array()) {
        bool scalars = true;
        for (const auto& item : j)
            if (item.is_object() || item.is_array()) scalars = false;
        if (scalars) {
            out += prefix + ",";
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ';';
                first = false;
                out += item.dump();
            }
            out += '\n';
        } else {
            int idx = 0;
            for (const auto& item : j) flatten(item, prefix + "." + std::to_string(idx++), out);
        }
        return;
    }
    out += prefix + "," + j.dump() + "\n";
}

}  // namespace

std::string json_to_csv(const std::string& json_text) {
    json doc = parse_json(json_text);
    std::string out = "key,value\n";
    flatten(doc, "", out);
    return out;
}

}  // namespace lacunae
