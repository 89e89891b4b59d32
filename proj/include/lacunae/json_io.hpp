#pragma once

#include <string>
#include <vector>

#include "lacunae/cnd.hpp"
#include "lacunae/config.hpp"
#include "lacunae/fourier.hpp"
#include "lacunae/lacunarity.hpp"
#include "lacunae/ncpoly.hpp"
#include "lacunae/norms.hpp"
#include "lacunae/order.hpp"
#include "lacunae/paley.hpp"

namespace lacunae {

/// Streaming JSON writer with fixed key order and %.17g floats, so identical
/// inputs serialize byte-identically across runs and platforms.
class JsonWriter {
public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(const std::string& name);
    void value(const std::string& text);
    void value(const char* text) { value(std::string(text)); }
    void value(double number);
    void value(int number) { value(static_cast<long long>(number)); }
    void value(long long number);
    void value(unsigned long long number);
    void value(std::size_t number) { value(static_cast<unsigned long long>(number)); }
    void value(bool flag);
    void value_null();
    void value(const Integer& number);  // serialized as a string

    void field(const std::string& name, const std::string& text) { key(name); value(text); }
    void field(const std::string& name, const char* text) { key(name); value(text); }
    void field(const std::string& name, double number) { key(name); value(number); }
    void field(const std::string& name, int number) { key(name); value(number); }
    void field(const std::string& name, long long number) { key(name); value(number); }
    void field(const std::string& name, unsigned long long number) { key(name); value(number); }
    void field(const std::string& name, std::size_t number) { key(name); value(number); }
    void field(const std::string& name, bool flag) { key(name); value(flag); }

    std::string str() const { return out_; }

private:
    void separator();
    std::string out_;
    std::vector<bool> first_in_scope_;
    bool pending_key_ = false;
};

// --- emission -------------------------------------------------------------

void write_config(JsonWriter& w, const JobConfig& config);
void write_word(JsonWriter& w, const Word& g);
void write_polynomial(JsonWriter& w, const NCPolynomial& p);
void write_fourier(JsonWriter& w, const FourierElement& x);
void write_order_verdict(JsonWriter& w, const OrderVerdict& v, int rank);
void write_gram_report(JsonWriter& w, const GramReport& report);
void write_schoenberg_report(JsonWriter& w, const SchoenbergReport& report);
void write_certificate(JsonWriter& w, const LacunarityCertificate& cert);
void write_norm_estimate(JsonWriter& w, const NormEstimate& est);
void write_spectral_report(JsonWriter& w, const SpectralTraceReport& report);
void write_bmo_estimate(JsonWriter& w, const BmoEstimate& est);
void write_paley_report(JsonWriter& w, const PaleyReport& report);
void write_lambda4_report(JsonWriter& w, const Lambda4Report& report);
void write_split_report(JsonWriter& w, const SplitReport& report);
void write_reh1_report(JsonWriter& w, const ReH1Report& report);

// --- parsing (nlohmann behind the scenes) ----------------------------------

/// Accepts the string grammar or the [[gen, exp], ...] JSON array form.
Word word_from_json_text(int rank, const std::string& text);
std::vector<Word> parse_word_list_file(int rank, const std::string& path);
/// Parses a {"rank":…, "dim":…, "terms":[{"word":…, "coeff":…}]} document.
FourierElement parse_fourier_file(const std::string& path);
FourierElement parse_fourier_json(const std::string& text);

/// Flattens a JSON report into "path,value" CSV lines (arrays of scalars
/// joined by ';'; nested objects use dotted paths).
std::string json_to_csv(const std::string& json_text);

}  // namespace lacunae
