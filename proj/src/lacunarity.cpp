#include "lacunae/lacunarity.hpp"

#include <algorithm>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "lacunae/errors.hpp"
#include "lacunae/magnus.hpp"
#include "lacunae/order.hpp"

namespace lacunae {

Rational::Rational(Integer n, Integer d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Integer g = boost::multiprecision::gcd(num < 0 ? Integer(-num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

double Rational::value() const { return num.convert_to<double>() / den.convert_to<double>(); }

std::string Rational::str() const {
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

// Tracks the running minimum of exact ratios alongside a double mirror, so
// certificates stay rational whenever psi is integer-valued.
struct RatioMin {
    bool exact = true;
    bool any = false;
    Rational best_exact{Integer(0)};
    double best = 0.0;
    std::size_t arg_first = 0, arg_second = 0;

    void offer_exact(const Integer& num, const Integer& den, std::size_t i, std::size_t j) {
        Rational r(num, den);
        double v = r.value();
        if (!any || r < best_exact) {
            best_exact = r;
            arg_first = i;
            arg_second = j;
        }
        if (!any || v < best) best = v;
        any = true;
    }

    void offer(double v, std::size_t i, std::size_t j) {
        exact = false;
        if (!any || v < best) {
            best = v;
            arg_first = i;
            arg_second = j;
        }
        any = true;
    }
};

}  // namespace

LacunarityCertificate psi_lacunary_delta(const LengthFunction& psi,
                                         const std::vector<Word>& sequence) {
    LacunarityCertificate cert;
    cert.kind = LacunarityCertificate::Kind::psi;
    if (sequence.empty()) throw InputError("psi-lacunarity needs a nonempty sequence");

    std::vector<double> values;
    std::vector<std::optional<Integer>> exact_values;
    for (const auto& h : sequence) {
        auto e = psi.exact(h);
        double v = e ? e->convert_to<double>() : psi(h);
        if (v <= 0.0)
            throw InputError("psi-lacunarity rejects psi = 0 at '" + to_string(h) + "'");
        values.push_back(v);
        exact_values.push_back(e);
    }
    bool all_exact = std::all_of(exact_values.begin(), exact_values.end(),
                                 [](const auto& e) { return e.has_value(); });

    RatioMin growth;   // psi(h_{k+1}) / psi(h_k) - 1
    RatioMin spread;   // psi(h_k^-1 h_k') / max(psi(h_k), psi(h_k'))
    for (std::size_t k = 0; k + 1 < sequence.size(); ++k) {
        if (all_exact)
            growth.offer_exact(*exact_values[k + 1] - *exact_values[k], *exact_values[k], k, k + 1);
        else
            growth.offer(values[k + 1] / values[k] - 1.0, k, k + 1);
    }
    for (std::size_t k = 0; k < sequence.size(); ++k) {
        for (std::size_t j = k + 1; j < sequence.size(); ++j) {
            Word quotient = multiply(inverse(sequence[k]), sequence[j]);
            std::optional<Integer> cross_exact;
            if (all_exact) cross_exact = psi.exact(quotient);
            if (cross_exact) {
                Integer hi = std::max(*exact_values[k], *exact_values[j]);
                spread.offer_exact(*cross_exact, hi, k, j);
            } else {
                double cross = psi(quotient);
                spread.offer(cross / std::max(values[k], values[j]), k, j);
            }
        }
    }

    bool exact = all_exact && growth.exact && spread.exact;
    if (!growth.any && !spread.any) {
        // Single element: no constraint binds; report the conventional delta 1.
        cert.pass = true;
        cert.delta = 1.0;
        cert.delta_rational = Rational(Integer(1));
        return cert;
    }

    const RatioMin* worst = nullptr;
    if (!growth.any) {
        worst = &spread;
    } else if (!spread.any) {
        worst = &growth;
    } else if (exact) {
        worst = growth.best_exact < spread.best_exact ? &growth : &spread;
    } else {
        worst = growth.best < spread.best ? &growth : &spread;
    }
    if (exact) {
        cert.delta_rational = worst->best_exact;
        cert.delta = worst->best_exact.value();
    } else {
        cert.delta = worst->best;
    }
    cert.pass = exact ? (worst->best_exact.num > 0) : (cert.delta > 0.0);
    if (!cert.pass) {
        cert.witness_pair = std::make_pair(worst->arg_first, worst->arg_second);
        cert.witness_note = worst == &growth ? "growth condition fails at consecutive pair"
                                             : "separation condition fails at pair";
    }
    return cert;
}

LacunarityCertificate integer_lacunary(const std::vector<Integer>& values) {
    LacunarityCertificate cert;
    cert.kind = LacunarityCertificate::Kind::integer;
    cert.tested_values = values;
    if (values.empty()) throw InputError("integer lacunarity needs a nonempty sequence");
    for (const auto& v : values)
        if (v == 0) throw InputError("integer lacunarity rejects zero entries");
    if (values.size() == 1) {
        cert.pass = true;
        cert.delta = 2.0;
        cert.delta_rational = Rational(Integer(2));
        return cert;
    }
    bool any = false;
    Rational best{Integer(0)};
    std::size_t arg = 0;
    for (std::size_t n = 0; n + 1 < values.size(); ++n) {
        Rational r(values[n + 1], values[n]);
        if (!any || r < best) {
            best = r;
            arg = n;
        }
        any = true;
    }
    cert.delta_rational = best;
    cert.delta = best.value();
    cert.pass = best.num > best.den;  // delta > 1
    if (!cert.pass) {
        cert.witness_pair = std::make_pair(arg, arg + 1);
        cert.witness_note = "ratio at consecutive pair is not > 1";
    }
    return cert;
}

long long rudin_count(const std::vector<Word>& set, const Word& g, int max_degree) {
    if (!is_positive(g, max_degree))
        throw InputError("Rudin window center '" + to_string(g) + "' is not positive");
    const Word g2 = multiply(g, g);
    long long count = 0;
    for (const auto& h : set) {
        OrderVerdict lo = order_compare(g, h, max_degree);
        if (!lo.decided())
            throw UndecidedOrderError("window comparison undecided for '" + to_string(h) + "'",
                                      lo.depth);
        if (lo.relation == OrderRelation::greater) continue;  // h < g
        OrderVerdict hi = order_compare(h, g2, max_degree);
        if (!hi.decided())
            throw UndecidedOrderError("window comparison undecided for '" + to_string(h) + "'",
                                      hi.depth);
        if (hi.relation == OrderRelation::greater) continue;  // h > g^2
        ++count;
    }
    return count;
}

LacunarityCertificate rudin_lacunarity_estimate(const std::vector<Word>& set,
                                                const std::vector<Word>& extra_candidates,
                                                const RudinOptions& options) {
    LacunarityCertificate cert;
    cert.kind = LacunarityCertificate::Kind::rudin;
    cert.pass = true;  // a lower bound always exists; "pass" means computed
    if (set.empty()) {
        cert.n_hat = 0;
        return cert;
    }
    const int rank = set.front().rank();
    std::set<Word, WordCanonicalLess> candidates;
    auto offer = [&](const Word& w) {
        if (w.rank() != rank) throw InputError("candidate rank mismatch");
        if (!is_positive(w, options.max_degree)) return;
        candidates.insert(w);
    };
    for (const auto& h : set) offer(h);
    for (const auto& h : extra_candidates) offer(h);
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (i == j) continue;
            Word q = multiply(inverse(set[i]), set[j]);
            if (q.is_identity()) continue;
            offer(is_positive(q, options.max_degree) ? q : inverse(q));
        }
    for (const auto& w : ball(rank, options.candidate_length)) offer(w);

    cert.n_hat = 0;
    for (const auto& g : candidates) {
        long long count = rudin_count(set, g, options.max_degree);
        if (count > cert.n_hat) {
            cert.n_hat = count;
            cert.n_hat_witness = g;
        }
    }
    return cert;
}

LacunarityCertificate prop51_check(const std::vector<Word>& sequence) {
    LacunarityCertificate cert;
    cert.kind = LacunarityCertificate::Kind::prop51;
    if (sequence.empty()) throw InputError("criterion check needs a nonempty sequence");
    std::vector<Integer> j_a, j_b, j_ab;
    for (const auto& g : sequence) {
        if (g.rank() != 2) throw InputError("criterion check requires rank 2");
        JProfile p = j_profile(g);
        j_a.push_back(p.j_a());
        j_b.push_back(p.j_b());
        j_ab.push_back(p.j_ab());
    }
    auto try_criterion = [&cert](const std::vector<Integer>& values, int index) {
        for (const auto& v : values)
            if (v == 0) return false;
        LacunarityCertificate inner = integer_lacunary(values);
        if (!inner.pass) return false;
        cert.pass = true;
        cert.criterion = index;
        cert.tested_values = values;
        cert.delta = inner.delta;
        cert.delta_rational = inner.delta_rational;
        return true;
    };
    auto all_zero = [](const std::vector<Integer>& values) {
        return std::all_of(values.begin(), values.end(), [](const Integer& v) { return v == 0; });
    };

    if (try_criterion(j_a, 1)) return cert;
    if (all_zero(j_a) && try_criterion(j_b, 2)) return cert;
    if (all_zero(j_a) && all_zero(j_b) && try_criterion(j_ab, 3)) return cert;
    cert.pass = false;
    cert.criterion = 0;
    cert.witness_note = "no criterion matched";
    return cert;
}

}  // namespace lacunae
