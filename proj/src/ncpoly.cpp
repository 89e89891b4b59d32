#include "lacunae/ncpoly.hpp"

#include <sstream>

#include "lacunae/errors.hpp"

namespace lacunae {

Monomial monomial_from_letters(std::initializer_list<int> letters) {
    Monomial m;
    for (int g : letters) m.push_back(static_cast<char>(g));
    return m;
}

std::string monomial_name(const Monomial& m, int rank) {
    if (m.empty()) return "1";
    std::string out;
    for (char c : m) {
        int gen = static_cast<int>(c);
        if (rank <= 26) {
            out.push_back(static_cast<char>('A' + gen - 1));
        } else {
            if (!out.empty()) out.push_back('.');
            out += "A" + std::to_string(gen);
        }
    }
    return out;
}

Monomial parse_monomial(const std::string& name, int rank) {
    if (name == "1" || name.empty()) return {};
    Monomial m;
    if (rank <= 26) {
        for (char c : name) {
            if (c < 'A' || c > 'Z') throw InputError("bad monomial letter in '" + name + "'");
            int gen = c - 'A' + 1;
            if (gen > rank) throw InputError("monomial letter outside rank in '" + name + "'");
            m.push_back(static_cast<char>(gen));
        }
        return m;
    }
    std::istringstream is(name);
    std::string item;
    while (std::getline(is, item, '.')) {
        if (item.size() < 2 || item[0] != 'A') throw InputError("bad monomial '" + name + "'");
        int gen = std::stoi(item.substr(1));
        if (gen < 1 || gen > rank) throw InputError("monomial letter outside rank in '" + name + "'");
        m.push_back(static_cast<char>(gen));
    }
    return m;
}

NCPolynomial::NCPolynomial(int rank, int truncation_degree)
    : rank_(rank), degree_(truncation_degree) {
    if (rank < 1) throw InputError("polynomial rank must be >= 1");
    if (truncation_degree < 0) throw InputError("truncation degree must be >= 0");
}

NCPolynomial NCPolynomial::unit(int rank, int truncation_degree) {
    NCPolynomial p(rank, truncation_degree);
    p.terms_[Monomial{}] = 1;
    return p;
}

NCPolynomial NCPolynomial::letter(int rank, int truncation_degree, int gen) {
    if (gen < 1 || gen > rank) throw InputError("letter index out of range");
    NCPolynomial p(rank, truncation_degree);
    if (truncation_degree >= 1) p.terms_[Monomial(1, static_cast<char>(gen))] = 1;
    return p;
}

Integer NCPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void NCPolynomial::set_coefficient(const Monomial& m, Integer value) {
    if (static_cast<int>(m.size()) > degree_)
        throw InputError("monomial exceeds truncation degree");
    for (char c : m)
        if (c < 1 || c > rank_) throw InputError("monomial letter outside rank");
    if (value == 0)
        terms_.erase(m);
    else
        terms_[m] = std::move(value);
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& other) {
    if (rank_ != other.rank_ || degree_ != other.degree_)
        throw InputError("polynomial rank/degree mismatch");
    for (const auto& [m, c] : other.terms_) {
        Integer& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& other) {
    if (rank_ != other.rank_ || degree_ != other.degree_)
        throw InputError("polynomial rank/degree mismatch");
    for (const auto& [m, c] : other.terms_) {
        Integer& slot = terms_[m];
        slot -= c;
        if (slot == 0) terms_.erase(m);
    }
    return *this;
}

NCPolynomial nc_multiply(const NCPolynomial& p, const NCPolynomial& q) {
    if (p.rank() != q.rank() || p.truncation_degree() != q.truncation_degree())
        throw InputError("polynomial rank/degree mismatch");
    NCPolynomial out(p.rank(), p.truncation_degree());
    const std::size_t cap = static_cast<std::size_t>(p.truncation_degree());
    std::map<Monomial, Integer, MonomialDegLex> acc;
    for (const auto& [ma, ca] : p.terms()) {
        if (ma.size() > cap) continue;
        for (const auto& [mb, cb] : q.terms()) {
            if (ma.size() + mb.size() > cap) continue;
            Integer& slot = acc[ma + mb];
            slot += ca * cb;
        }
    }
    for (auto& [m, c] : acc)
        if (c != 0) out.set_coefficient(m, std::move(c));
    return out;
}

NCPolynomial nc_scale(const NCPolynomial& p, const Integer& c) {
    NCPolynomial out(p.rank(), p.truncation_degree());
    if (c == 0) return out;
    for (const auto& [m, v] : p.terms()) out.set_coefficient(m, v * c);
    return out;
}

std::string NCPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.empty()) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << monomial_name(m, rank_);
        }
    }
    return os.str();
}

}  // namespace lacunae
