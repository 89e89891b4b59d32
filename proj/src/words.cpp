#include "lacunae/words.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lacunae/errors.hpp"

namespace lacunae {

namespace {

Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Letter id used by the canonical order: a, a^-1, b, b^-1, ...
int letter_id(int gen, bool negative) { return 2 * (gen - 1) + (negative ? 1 : 0); }

}  // namespace

void Word::check_rank(int rank) {
    if (rank < 1) throw InputError("word rank must be >= 1");
}

Word::Word(int rank, std::vector<Syllable> syllables) : rank_(rank) {
    check_rank(rank);
    for (const auto& s : syllables) {
        if (s.gen < 1 || s.gen > rank)
            throw InputError("generator index out of range 1.." + std::to_string(rank));
        if (s.exp == 0) throw InputError("normal form syllable with zero exponent");
    }
    for (std::size_t i = 1; i < syllables.size(); ++i)
        if (syllables[i].gen == syllables[i - 1].gen)
            throw InputError("normal form with adjacent equal generators");
    syls_ = std::move(syllables);
}

Word Word::generator(int rank, int gen, Integer exp) {
    if (exp == 0) return Word(rank);
    return Word(rank, {Syllable{gen, std::move(exp)}});
}

Integer Word::length() const {
    Integer total = 0;
    for (const auto& s : syls_) total += abs_int(s.exp);
    return total;
}

Word reduce(int rank, const std::vector<Syllable>& raw) {
    if (rank < 1) throw InputError("word rank must be >= 1");
    // Stack pass: merging into the top and popping zeroed syllables handles
    // cascading cancellation, since the syllable below the top always has a
    // different generator.
    std::vector<Syllable> out;
    for (const auto& s : raw) {
        if (s.gen < 1 || s.gen > rank)
            throw InputError("generator index out of range 1.." + std::to_string(rank));
        if (s.exp == 0) continue;
        if (!out.empty() && out.back().gen == s.gen) {
            out.back().exp += s.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    return Word(rank, std::move(out));
}

Word multiply(const Word& g, const Word& h) {
    if (g.rank() != h.rank()) throw InputError("rank mismatch in word product");
    std::vector<Syllable> cat = g.syllables();
    cat.insert(cat.end(), h.syllables().begin(), h.syllables().end());
    return reduce(g.rank(), cat);
}

Word inverse(const Word& g) {
    std::vector<Syllable> rev;
    rev.reserve(g.syllables().size());
    for (auto it = g.syllables().rbegin(); it != g.syllables().rend(); ++it)
        rev.push_back(Syllable{it->gen, -it->exp});
    return Word(g.rank(), std::move(rev));
}

Word power(const Word& g, const Integer& n) {
    if (n == 0) return Word::identity(g.rank());
    Word base = n < 0 ? inverse(g) : g;
    Integer reps = abs_int(n);
    if (base.syllables().size() == 1) {
        Syllable s = base.syllables().front();
        s.exp *= reps;
        return Word(base.rank(), {s});
    }
    // square-and-multiply over the binary expansion of the exponent
    Word acc = Word::identity(g.rank());
    Word sq = base;
    while (reps > 0) {
        if ((reps & 1) != 0) acc = multiply(acc, sq);
        reps >>= 1;
        if (reps > 0) sq = multiply(sq, sq);
    }
    return acc;
}

Integer net_exponent(const Word& g, int gen) {
    Integer total = 0;
    for (const auto& s : g.syllables())
        if (s.gen == gen) total += s.exp;
    return total;
}

bool canonical_less(const Word& lhs, const Word& rhs) {
    Integer ll = lhs.length(), rl = rhs.length();
    if (ll != rl) return ll < rl;
    // Same length: run-length lexicographic comparison of the letter
    // expansions without materializing them.
    std::size_t i = 0, j = 0;
    Integer ri = 0, rj = 0;  // letters already consumed inside syllable i / j
    const auto& ls = lhs.syllables();
    const auto& rs = rhs.syllables();
    while (i < ls.size() && j < rs.size()) {
        int la = letter_id(ls[i].gen, ls[i].exp < 0);
        int lb = letter_id(rs[j].gen, rs[j].exp < 0);
        if (la != lb) return la < lb;
        Integer remain_a = abs_int(ls[i].exp) - ri;
        Integer remain_b = abs_int(rs[j].exp) - rj;
        Integer step = std::min(remain_a, remain_b);
        ri += step;
        rj += step;
        if (ri == abs_int(ls[i].exp)) { ++i; ri = 0; }
        if (rj == abs_int(rs[j].exp)) { ++j; rj = 0; }
    }
    return false;  // equal expansions (same length consumed everything)
}

Integer ball_size(int rank, int radius) {
    Integer total = 1;
    Integer sphere = 2 * rank;  // 2k(2k-1)^{r-1} starting at r = 1
    for (int r = 1; r <= radius; ++r) {
        total += sphere;
        sphere *= 2 * rank - 1;
    }
    return total;
}

namespace {

// Depth-first extension by letters in alphabet order yields, per length,
// exactly the canonical lexicographic order.
void extend_ball(int rank, int radius, std::vector<Syllable>& stack, int depth,
                 std::vector<Word>& out) {
    if (depth == radius) return;
    for (int letter = 0; letter < 2 * rank; ++letter) {
        int gen = letter / 2 + 1;
        int sign = (letter % 2 == 0) ? 1 : -1;
        if (!stack.empty() && stack.back().gen == gen) {
            bool same_sign = (stack.back().exp > 0) == (sign > 0);
            if (!same_sign) continue;  // would cancel: not reduced
            stack.back().exp += sign;
            out.push_back(Word(rank, stack));
            extend_ball(rank, radius, stack, depth + 1, out);
            stack.back().exp -= sign;
        } else {
            stack.push_back(Syllable{gen, sign});
            out.push_back(Word(rank, stack));
            extend_ball(rank, radius, stack, depth + 1, out);
            stack.pop_back();
        }
    }
}

}  // namespace

std::vector<Word> ball(int rank, int radius, std::size_t max_size) {
    if (rank < 1) throw InputError("ball: rank must be >= 1");
    if (radius < 0) throw InputError("ball: radius must be >= 0");
    Integer count = ball_size(rank, radius);
    if (count > Integer(max_size))
        throw BudgetError("ball(" + std::to_string(rank) + "," + std::to_string(radius) +
                          ") has " + count.str() + " words, exceeding the cap of " +
                          std::to_string(max_size));
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(count));
    out.push_back(Word::identity(rank));
    std::vector<Syllable> stack;
    // DFS emits words grouped by prefix, not by length; collect then
    // stable-sort by length (lex order within a length is already right,
    // but interleaved across lengths).
    extend_ball(rank, radius, stack, 0, out);
    std::stable_sort(out.begin(), out.end(), WordCanonicalLess{});
    return out;
}

namespace {

std::string generator_name(int gen, int rank) {
    if (rank <= 26) return std::string(1, static_cast<char>('a' + gen - 1));
    return "x" + std::to_string(gen);
}

int parse_generator_name(const std::string& name, int rank) {
    if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z') {
        int gen = name[0] - 'a' + 1;
        if (gen > rank) throw InputError("generator '" + name + "' outside rank " + std::to_string(rank));
        return gen;
    }
    if (name.size() >= 2 && name[0] == 'x') {
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw InputError("bad generator name '" + name + "'");
        int gen = std::stoi(name.substr(1));
        if (gen < 1 || gen > rank)
            throw InputError("generator '" + name + "' outside rank " + std::to_string(rank));
        return gen;
    }
    throw InputError("bad generator name '" + name + "'");
}

}  // namespace

std::string to_string(const Word& g) {
    if (g.is_identity()) return "e";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : g.syllables()) {
        if (!first) os << ' ';
        first = false;
        os << generator_name(s.gen, g.rank());
        if (s.exp != 1) os << '^' << s.exp.str();
    }
    return os.str();
}

Word parse_word(int rank, const std::string& text) {
    std::istringstream is(text);
    std::string token;
    std::vector<Syllable> syls;
    bool any = false;
    while (is >> token) {
        any = true;
        if (token == "e" || token == "1") continue;
        std::string name = token;
        Integer exp = 1;
        auto caret = token.find('^');
        if (caret != std::string::npos) {
            name = token.substr(0, caret);
            std::string num = token.substr(caret + 1);
            if (num.empty()) throw InputError("missing exponent in '" + token + "'");
            // Accept an ASCII hyphen or a Unicode minus sign.
            std::size_t pos = 0;
            bool neg = false;
            if (num[0] == '-') { neg = true; pos = 1; }
            else if (num.size() >= 3 && static_cast<unsigned char>(num[0]) == 0xE2 &&
                     static_cast<unsigned char>(num[1]) == 0x88 &&
                     static_cast<unsigned char>(num[2]) == 0x92) { neg = true; pos = 3; }
            if (pos >= num.size()) throw InputError("missing exponent in '" + token + "'");
            for (std::size_t i = pos; i < num.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(num[i])))
                    throw InputError("bad exponent in '" + token + "'");
            exp = Integer(num.substr(pos));
            if (neg) exp = -exp;
        }
        syls.push_back(Syllable{parse_generator_name(name, rank), exp});
    }
    if (!any && !text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos)
        throw InputError("unparseable word '" + text + "'");
    return reduce(rank, syls);
}

LengthFunction LengthFunction::word_length() {
    LengthFunction f;
    f.kind_ = Kind::word_length;
    return f;
}

LengthFunction LengthFunction::q_length(double q) {
    if (!(q > 0.0) || q > 2.0)
        throw InputError("q-length requires 0 < q <= 2, got " + std::to_string(q));
    LengthFunction f;
    f.kind_ = Kind::q_length;
    f.q_ = q;
    return f;
}

LengthFunction LengthFunction::psi_z() {
    LengthFunction f;
    f.kind_ = Kind::psi_z;
    return f;
}

LengthFunction LengthFunction::pullback(std::vector<Integer> image_exponents) {
    if (image_exponents.empty()) throw InputError("pullback needs at least one image exponent");
    LengthFunction f;
    f.kind_ = Kind::pullback;
    f.image_exponents_ = std::move(image_exponents);
    return f;
}

LengthFunction LengthFunction::table(std::vector<std::pair<Word, double>> values,
                                     double default_value) {
    LengthFunction f;
    f.kind_ = Kind::table;
    f.table_ = std::move(values);
    f.table_default_ = default_value;
    return f;
}

std::optional<Integer> LengthFunction::exact(const Word& g) const {
    switch (kind_) {
        case Kind::word_length:
            return g.length();
        case Kind::q_length: {
            if (q_ == 1.0) return g.length();
            if (q_ == 2.0) {
                Integer total = 0;
                for (const auto& s : g.syllables()) total += s.exp * s.exp;
                return total;
            }
            return std::nullopt;
        }
        case Kind::psi_z: {
            Integer total = 0;
            for (int gen = 1; gen <= g.rank(); ++gen) {
                Integer net = net_exponent(g, gen);
                total += net * net;
            }
            return total;
        }
        case Kind::pullback: {
            if (static_cast<int>(image_exponents_.size()) < g.rank())
                throw InputError("pullback image exponents cover fewer generators than the word rank");
            Integer total = 0;
            for (const auto& s : g.syllables())
                total += abs_int(s.exp * image_exponents_[static_cast<std::size_t>(s.gen - 1)]);
            return total;
        }
        case Kind::table:
            return std::nullopt;
    }
    return std::nullopt;
}

double LengthFunction::operator()(const Word& g) const {
    if (kind_ == Kind::q_length && q_ != 1.0 && q_ != 2.0) {
        double total = 0.0;
        for (const auto& s : g.syllables())
            total += std::pow(abs_int(s.exp).convert_to<double>(), q_);
        return total;
    }
    if (kind_ == Kind::table) {
        for (const auto& [w, v] : table_)
            if (w == g) return v;
        return g.is_identity() ? 0.0 : table_default_;
    }
    return exact(g)->convert_to<double>();
}

std::string LengthFunction::describe() const {
    switch (kind_) {
        case Kind::word_length: return "word";
        case Kind::q_length: {
            std::ostringstream os;
            os << "q:" << q_;
            return os.str();
        }
        case Kind::psi_z: return "psiz";
        case Kind::pullback: {
            std::string s = "pullback:";
            for (std::size_t i = 0; i < image_exponents_.size(); ++i) {
                if (i) s += ',';
                s += image_exponents_[i].str();
            }
            return s;
        }
        case Kind::table: return "table";
    }
    return "?";
}

LengthFunction parse_length(const std::string& spec) {
    if (spec == "word" || spec == "length") return LengthFunction::word_length();
    if (spec == "psiz" || spec == "psi_z") return LengthFunction::psi_z();
    if (spec.rfind("q:", 0) == 0) {
        try {
            return LengthFunction::q_length(std::stod(spec.substr(2)));
        } catch (const std::invalid_argument&) {
            throw InputError("bad q value in length spec '" + spec + "'");
        }
    }
    if (spec.rfind("pullback:", 0) == 0) {
        std::vector<Integer> exps;
        std::string rest = spec.substr(9);
        std::istringstream is(rest);
        std::string item;
        while (std::getline(is, item, ','))
            if (!item.empty()) exps.push_back(Integer(item));
        return LengthFunction::pullback(std::move(exps));
    }
    throw InputError("unknown length kind '" + spec + "' (expected word, q:<v>, psiz, pullback:m1,m2,...)");
}

}  // namespace lacunae
