#include "gonality/spec_parse.hpp"

#include <cctype>

namespace gonality {

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

Int parse_integer(const std::string& s, std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", start);
    return Int(s.substr(start, pos - start));
}

}  // namespace

AbelianGroupSpec parse_group(const std::string& spec) {
    std::vector<Int> factors;
    std::size_t pos = 0;
    for (;;) {
        skip_ws(spec, pos);
        const std::size_t term_start = pos;
        if (pos < spec.size() && spec[pos] == 'Z') {
            ++pos;
            skip_ws(spec, pos);
            if (pos >= spec.size() || spec[pos] != '/')
                throw ParseError("expected '/' after 'Z'", pos);
            ++pos;
            skip_ws(spec, pos);
        }
        const Int k = parse_integer(spec, pos);
        if (k < 2) throw ParseError("factors must be >= 2", term_start);
        factors.push_back(k);
        skip_ws(spec, pos);
        if (pos == spec.size()) break;
        if (spec[pos] != '+') throw ParseError("expected '+' between terms", pos);
        ++pos;
    }
    return elementary_divisors(factors);
}

FieldSpec parse_field(const std::string& spec) {
    std::size_t pos = 0;
    skip_ws(spec, pos);
    if (pos >= spec.size() || spec[pos] != 'Q') throw ParseError("expected 'Q'", pos);
    ++pos;
    skip_ws(spec, pos);
    if (pos == spec.size()) return FieldSpec{1};
    if (spec[pos] != '(') throw ParseError("expected '(' or end of input", pos);
    ++pos;
    skip_ws(spec, pos);
    const std::string token = "zeta_";
    if (spec.compare(pos, token.size(), token) != 0)
        throw ParseError("expected 'zeta_'", pos);
    pos += token.size();
    const std::size_t num_start = pos;
    const Int n = parse_integer(spec, pos);
    if (n < 1) throw ParseError("zeta index must be >= 1", num_start);
    if (!mpz_fits_ulong_p(n.get_mpz_t())) throw ParseError("zeta index too large", num_start);
    skip_ws(spec, pos);
    if (pos >= spec.size() || spec[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    skip_ws(spec, pos);
    if (pos != spec.size()) throw ParseError("trailing input after field spec", pos);
    return FieldSpec{mpz_get_ui(n.get_mpz_t())};
}

std::string field_label(const FieldSpec& k) {
    if (k.n == 1) return "Q";
    return "Q(zeta_" + std::to_string(k.n) + ")";
}

std::string group_label(const AbelianGroupSpec& a) {
    if (a.invariant_factors.empty()) return "trivial";
    std::string out;
    for (std::size_t i = 0; i < a.invariant_factors.size(); ++i) {
        if (i) out += " + ";
        out += "Z/" + a.invariant_factors[i].get_str();
    }
    return out;
}

}  // namespace gonality
