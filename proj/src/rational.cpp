#include "superyang/rational.hpp"

namespace superyang {

namespace {

bool valid_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational rat_parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den))
        throw DomainError("malformed rational: '" + text + "'");
    Int n(num), d(den);
    if (sgn(d) == 0) throw DomainError("zero denominator in rational: '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

long rat_to_long(const Rational& r) {
    if (!rat_is_integer(r) || !r.get_num().fits_slong_p())
        throw DomainError("rational " + rat_str(r) + " is not a machine integer");
    return r.get_num().get_si();
}

}  // namespace superyang
