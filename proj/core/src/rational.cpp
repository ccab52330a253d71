#include "qfano/rational.hpp"

#include <cctype>

namespace qfano {

std::string to_string(const Rational& x) {
    std::string out = num(x).str();
    if (den(x) != 1) {
        out += '/';
        out += den(x).str();
    }
    return out;
}

namespace {

Int parse_int(std::string_view text, std::string_view whole) {
    bool neg = false;
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') {
        neg = true;
        ++pos;
    }
    if (pos == text.size())
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    Int value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return neg ? Int(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    const Int p = parse_int(text.substr(0, slash), text);
    const Int q = parse_int(text.substr(slash + 1), text);
    if (q <= 0)
        throw std::invalid_argument("malformed rational (denominator must be positive): '" +
                                    std::string(text) + "'");
    return Rational(p, q);
}

Int rational_floor(const Rational& x) {
    Int q = num(x) / den(x);
    if (num(x) < 0 && q * den(x) != num(x)) --q;
    return q;
}

Int rational_ceil(const Rational& x) {
    Int q = num(x) / den(x);
    if (num(x) > 0 && q * den(x) != num(x)) ++q;
    return q;
}

}  // namespace qfano
