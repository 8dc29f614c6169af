#include "feec/rational.hpp"

#include <cctype>

namespace feec {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw Malformed("empty rational literal");
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Malformed("bad rational literal: " + text);
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) {
        if (text[pos] != '/') throw Malformed("bad rational literal: " + text);
        std::size_t den = pos + 1;
        if (den == text.size()) throw Malformed("bad rational literal: " + text);
        for (std::size_t i = den; i < text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw Malformed("bad rational literal: " + text);
    }
    Rational q;
    const std::string plain = (text[0] == '+') ? text.substr(1) : text;
    if (q.set_str(plain, 10) != 0) throw Malformed("bad rational literal: " + text);
    if (q.get_den() == 0) throw Malformed("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace feec
