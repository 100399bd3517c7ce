#include "surfcore/exact.hpp"

#include <stdexcept>

namespace surfcore {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    Integer num, den = 1;
    auto parse_int = [&](const std::string& s, Integer& out) {
        if (s.empty() || out.set_str(s, 10) != 0)
            throw std::invalid_argument("not a rational number: '" + text + "'");
    };
    if (slash == std::string::npos) {
        parse_int(text, num);
    } else {
        parse_int(text.substr(0, slash), num);
        parse_int(text.substr(slash + 1), den);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace surfcore
