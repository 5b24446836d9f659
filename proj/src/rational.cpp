#include "wsc/rational.hpp"

namespace wsc {

Rational rat_parse(const std::string& text) {
    if (text.empty())
        raise(ErrorCode::ParseError, "empty rational literal");
    // Validate shape before handing to GMP: optional sign, digits,
    // optionally "/digits" with a nonzero denominator.
    auto is_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = text;
    if (body[0] == '+' || body[0] == '-') body = body.substr(1);
    auto slash = body.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = is_digits(body);
    } else {
        std::string den = body.substr(slash + 1);
        ok = is_digits(body.substr(0, slash)) && is_digits(den) &&
             den.find_first_not_of('0') != std::string::npos;
    }
    if (!ok)
        raise(ErrorCode::ParseError, "bad rational literal: '" + text + "'");
    Rational r;
    r.set_str(text, 10);
    r.canonicalize();
    return r;
}

} // namespace wsc
