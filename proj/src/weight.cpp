#include "wsc/weight.hpp"

#include <sstream>

namespace wsc {

namespace {

void check_same_size(const CoordVector& a, const CoordVector& b) {
    if (a.size() != b.size())
        raise(ErrorCode::SizeMismatch, "coordinate vectors of different lengths");
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(rat_parse(item));
    if (!text.empty() && text.back() == ',')
        raise(ErrorCode::ParseError, "trailing comma in '" + text + "'");
    return out;
}

} // namespace

CoordVector& CoordVector::operator+=(const CoordVector& o) {
    check_same_size(*this, o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

CoordVector& CoordVector::operator-=(const CoordVector& o) {
    check_same_size(*this, o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

CoordVector& CoordVector::operator*=(const Rational& s) {
    for (auto& c : coords) c *= s;
    return *this;
}

bool operator<(const CoordVector& a, const CoordVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a.coords[i], b.coords[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Rational dot(const CoordVector& a, const CoordVector& b) {
    check_same_size(a, b);
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a.coords[i] * b.coords[i];
    return sum;
}

Weight parse_weight(const std::string& text, std::size_t m, std::size_t n) {
    std::string left = text, right;
    auto bar = text.find('|');
    if (bar != std::string::npos) {
        left = text.substr(0, bar);
        right = text.substr(bar + 1);
    }
    std::vector<Rational> a = parse_list(left);
    std::vector<Rational> b = parse_list(right);
    if (a.size() != m || b.size() != n)
        raise(ErrorCode::ParseError,
              "weight '" + text + "' does not have shape " + std::to_string(m) + "|" +
                  std::to_string(n));
    a.insert(a.end(), b.begin(), b.end());
    return Weight(std::move(a));
}

std::string format_weight(const Weight& w, std::size_t m) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i == m) out += '|';
        else if (i != 0) out += ',';
        out += rat_str(w[i]);
    }
    return out;
}

CoordVector parse_coords(const std::string& text, std::size_t expected_size) {
    std::vector<Rational> v = parse_list(text);
    if (v.size() != expected_size)
        raise(ErrorCode::ParseError, "expected " + std::to_string(expected_size) +
                                         " coordinates in '" + text + "'");
    return CoordVector(std::move(v));
}

std::string format_coords(const CoordVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ',';
        out += rat_str(v[i]);
    }
    return out;
}

} // namespace wsc
