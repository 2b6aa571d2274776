#include "whittaker/half_int.hpp"

#include <charconv>
#include <ostream>

#include "whittaker/errors.hpp"

namespace whittaker {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParameterError("not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return from_doubled(2 * parse_int(s));
    std::int64_t num = parse_int(s.substr(0, slash));
    std::int64_t den = parse_int(s.substr(slash + 1));
    if (den != 2 && den != 1)
        throw ParameterError("only halves are allowed: '" + std::string(s) + "'");
    return den == 1 ? from_doubled(2 * num) : from_doubled(num);
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(d_ / 2);
    return std::to_string(d_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace whittaker
