#include "prodex/integer.hpp"

#include <cctype>
#include <stdexcept>

namespace prodex {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Integer parse_integer(std::string_view text)
{
    auto s = trim(text);
    std::size_t digits = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (digits == s.size())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    for (std::size_t i = digits; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

std::vector<Integer> parse_integer_list(std::string_view text)
{
    std::vector<Integer> out;
    if (trim(text).empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_integer(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

Integer power(const Integer &base, std::uint64_t exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

} // namespace prodex
