#include "prodex/serialize.hpp"

#include <stdexcept>
#include <string>

namespace prodex {

using nlohmann::json;

namespace {

json decimal_array(std::span<const Integer> xs)
{
    json arr = json::array();
    for (const auto &x : xs)
        arr.push_back(to_decimal(x));
    return arr;
}

std::vector<Integer> read_array(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw std::invalid_argument(std::string("expected an object with array \"") + key + "\"");
    std::vector<Integer> out;
    for (const auto &item : j.at(key)) {
        if (item.is_string())
            out.push_back(parse_integer(item.get<std::string>()));
        else if (item.is_number_integer())
            out.push_back(parse_integer(item.dump()));
        else
            throw std::invalid_argument(std::string("non-integer entry in \"") + key + "\"");
    }
    return out;
}

void check_order(const json &j, std::size_t expected)
{
    if (!j.contains("order"))
        return;
    if (!j.at("order").is_number_unsigned() || j.at("order").get<std::size_t>() != expected)
        throw std::invalid_argument("\"order\" disagrees with array length");
}

} // namespace

json to_json(const TruncatedSeries &f) { return {{"order", f.order()}, {"coeffs", decimal_array(f.coeffs())}}; }

json to_json(const ProductExpansion &m) { return {{"order", m.order()}, {"exponents", decimal_array(m.values())}}; }

json to_json(const GhostSequence &ghost) { return {{"order", ghost.order()}, {"values", decimal_array(ghost.values())}}; }

json to_json(const FermatWitness &w)
{
    return {{"d", to_decimal(w.d)},      {"p", w.p},
            {"m_p", to_decimal(w.m_p)},  {"m_2p", to_decimal(w.m_2p)},
            {"n_p", to_decimal(w.n_p)},  {"n_2p", to_decimal(w.n_2p)},
            {"quotient", to_decimal(w.quotient)}};
}

json to_json(const WieferichScanReport &report)
{
    return {{"lo", report.lo}, {"hi", report.hi}, {"primes_tested", report.primes_tested}, {"hits", report.hits}};
}

json to_json(const PartitionTable &table)
{
    return {{"order", table.order()}, {"values", decimal_array(table.values)}};
}

TruncatedSeries series_from_json(const json &j)
{
    auto c = read_array(j, "coeffs");
    if (c.empty())
        throw std::invalid_argument("\"coeffs\" must not be empty");
    check_order(j, c.size() - 1);
    return TruncatedSeries(std::move(c));
}

ProductExpansion expansion_from_json(const json &j)
{
    auto v = read_array(j, "exponents");
    check_order(j, v.size());
    return ProductExpansion(std::move(v));
}

GhostSequence ghost_from_json(const json &j)
{
    auto v = read_array(j, "values");
    check_order(j, v.size());
    return GhostSequence(std::move(v));
}

WieferichScanReport scan_report_from_json(const json &j)
{
    try {
        WieferichScanReport r;
        r.lo = j.at("lo").get<std::uint64_t>();
        r.hi = j.at("hi").get<std::uint64_t>();
        r.primes_tested = j.at("primes_tested").get<std::uint64_t>();
        r.hits = j.at("hits").get<std::vector<std::uint64_t>>();
        return r;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("bad scan report: ") + e.what());
    }
}

} // namespace prodex
