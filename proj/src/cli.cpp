#include "prodex/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "prodex/congruence.hpp"
#include "prodex/ghost.hpp"
#include "prodex/product.hpp"
#include "prodex/serialize.hpp"

namespace prodex::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Inputs
{
    std::optional<std::size_t> order;
    std::string format = "json";
    std::string threads = "auto";
    std::string coeffs, exponents, values, input, tail;
    bool ones = false;
    bool tilde = false;
    bool expand = false;
    bool via_product = false;
    std::string d = "1";
    std::uint64_t p = 0, a = 0, from = 0, to = 0;
};

std::size_t default_order()
{
    const char *env = std::getenv("PRODEX_DEFAULT_ORDER");
    if (env == nullptr || *env == '\0')
        return CliConfig{}.default_order;
    const Integer v = parse_integer(env);
    if (v < 1 || !v.fits_ulong_p())
        throw UsageError("PRODEX_DEFAULT_ORDER must be a positive integer");
    return v.get_ui();
}

CliConfig make_config(const Inputs &in)
{
    CliConfig cfg;
    cfg.default_order = default_order();
    if (in.format == "plain")
        cfg.output_format = OutputFormat::plain;
    else if (in.format != "json")
        throw UsageError("--format must be json or plain");
    if (in.threads != "auto") {
        const Integer t = parse_integer(in.threads);
        if (t < 1 || !t.fits_uint_p())
            throw UsageError("--threads must be a positive integer or auto");
        cfg.thread_count = static_cast<unsigned>(t.get_ui());
    }
    if (in.order && *in.order == 0)
        throw UsageError("--order must be at least 1");
    return cfg;
}

json read_input(const std::string &path)
{
    std::ifstream file;
    std::istream *is = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file)
            throw UsageError("cannot open " + path);
        is = &file;
    }
    try {
        return json::parse(*is);
    } catch (const json::parse_error &e) {
        throw UsageError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

void write_indexed(std::ostream &os, std::span<const Integer> xs, std::size_t first)
{
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << first + i << ' ' << to_decimal(xs[i]) << '\n';
}

void emit(std::ostream &os, const CliConfig &cfg, const TruncatedSeries &f)
{
    if (cfg.output_format == OutputFormat::json)
        os << to_json(f).dump() << '\n';
    else
        write_indexed(os, f.coeffs(), 0);
}

void emit(std::ostream &os, const CliConfig &cfg, const ProductExpansion &m)
{
    if (cfg.output_format == OutputFormat::json)
        os << to_json(m).dump() << '\n';
    else
        write_indexed(os, m.values(), 1);
}

void emit(std::ostream &os, const CliConfig &cfg, const GhostSequence &g)
{
    if (cfg.output_format == OutputFormat::json)
        os << to_json(g).dump() << '\n';
    else
        write_indexed(os, g.values(), 1);
}

TruncatedSeries series_input(const Inputs &in)
{
    std::optional<TruncatedSeries> f;
    if (!in.input.empty())
        f = series_from_json(read_input(in.input));
    else if (!in.coeffs.empty())
        f = make_series(parse_integer_list(in.coeffs));
    else
        throw UsageError("give --coeffs or --input");
    return in.order ? f->truncated(*in.order) : *f;
}

ProductExpansion exponent_input(const Inputs &in, const CliConfig &cfg)
{
    if (in.ones)
        return ProductExpansion::ones(in.order.value_or(cfg.default_order));
    std::optional<ProductExpansion> m;
    if (!in.input.empty())
        m = expansion_from_json(read_input(in.input));
    else if (!in.exponents.empty())
        m = ProductExpansion(parse_integer_list(in.exponents));
    else
        throw UsageError("give --exponents, --ones or --input");
    return in.order ? m->truncated(*in.order) : *m;
}

GhostSequence ghost_input(const Inputs &in)
{
    std::optional<GhostSequence> g;
    if (!in.input.empty())
        g = ghost_from_json(read_input(in.input));
    else if (!in.values.empty())
        g = GhostSequence(parse_integer_list(in.values));
    else
        throw UsageError("give --values or --input");
    return in.order ? g->truncated(*in.order) : *g;
}

Integer positive_d(const Inputs &in)
{
    const Integer d = parse_integer(in.d);
    if (d < 1)
        throw UsageError("--d must be at least 1");
    return d;
}

int run_command(const std::string &cmd, const Inputs &in, const CliConfig &cfg, std::ostream &os, std::ostream &err)
{
    const bool plain = cfg.output_format == OutputFormat::plain;

    if (cmd == "expand") {
        emit(os, cfg, expand_to_product(series_input(in)));
    } else if (cmd == "series") {
        emit(os, cfg, product_to_series(exponent_input(in, cfg)));
    } else if (cmd == "invert") {
        auto n = inverse_sequence(exponent_input(in, cfg));
        emit(os, cfg, in.tilde ? tilde_transform(n) : n);
    } else if (cmd == "ghost") {
        emit(os, cfg, ghost_from_exponents(exponent_input(in, cfg)));
    } else if (cmd == "unghost") {
        emit(os, cfg, exponents_from_ghost(ghost_input(in)));
    } else if (cmd == "family") {
        auto f = rational_family_series(parse_integer(in.d), in.order.value_or(cfg.default_order));
        if (in.expand)
            emit(os, cfg, expand_to_product(f));
        else
            emit(os, cfg, f);
    } else if (cmd == "fermat") {
        std::vector<Integer> tail = in.tail.empty() ? std::vector<Integer>{} : parse_integer_list(in.tail);
        const auto w = fermat_witness(positive_d(in), in.p, tail);
        if (plain) {
            os << "d " << to_decimal(w.d) << "\np " << w.p << "\nm_p " << to_decimal(w.m_p) << "\nm_2p "
               << to_decimal(w.m_2p) << "\nn_p " << to_decimal(w.n_p) << "\nn_2p " << to_decimal(w.n_2p)
               << "\nquotient " << to_decimal(w.quotient) << "\nidentity OK\n";
        } else {
            auto j = to_json(w);
            j["identity"] = "OK";
            os << j.dump() << '\n';
        }
    } else if (cmd == "check") {
        const bool holds = fermat_check(in.a, in.p);
        if (plain)
            os << "a " << in.a << "\np " << in.p << "\nholds " << (holds ? "true" : "false") << '\n';
        else
            os << json{{"a", in.a}, {"p", in.p}, {"holds", holds}}.dump() << '\n';
        if (!holds) {
            err << "prodex: fermat check failed for a=" << in.a << ", p=" << in.p << '\n';
            return kMathFailure;
        }
    } else if (cmd == "wieferich") {
        const auto report = wieferich_scan(in.from, in.to, cfg.thread_count);
        if (plain) {
            os << "lo " << report.lo << "\nhi " << report.hi << "\nprimes_tested " << report.primes_tested << '\n';
            for (auto h : report.hits)
                os << "hit " << h << '\n';
        } else {
            os << to_json(report).dump() << '\n';
        }
    } else if (cmd == "partitions") {
        const std::size_t order = in.order.value_or(cfg.default_order);
        const auto table = partition_numbers(order);
        if (!in.via_product) {
            if (plain)
                write_indexed(os, table.values, 0);
            else
                os << to_json(table).dump() << '\n';
            return kOk;
        }
        const auto rebuilt = product_to_series(inverse_sequence(ProductExpansion::ones(order)));
        bool match = true;
        std::size_t first_diff = 0;
        for (std::size_t n = 0; n <= order; ++n) {
            if (table.values[n] != rebuilt[n] && match) {
                match = false;
                first_diff = n;
            }
        }
        if (plain) {
            for (std::size_t n = 0; n <= order; ++n)
                os << n << ' ' << to_decimal(table.values[n]) << ' ' << to_decimal(rebuilt[n]) << '\n';
        } else {
            auto j = to_json(table);
            j["via_product"] = to_json(rebuilt)["coeffs"];
            j["match"] = match;
            os << j.dump() << '\n';
        }
        if (!match) {
            err << "prodex: partition oracle and product disagree at n=" << first_diff << '\n';
            return kMathFailure;
        }
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Inputs in;
    CLI::App app{"Exact infinite-product expansions of integer power series", "prodex"};
    app.require_subcommand(1);
    app.add_option("--order", in.order, "truncation order (default 64, or PRODEX_DEFAULT_ORDER)");
    app.add_option("--format", in.format, "json or plain")->capture_default_str();
    app.add_option("--threads", in.threads, "worker threads for wieferich, or auto")->capture_default_str();

    auto sub = [&](const char *name, const char *desc) {
        auto *s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };
    auto add_input = [&](CLI::App *s) { s->add_option("--input", in.input, "JSON file, or - for stdin"); };
    auto add_exponents = [&](CLI::App *s) {
        s->add_option("--exponents", in.exponents, "comma-separated m_1,m_2,...");
        s->add_flag("--ones", in.ones, "all-ones exponent sequence");
        add_input(s);
    };

    auto *expand = sub("expand", "series coefficients -> product exponents");
    expand->add_option("--coeffs", in.coeffs, "comma-separated c_0,c_1,...");
    add_input(expand);

    add_exponents(sub("series", "product exponents -> series coefficients"));

    auto *invert = sub("invert", "exponents of the reciprocal product");
    add_exponents(invert);
    invert->add_flag("--tilde", in.tilde, "print the negated sequence");

    add_exponents(sub("ghost", "exponents -> divisor-sum ghost values"));

    auto *unghost = sub("unghost", "ghost values -> exponents");
    unghost->add_option("--values", in.values, "comma-separated L_1,L_2,...");
    add_input(unghost);

    auto *family = sub("family", "the series (1 - (d+1)x)/(1 - dx)");
    family->add_option("--d", in.d, "family parameter")->capture_default_str();
    family->add_flag("--expand", in.expand, "print its product exponents instead");

    auto *fermat = sub("fermat", "N = 2p witness for f = 1 - x - d x^2");
    fermat->add_option("--d", in.d, "d >= 1")->required();
    fermat->add_option("--p", in.p, "odd prime")->required();
    fermat->add_option("--tail", in.tail, "optional coefficients a_3,a_4,...");

    auto *check = sub("check", "p | a^p - a by two routes");
    check->add_option("--a", in.a, "a >= 1")->required();
    check->add_option("--p", in.p, "prime")->required();

    auto *wief = sub("wieferich", "scan [from, to] for Wieferich primes");
    wief->add_option("--from", in.from, "lower bound")->required();
    wief->add_option("--to", in.to, "upper bound")->required();

    auto *parts = sub("partitions", "partition numbers p(0..order)");
    parts->add_flag("--via-product", in.via_product, "also rebuild them from the inverse of all-ones and diff");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty())
        rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kUsage;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    std::ostringstream buffer;
    try {
        const auto cfg = make_config(in);
        const int code = run_command(cmd, in, cfg, buffer, err);
        out << buffer.str();
        return code;
    } catch (const NotRealizable &e) {
        err << "prodex: " << e.what() << '\n';
        return kMathFailure;
    } catch (const IdentityViolation &e) {
        err << "prodex: " << e.what() << '\n';
        return kMathFailure;
    } catch (const std::exception &e) {
        err << "prodex: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace prodex::cli
