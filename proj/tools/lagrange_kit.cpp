#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/identities/registry.hpp>
#include <lagrange_kit/lagrange/solve.hpp>
#include <lagrange_kit/laurent_series.hpp>
#include <lagrange_kit/literal.hpp>
#include <lagrange_kit/oracle/registry.hpp>
#include <lagrange_kit/serialization.hpp>
#include <lagrange_kit/series_functions.hpp>

using namespace lagrange_kit;

namespace
{

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Options
{
    std::optional<int> order;
    std::string format = "json";
    std::string R;
    std::string f;
    long k = 1;
    // Passed through to the identity and oracle runners by flag name.
    std::vector<std::pair<std::string, std::string>> params;
};

int max_order()
{
    const char *env = std::getenv("LAGRANGE_KIT_MAX_ORDER");
    if (env == nullptr || *env == '\0') {
        return 200;
    }
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used != std::string(env).size() || v < 1) {
            throw std::invalid_argument(env);
        }
        return v;
    } catch (const std::exception &) {
        throw InvalidArgument(std::string("LAGRANGE_KIT_MAX_ORDER must be a positive integer, got '") + env + "'");
    }
}

int checked_order(int order)
{
    if (order < 1) {
        throw InvalidArgument("order must be at least 1");
    }
    const int cap = max_order();
    if (order > cap) {
        throw InvalidArgument("order " + std::to_string(order) + " exceeds LAGRANGE_KIT_MAX_ORDER=" +
                              std::to_string(cap));
    }
    return order;
}

IdentityParams collect(const Options &o)
{
    IdentityParams p;
    for (const auto &[k, v] : o.params) {
        p.set(k, v);
    }
    return p;
}

// [x^n] f^k for n = lo .. order-1 as a Laurent series.
LaurentSeries<Rational> powers_of_solution(const PowerSeries<Rational> &R, long k, int order)
{
    if (k == 0) {
        return LaurentSeries<Rational>(PowerSeries<Rational>::one(order));
    }
    // f = x u with u = R(f); f^k = x^k u^k, so u is needed to order - k.
    const int need = static_cast<int>(order - k);
    if (need <= 0) {
        return LaurentSeries<Rational>(order, {}, order);
    }
    const auto f = solve_xr(R.truncated(need), need + 1);
    const auto u = f.shifted_down(1);
    const auto uk = k > 0 ? pow(u, k) : pow(u.inverse(), -k);
    return LaurentSeries<Rational>(static_cast<int>(k), uk.coefficients(), order);
}

void print_series_rows(const LaurentSeries<Rational> &s, int first, const std::string &format, std::ostream &out)
{
    if (format == "csv") {
        out << "n,coefficient\n";
    }
    for (int n = first; n < s.order(); ++n) {
        const auto c = s.coeff(n);
        if (format == "csv") {
            out << n << ',' << c << '\n';
        } else {
            out << std::setw(4) << n << "  " << c << '\n';
        }
    }
}

int run_coeffs(const Options &o)
{
    const int order = checked_order(o.order.value_or(30));
    // Negative powers need u = f/x past the requested order.
    const auto R = parse_series_literal(o.R, static_cast<int>(order - std::min(o.k, 0L)));
    if (R[0].is_zero()) {
        throw InvalidArgument("R(0) must be nonzero");
    }
    const auto fk = powers_of_solution(R, o.k, order);
    if (o.format == "json") {
        nlohmann::json out{{"schema", json_schema_version},
                           {"command", "coeffs"},
                           {"R", o.R},
                           {"k", o.k},
                           {"order", order},
                           {"series", to_json(fk)}};
        std::cout << out.dump(2) << '\n';
    } else {
        if (o.format == "pretty") {
            std::cout << "[x^n] f^" << o.k << ", f = x R(f), R = " << o.R << ", order " << order << '\n';
        }
        print_series_rows(fk, static_cast<int>(std::min(o.k, 0L)), o.format, std::cout);
    }
    return exit_pass;
}

int run_invert(const Options &o)
{
    const int order = checked_order(o.order.value_or(30));
    const auto f = parse_series_literal(o.f, order);
    const auto g = reversion(f);
    if (o.format == "json") {
        nlohmann::json out{{"schema", json_schema_version},
                           {"command", "invert"},
                           {"f", o.f},
                           {"order", order},
                           {"series", to_json(g)}};
        std::cout << out.dump(2) << '\n';
    } else {
        if (o.format == "pretty") {
            std::cout << "compositional inverse of f = " << o.f << ", order " << order << '\n';
        }
        print_series_rows(LaurentSeries<Rational>(g), 0, o.format, std::cout);
    }
    return exit_pass;
}

int run_identity_command(const std::string &name, const Options &o)
{
    const auto &entry = find_identity(name);
    const int order = checked_order(o.order.value_or(default_identity_order(name)));
    const auto report = entry.run(collect(o), order);
    if (o.format == "json") {
        std::cout << to_json(report).dump(2) << '\n';
    } else if (o.format == "csv") {
        std::cout << "field,value\n";
        std::cout << "identity," << csv_field(report.name) << '\n';
        std::cout << "order," << report.order << '\n';
        for (const auto &[k, v] : report.params) {
            std::cout << "param." << k << ',' << csv_field(v) << '\n';
        }
        std::cout << "status," << (report.passed() ? "pass" : "fail") << '\n';
        std::cout << "checks," << report.checks << '\n';
        std::cout << "empirical," << (report.empirical ? "true" : "false") << '\n';
        std::cout << "first_failure," << csv_field(report.first_failure.value_or("")) << '\n';
        for (const auto &[k, v] : report.results) {
            std::cout << "result." << k << ',' << csv_field(v) << '\n';
        }
    } else {
        std::cout << report.name << ": " << (report.passed() ? "pass" : "FAIL") << " (" << report.checks
                  << " checks, order " << report.order << ", " << std::fixed << std::setprecision(1)
                  << report.elapsed_ms << " ms)\n";
        for (const auto &[k, v] : report.params) {
            std::cout << "  " << k << " = " << v << '\n';
        }
        for (const auto &[k, v] : report.results) {
            std::cout << "  " << k << ": " << v << '\n';
        }
        if (report.empirical) {
            std::cout << "  (checked empirically)\n";
        }
        if (report.first_failure) {
            std::cout << "  first failure: " << *report.first_failure << '\n';
        }
    }
    return report.passed() ? exit_pass : exit_fail;
}

int run_oracle_command(const std::string &kind, const Options &o)
{
    const auto start = std::chrono::steady_clock::now();
    const auto table = run_oracle(kind, collect(o));
    if (o.format == "json") {
        std::cout << to_json(table).dump(2) << '\n';
    } else if (o.format == "csv") {
        std::cout << "key,oracle,formula,match\n";
        for (const auto &r : table.rows) {
            std::cout << csv_field(r.key) << ',' << r.oracle.get_str() << ',' << r.formula << ','
                      << (r.match() ? "true" : "false") << '\n';
        }
    } else {
        const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        std::cout << table.kind;
        for (const auto &[k, v] : table.params) {
            std::cout << ' ' << k << '=' << v;
        }
        std::cout << ": " << (table.all_match() ? "all match" : "MISMATCH") << " (" << std::fixed
                  << std::setprecision(1) << ms.count() << " ms)\n";
        for (const auto &r : table.rows) {
            std::cout << "  " << std::left << std::setw(28) << r.key << ' ' << r.oracle.get_str() << " = " << r.formula
                      << (r.match() ? "  match" : "  MISMATCH") << '\n';
        }
    }
    return table.all_match() ? exit_pass : exit_fail;
}

int run_list(const Options &o)
{
    if (o.format == "json") {
        nlohmann::json ids = nlohmann::json::array();
        for (const auto &e : identity_registry()) {
            ids.push_back({{"name", e.name}, {"summary", e.summary}, {"params", e.params}});
        }
        nlohmann::json out{{"schema", json_schema_version},
                           {"identities", ids},
                           {"oracles", oracle_kinds()},
                           {"presets", series_presets()}};
        std::cout << out.dump(2) << '\n';
    } else if (o.format == "csv") {
        std::cout << "kind,name,summary\n";
        for (const auto &e : identity_registry()) {
            std::cout << "identity," << e.name << ',' << csv_field(e.summary) << '\n';
        }
        for (const auto &k : oracle_kinds()) {
            std::cout << "oracle," << k << ",\n";
        }
    } else {
        std::cout << "identities:\n";
        for (const auto &e : identity_registry()) {
            std::cout << "  " << std::left << std::setw(24) << e.name << e.summary << '\n';
        }
        std::cout << "oracles:\n";
        for (const auto &k : oracle_kinds()) {
            std::cout << "  " << k << '\n';
        }
    }
    return exit_pass;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact formal power series and Lagrange inversion toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--order", o.order, "truncation order N (exclusive)");
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
    };
    // Identity and oracle parameters are kept as text; the runners parse
    // ranges like "-3..5" and lists like "2,1" themselves.
    std::vector<std::string> names{"k", "p", "i", "j", "r", "s", "l", "m", "n", "n-max", "x", "z", "seed", "alphabet",
                                   "len"};
    std::map<std::string, std::string> raw;
    auto add_params = [&](CLI::App *cmd) {
        for (const auto &name : names) {
            cmd->add_option("--" + name, raw[name])->allow_extra_args(false);
        }
    };

    auto *coeffs = app.add_subcommand("coeffs", "[x^n] f^k where f = x R(f)");
    add_common(coeffs);
    coeffs->add_option("--R", o.R, "coefficient list like 1,2,1 or a preset (exp, geom, one-plus-t-squared)")
        ->required();
    coeffs->add_option("--k", o.k, "power of f");

    auto *invert = app.add_subcommand("invert", "compositional inverse of f");
    add_common(invert);
    invert->add_option("--f", o.f, "coefficient list of f starting at x^0, e.g. 0,1,-1")->required();

    std::string target;
    auto *identity = app.add_subcommand("identity", "verify a cataloged identity");
    add_common(identity);
    identity->add_option("name", target, "identity name (see list)")->required();
    add_params(identity);

    auto *oracle = app.add_subcommand("oracle", "brute-force count against the closed formula");
    add_common(oracle);
    oracle->add_option("kind", target, "oracle kind (see list)")->required();
    add_params(oracle);

    auto *list = app.add_subcommand("list", "list identities and oracles");
    add_common(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    for (const auto &name : names) {
        if (!raw[name].empty()) {
            o.params.emplace_back(name, raw[name]);
        }
    }

    try {
        if (coeffs->parsed()) {
            return run_coeffs(o);
        }
        if (invert->parsed()) {
            return run_invert(o);
        }
        if (identity->parsed()) {
            return run_identity_command(target, o);
        }
        if (oracle->parsed()) {
            return run_oracle_command(target, o);
        }
        return run_list(o);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
