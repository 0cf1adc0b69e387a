#ifndef LAGRANGE_KIT_IDENTITIES_REPORT_HPP
#define LAGRANGE_KIT_IDENTITIES_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/rational.hpp>

namespace lagrange_kit
{

// Outcome of one identity check. Passes iff first_failure is empty.
struct IdentityReport
{
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    int order = 0;
    std::optional<std::string> first_failure;
    double elapsed_ms = 0;
    // Computed artifacts, e.g. a polynomial, in insertion order.
    std::vector<std::pair<std::string, std::string>> results;
    // Set when the checked statement is stated without proof.
    bool empirical = false;
    std::uint64_t checks = 0;

    bool passed() const
    {
        return !first_failure.has_value();
    }
};

// Accumulates checks; only the first failing one is recorded.
class ReportBuilder
{
public:
    ReportBuilder(std::string name, int order) : m_start(std::chrono::steady_clock::now())
    {
        m_report.name = std::move(name);
        m_report.order = order;
    }

    template <typename T>
    ReportBuilder &param(const std::string &key, const T &value)
    {
        std::ostringstream os;
        os << value;
        m_report.params.emplace_back(key, os.str());
        return *this;
    }

    // `where` is only called on failure.
    template <typename Where>
    bool check(bool ok, Where &&where)
    {
        ++m_report.checks;
        if (!ok && !m_report.first_failure) {
            m_report.first_failure = std::string(where());
        }
        return ok;
    }

    bool check(bool ok, const char *where)
    {
        return check(ok, [&] { return std::string(where); });
    }

    template <typename A, typename B, typename Where>
    bool equal(const A &got, const B &expected, Where &&where)
    {
        return check(got == expected, [&] {
            std::ostringstream os;
            os << where() << ": got " << got << ", expected " << expected;
            return os.str();
        });
    }

    void result(const std::string &key, const std::string &value)
    {
        m_report.results.emplace_back(key, value);
    }
    void empirical()
    {
        m_report.empirical = true;
    }
    bool failed() const
    {
        return m_report.first_failure.has_value();
    }

    // Runs body, turning a library error into a recorded failure.
    template <typename Body>
    void guarded(Body &&body)
    {
        try {
            body();
        } catch (const Error &e) {
            check(false, [&] { return std::string(e.what()); });
        }
    }

    IdentityReport finish()
    {
        const auto end = std::chrono::steady_clock::now();
        m_report.elapsed_ms = std::chrono::duration<double, std::milli>(end - m_start).count();
        return m_report;
    }

private:
    IdentityReport m_report;
    std::chrono::steady_clock::time_point m_start;
};

// Short "name=value" location string for failure messages.
inline std::string at(std::initializer_list<std::pair<const char *, long>> items, const std::string &label = "")
{
    std::string out = label;
    for (const auto &[k, v] : items) {
        if (!out.empty() && out.back() != ' ') {
            out += ' ';
        }
        out += std::string(k) + "=" + std::to_string(v);
    }
    return out;
}

struct IntRange
{
    long lo = 0;
    long hi = 0;
};

// Name/value parameters as given on the command line. Ranges are "a..b";
// a single value v is the range v..v.
class IdentityParams
{
public:
    IdentityParams() = default;
    IdentityParams(std::initializer_list<std::pair<const std::string, std::string>> init) : m_values(init) {}

    void set(const std::string &key, const std::string &value)
    {
        m_values[key] = value;
    }
    bool has(const std::string &key) const
    {
        return m_values.count(key) > 0;
    }
    const std::map<std::string, std::string> &values() const
    {
        return m_values;
    }

    long get_int(const std::string &key, long fallback) const
    {
        const auto it = m_values.find(key);
        return it == m_values.end() ? fallback : parse_int(key, it->second);
    }

    IntRange get_range(const std::string &key, IntRange fallback) const
    {
        const auto it = m_values.find(key);
        if (it == m_values.end()) {
            return fallback;
        }
        const std::string &text = it->second;
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const long v = parse_int(key, text);
            return {v, v};
        }
        IntRange r{parse_int(key, text.substr(0, dots)), parse_int(key, text.substr(dots + 2))};
        if (r.lo > r.hi) {
            throw InvalidArgument("empty range for --" + key + ": " + text);
        }
        return r;
    }

    std::vector<long> get_list(const std::string &key, std::vector<long> fallback) const
    {
        const auto it = m_values.find(key);
        if (it == m_values.end()) {
            return fallback;
        }
        std::vector<long> out;
        std::stringstream ss(it->second);
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(parse_int(key, item));
        }
        return out;
    }

private:
    static long parse_int(const std::string &key, const std::string &text)
    {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(text, &used);
        } catch (const std::exception &) {
            throw InvalidArgument("--" + key + " expects an integer, got '" + text + "'");
        }
        if (used != text.size()) {
            throw InvalidArgument("--" + key + " expects an integer, got '" + text + "'");
        }
        return v;
    }

    std::map<std::string, std::string> m_values;
};

// Format a range parameter as "a..b".
inline std::string range_text(IntRange r)
{
    return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

} // namespace lagrange_kit

#endif
