#ifndef LAGRANGE_KIT_MULTIPOLY_HPP
#define LAGRANGE_KIT_MULTIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/rational.hpp>

namespace lagrange_kit
{

// Sparse polynomial over the rationals in a list of named variables.
//
// Monomials are exponent vectors indexed by the variable list and kept in a
// lexicographically ordered map, which fixes the serialization order. Zero
// coefficients are never stored. Operands with different variable lists are
// aligned on the union of the two lists, so equality and arithmetic do not
// depend on the order in which variables were introduced.
class MultiPoly
{
public:
    using Monomial = std::vector<std::uint32_t>;
    using Terms = std::map<Monomial, Rational>;
    using Variables = std::vector<std::string>;

    MultiPoly() : m_vars(empty_variables()) {}
    MultiPoly(const Rational &c) : m_vars(empty_variables())
    {
        if (!c.is_zero()) {
            m_terms.emplace(Monomial{}, c);
        }
    }

    static MultiPoly variable(const std::string &name)
    {
        return generators({name}).front();
    }

    // One generator per name, all sharing a single variable list.
    static std::vector<MultiPoly> generators(const Variables &names)
    {
        check_distinct(names);
        auto vars = std::make_shared<const Variables>(names);
        std::vector<MultiPoly> out;
        for (std::size_t i = 0; i < names.size(); ++i) {
            MultiPoly p;
            p.m_vars = vars;
            Monomial m(names.size(), 0);
            m[i] = 1;
            p.m_terms.emplace(std::move(m), Rational(1));
            out.push_back(std::move(p));
        }
        return out;
    }

    static MultiPoly from_terms(const Variables &names, const Terms &terms)
    {
        check_distinct(names);
        MultiPoly p;
        p.m_vars = std::make_shared<const Variables>(names);
        for (const auto &[mono, c] : terms) {
            if (mono.size() != names.size()) {
                throw InvalidArgument("exponent vector length does not match the variable list");
            }
            if (!c.is_zero()) {
                p.m_terms[mono] += c;
                if (p.m_terms[mono].is_zero()) {
                    p.m_terms.erase(mono);
                }
            }
        }
        return p;
    }

    const Variables &variables() const
    {
        return *m_vars;
    }
    const Terms &terms() const
    {
        return m_terms;
    }
    std::size_t term_count() const
    {
        return m_terms.size();
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    bool is_constant() const
    {
        return m_terms.empty() || (m_terms.size() == 1 && is_constant_monomial(m_terms.begin()->first));
    }
    // Only nonzero constants are invertible in the polynomial ring.
    bool is_unit() const
    {
        return !is_zero() && is_constant();
    }
    MultiPoly inverse() const
    {
        if (!is_unit()) {
            throw DivisionByNonUnit("polynomial " + to_string() + " is not invertible");
        }
        return MultiPoly(constant_term().inverse());
    }

    Rational constant_term() const
    {
        for (const auto &[mono, c] : m_terms) {
            if (is_constant_monomial(mono)) {
                return c;
            }
        }
        return Rational(0);
    }

    // Coefficient of prod var^exp; variables not mentioned have exponent 0.
    Rational coefficient(const std::map<std::string, unsigned> &exponents) const
    {
        Monomial mono(m_vars->size(), 0);
        for (const auto &[name, e] : exponents) {
            const auto idx = index_of(name);
            if (idx == npos) {
                if (e != 0) {
                    return Rational(0);
                }
                continue;
            }
            mono[idx] = e;
        }
        for (const auto &[m, c] : m_terms) {
            if (same_monomial(m, mono)) {
                return c;
            }
        }
        return Rational(0);
    }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const
    {
        int d = -1;
        for (const auto &[mono, c] : m_terms) {
            d = std::max(d, monomial_degree(mono));
        }
        return d;
    }

    // Degree in one variable; -1 for the zero polynomial.
    int degree_in(const std::string &name) const
    {
        if (is_zero()) {
            return -1;
        }
        const auto idx = index_of(name);
        if (idx == npos) {
            return 0;
        }
        int d = 0;
        for (const auto &[mono, c] : m_terms) {
            d = std::max(d, static_cast<int>(exponent_at(mono, idx)));
        }
        return d;
    }

    // Drops every term of total degree above max_degree.
    MultiPoly truncated(int max_degree) const
    {
        MultiPoly r;
        r.m_vars = m_vars;
        for (const auto &[mono, c] : m_terms) {
            if (monomial_degree(mono) <= max_degree) {
                r.m_terms.emplace_hint(r.m_terms.end(), mono, c);
            }
        }
        return r;
    }

    // Drops every term in which some variable has exponent above max_exponent.
    MultiPoly truncated_each(unsigned max_exponent) const
    {
        MultiPoly r;
        r.m_vars = m_vars;
        for (const auto &[mono, c] : m_terms) {
            if (std::all_of(mono.begin(), mono.end(), [&](std::uint32_t e) { return e <= max_exponent; })) {
                r.m_terms.emplace_hint(r.m_terms.end(), mono, c);
            }
        }
        return r;
    }

    // Replaces one variable by a rational value. The variable stays in the list.
    MultiPoly substitute(const std::string &name, const Rational &value) const
    {
        const auto idx = index_of(name);
        if (idx == npos) {
            return *this;
        }
        MultiPoly r;
        r.m_vars = m_vars;
        for (const auto &[mono, c] : m_terms) {
            Monomial m = mono;
            const auto e = exponent_at(m, idx);
            if (idx < m.size()) {
                m[idx] = 0;
            }
            r.add_term(m, c * pow(value, static_cast<long>(e)));
        }
        return r;
    }

    Rational evaluate(const std::map<std::string, Rational> &values) const
    {
        Rational total(0);
        for (const auto &[mono, c] : m_terms) {
            Rational term = c;
            for (std::size_t i = 0; i < mono.size(); ++i) {
                if (mono[i] == 0) {
                    continue;
                }
                const auto it = values.find((*m_vars)[i]);
                if (it == values.end()) {
                    throw InvalidArgument("no value given for variable " + (*m_vars)[i]);
                }
                term *= pow(it->second, static_cast<long>(mono[i]));
            }
            total += term;
        }
        return total;
    }

    MultiPoly &operator+=(const MultiPoly &o)
    {
        return accumulate(o, Rational(1));
    }
    MultiPoly &operator-=(const MultiPoly &o)
    {
        return accumulate(o, Rational(-1));
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b)
    {
        return a += b;
    }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b)
    {
        return a -= b;
    }
    friend MultiPoly operator-(const MultiPoly &a)
    {
        MultiPoly r = a;
        for (auto &[mono, c] : r.m_terms) {
            c = -c;
        }
        return r;
    }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
    {
        return multiply(a, b, -1);
    }
    friend MultiPoly operator*(const MultiPoly &a, const Rational &q)
    {
        if (q.is_zero()) {
            MultiPoly z;
            z.m_vars = a.m_vars;
            return z;
        }
        MultiPoly r = a;
        for (auto &[mono, c] : r.m_terms) {
            c *= q;
        }
        return r;
    }
    friend MultiPoly operator*(const Rational &q, const MultiPoly &a)
    {
        return a * q;
    }

    // Product with every term above total degree max_degree dropped (max_degree < 0: keep all).
    static MultiPoly multiply(const MultiPoly &a, const MultiPoly &b, int max_degree)
    {
        const auto vars = union_variables(a, b);
        const MultiPoly x = a.aligned(vars);
        const MultiPoly y = b.aligned(vars);
        MultiPoly r;
        r.m_vars = vars;
        if (x.is_zero() || y.is_zero()) {
            return r;
        }
        const std::size_t n = vars->size();
        std::vector<std::pair<int, const Terms::value_type *>> ys;
        ys.reserve(y.m_terms.size());
        for (const auto &t : y.m_terms) {
            ys.emplace_back(monomial_degree(t.first), &t);
        }
        Monomial m(n, 0);
        for (const auto &[ma, ca] : x.m_terms) {
            const int da = monomial_degree(ma);
            if (max_degree >= 0 && da > max_degree) {
                continue;
            }
            for (const auto &[db, t] : ys) {
                if (max_degree >= 0 && da + db > max_degree) {
                    continue;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    m[i] = ma[i] + t->first[i];
                }
                r.add_term(m, ca * t->second);
            }
        }
        return r;
    }

    friend bool operator==(const MultiPoly &a, const MultiPoly &b)
    {
        if (a.m_vars == b.m_vars || *a.m_vars == *b.m_vars) {
            return a.m_terms == b.m_terms;
        }
        const auto vars = union_variables(a, b);
        return a.aligned(vars).m_terms == b.aligned(vars).m_terms;
    }

    // Human-readable form, terms in monomial order, e.g. "1 - 2*x + x^2*y".
    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &[mono, c] : m_terms) {
            std::string factors;
            for (std::size_t i = 0; i < mono.size(); ++i) {
                if (mono[i] == 0) {
                    continue;
                }
                if (!factors.empty()) {
                    factors += "*";
                }
                factors += (*m_vars)[i];
                if (mono[i] > 1) {
                    factors += "^" + std::to_string(mono[i]);
                }
            }
            write_term(os, c, factors, first);
            first = false;
        }
        return os.str();
    }

    // Exponent vector rendered as "[e1,e2,...]" over the variable list.
    static std::string monomial_key(const Monomial &mono, std::size_t width)
    {
        std::string s = "[";
        for (std::size_t i = 0; i < width; ++i) {
            if (i > 0) {
                s += ",";
            }
            s += std::to_string(i < mono.size() ? mono[i] : 0);
        }
        return s + "]";
    }

    friend std::ostream &operator<<(std::ostream &os, const MultiPoly &p)
    {
        return os << p.to_string();
    }

    // Shared by the univariate formatter in format.hpp.
    static void write_term(std::ostream &os, const Rational &c, const std::string &factors, bool first)
    {
        const bool negative = c.sign() < 0;
        const Rational magnitude = negative ? -c : c;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        if (factors.empty()) {
            os << magnitude;
        } else if (magnitude == Rational(1)) {
            os << factors;
        } else {
            os << magnitude << "*" << factors;
        }
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    static std::shared_ptr<const Variables> empty_variables()
    {
        static const auto empty = std::make_shared<const Variables>();
        return empty;
    }

    static void check_distinct(const Variables &names)
    {
        for (std::size_t i = 0; i < names.size(); ++i) {
            for (std::size_t j = i + 1; j < names.size(); ++j) {
                if (names[i] == names[j]) {
                    throw InvalidArgument("duplicate variable name " + names[i]);
                }
            }
        }
    }

    static bool is_constant_monomial(const Monomial &m)
    {
        return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
    }

    static int monomial_degree(const Monomial &m)
    {
        return static_cast<int>(std::accumulate(m.begin(), m.end(), std::uint64_t{0}));
    }

    static std::uint32_t exponent_at(const Monomial &m, std::size_t idx)
    {
        return idx < m.size() ? m[idx] : 0;
    }

    static bool same_monomial(const Monomial &a, const Monomial &b)
    {
        const std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (exponent_at(a, i) != exponent_at(b, i)) {
                return false;
            }
        }
        return true;
    }

    std::size_t index_of(const std::string &name) const
    {
        const auto it = std::find(m_vars->begin(), m_vars->end(), name);
        return it == m_vars->end() ? npos : static_cast<std::size_t>(it - m_vars->begin());
    }

    static std::shared_ptr<const Variables> union_variables(const MultiPoly &a, const MultiPoly &b)
    {
        if (a.m_vars == b.m_vars || *a.m_vars == *b.m_vars) {
            return a.m_vars;
        }
        // A constant carries no variables worth keeping.
        if (a.is_constant() && a.m_vars->empty()) {
            return b.m_vars;
        }
        if (b.is_constant() && b.m_vars->empty()) {
            return a.m_vars;
        }
        Variables merged = *a.m_vars;
        for (const auto &name : *b.m_vars) {
            if (std::find(merged.begin(), merged.end(), name) == merged.end()) {
                merged.push_back(name);
            }
        }
        if (merged == *a.m_vars) {
            return a.m_vars;
        }
        return std::make_shared<const Variables>(std::move(merged));
    }

    // Re-expresses the terms over a superset variable list.
    MultiPoly aligned(const std::shared_ptr<const Variables> &vars) const
    {
        if (vars == m_vars) {
            return *this;
        }
        MultiPoly r;
        r.m_vars = vars;
        std::vector<std::size_t> target(m_vars->size());
        for (std::size_t i = 0; i < m_vars->size(); ++i) {
            const auto it = std::find(vars->begin(), vars->end(), (*m_vars)[i]);
            target[i] = static_cast<std::size_t>(it - vars->begin());
        }
        for (const auto &[mono, c] : m_terms) {
            Monomial m(vars->size(), 0);
            for (std::size_t i = 0; i < mono.size(); ++i) {
                m[target[i]] = mono[i];
            }
            r.m_terms.emplace(std::move(m), c);
        }
        return r;
    }

    MultiPoly &accumulate(const MultiPoly &o, const Rational &sign)
    {
        const auto vars = union_variables(*this, o);
        if (vars != m_vars) {
            *this = aligned(vars);
        }
        const MultiPoly other = o.aligned(vars);
        for (const auto &[mono, c] : other.m_terms) {
            add_term(mono, sign == Rational(1) ? c : -c);
        }
        return *this;
    }

    void add_term(const Monomial &m, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }

    std::shared_ptr<const Variables> m_vars;
    Terms m_terms;
};

} // namespace lagrange_kit

#endif
