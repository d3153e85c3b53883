#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <utcochar/cochar.hpp>
#include <utcochar/schur.hpp>

namespace utcochar::cli
{

namespace
{

constexpr std::size_t max_listed_failures = 10;

std::size_t count_differences(const TruncatedSeries &a, const TruncatedSeries &b)
{
    std::set<ExponentVector> keys;
    for (const auto &[e, c] : a.terms()) {
        keys.insert(e);
    }
    for (const auto &[e, c] : b.terms()) {
        keys.insert(e);
    }
    return static_cast<std::size_t>(
        std::count_if(keys.begin(), keys.end(), [&](const ExponentVector &e) { return a.coefficient(e) != b.coefficient(e); }));
}

ClosedFormReport identity_report(std::string check, std::string subject, std::size_t mismatches)
{
    return {std::move(check), std::move(subject), 0, Integer(mismatches)};
}

std::string degree_subject(std::size_t d, int bound)
{
    return "d=" + std::to_string(d) + ", degree <= " + std::to_string(bound);
}

// Shared inputs, computed at most once per run.
class Context
{
public:
    Context(int k, std::size_t d, int bound) : k(k), d(d), bound(bound) {}

    const MultiplicitySeries &current()
    {
        if (!m_current) {
            m_current = multiplicity_series_Uk(k, d, bound);
        }
        return *m_current;
    }
    const MultiplicitySeries &previous()
    {
        if (!m_previous) {
            m_previous = multiplicity_series_Uk(k - 1, d, bound);
        }
        return *m_previous;
    }

    const int k;
    const std::size_t d;
    const int bound;

private:
    std::optional<MultiplicitySeries> m_current;
    std::optional<MultiplicitySeries> m_previous;
};

CheckResult check_weyl(Context &ctx)
{
    CheckResult out{"weyl", "Y^j(1) has the Weyl dimension dim W_j(mu) at T^mu", {}, 0.0};
    for (int j = 1; j <= std::min(ctx.k, 4); ++j) {
        const auto vars = static_cast<std::size_t>(j);
        MultiplicitySeries h = MultiplicitySeries::unit(Partition{}, vars, ctx.bound);
        for (int step = 0; step < j; ++step) {
            h = young_derive(h);
        }
        for (const auto &mu : partitions_up_to(ctx.bound, j)) {
            out.reports.push_back({"weyl", "Y^" + std::to_string(j) + "(1) at " + mu.to_string(),
                                   weyl_dimension(mu, j), h.multiplicity(mu)});
        }
    }
    return out;
}

CheckResult check_hook_sum(Context &ctx)
{
    CheckResult out{"hook_sum", "sum of S_(n-1,1) equals 1 + (t_1+...+t_d - 1) prod 1/(1-t_i)", {}, 0.0};
    for (std::size_t vars : {std::size_t{2}, std::size_t{3}}) {
        TruncatedSeries rhs = TruncatedSeries::variable_sum(vars, ctx.bound);
        rhs += TruncatedSeries::constant(vars, ctx.bound, -1);
        rhs = times_geometric(rhs);
        rhs += TruncatedSeries::constant(vars, ctx.bound, 1);
        out.reports.push_back(identity_report("hook_sum", degree_subject(vars, ctx.bound),
                                              count_differences(hook_sum(vars, ctx.bound), rhs)));
    }
    return out;
}

CheckResult check_hilbert(Context &ctx)
{
    CheckResult out{"hilbert", "binomial sum = telescoped quotient = proper-polynomial product", {}, 0.0};
    const std::size_t vars = std::min<std::size_t>(ctx.d, 3);
    const TruncatedSeries binomial_form = hilbert_series_binomial(ctx.k, vars, ctx.bound);
    out.reports.push_back(identity_report("hilbert", "telescoped, " + degree_subject(vars, ctx.bound),
                                          count_differences(binomial_form,
                                                            hilbert_series_telescoped(ctx.k, vars, ctx.bound))));
    out.reports.push_back(identity_report("hilbert", "proper oracle, " + degree_subject(vars, ctx.bound),
                                          count_differences(binomial_form,
                                                            hilbert_series_proper_oracle(ctx.k, vars, ctx.bound))));
    return out;
}

CheckResult check_recurrence(Context &ctx)
{
    CheckResult out{"recurrence", "H(U_k) = H(U_1) + H(U_{k-1}) + (t_1+...+t_d - 1) H(U_1) H(U_{k-1})", {}, 0.0};
    const std::size_t vars = std::min<std::size_t>(ctx.d, 3);
    out.reports.push_back(identity_report("recurrence", degree_subject(vars, ctx.bound),
                                          formanek_recurrence_check(ctx.k, vars, ctx.bound) ? 0 : 1));
    return out;
}

CheckResult check_berele(Context &ctx)
{
    CheckResult out{"berele", "f * prod(t_i - t_j) = sum_sigma sign t_sigma^delta h(t_sigma) for f = H(U_k), h = M(U_k)",
                    {}, 0.0};
    for (std::size_t vars = 1; vars <= ctx.d; ++vars) {
        const int staircase = static_cast<int>(vars * (vars - 1) / 2);
        const int range = ctx.bound - staircase;
        if (range < 2) {
            break;
        }
        const TruncatedSeries f = hilbert_series_Uk(ctx.k, vars, ctx.bound);
        const MultiplicitySeries h = multiplicity_series_Uk(ctx.k, vars, range);
        out.reports.push_back(identity_report(
            "berele", "d=" + std::to_string(vars) + ", multiplicities of weight <= " + std::to_string(range),
            berele_verify(f, h) ? 0 : 1));
    }
    return out;
}

CheckResult check_closed(Context &ctx)
{
    CheckResult out{"closed", "computed m_lambda(U_k) equals the closed form", {}, 0.0};
    const MultiplicitySeries &m = ctx.current();
    for (const auto &lambda : partitions_up_to(ctx.bound, static_cast<int>(ctx.d))) {
        Integer expected = ctx.k == 1 ? m_U1_closed(lambda) : ctx.k == 2 ? m_U2_closed(lambda) : m_U3_closed(lambda);
        out.reports.push_back({"closed", lambda.to_string(), std::move(expected), m.multiplicity(lambda)});
    }
    return out;
}

CheckResult check_closed_v(Context &ctx)
{
    CheckResult out{"closed_v", "M'(U_k) - M'(U_{k-1}) equals the rational function in v-variables", {}, 0.0};
    const MultiplicitySeries closed = from_v_variables(
        ctx.k == 2 ? m_U2_difference_v_closed(ctx.bound) : m_U3_difference_v_closed(ctx.bound), ctx.bound);
    const MultiplicitySeries &current = ctx.current();
    const MultiplicitySeries &previous = ctx.previous();
    for (const auto &lambda : partitions_up_to(ctx.bound, static_cast<int>(ctx.d))) {
        out.reports.push_back({"closed_v", lambda.to_string(), closed.multiplicity(lambda),
                               current.multiplicity(lambda) - previous.multiplicity(lambda)});
    }
    return out;
}

CheckResult check_maximal(Context &ctx)
{
    CheckResult out{"maximal", "m_lambda(U_k) = d_tail * dim W_k(lambda_1..lambda_k) when the tail has weight k-1",
                    {}, 0.0};
    const MultiplicitySeries &m = ctx.current();
    for (const auto &lambda : partitions_up_to(ctx.bound, static_cast<int>(ctx.d))) {
        if (tail_weight(lambda, ctx.k) == ctx.k - 1) {
            out.reports.push_back({"maximal", lambda.to_string(), m_maximal_closed(lambda, ctx.k),
                                   m.multiplicity(lambda)});
        }
    }
    return out;
}

CheckResult check_support(Context &ctx)
{
    CheckResult out{"support", "m_lambda(U_k) = 0 outside <= 2k-1 parts with tail weight <= k-1", {}, 0.0};
    // One variable beyond 2k - 1 so the part-count bound is exercised too.
    const std::size_t vars = std::min(std::max(ctx.d, complete_variable_count(ctx.k) + 1), max_variables);
    const MultiplicitySeries wide = vars == ctx.d ? ctx.current() : multiplicity_series_Uk(ctx.k, vars, ctx.bound);
    const MultiplicitySeries &m = wide;
    for (const auto &lambda : partitions_up_to(ctx.bound, static_cast<int>(vars))) {
        if (!support_predicate(lambda, ctx.k)) {
            out.reports.push_back({"support", lambda.to_string(), 0, m.multiplicity(lambda)});
        }
    }
    return out;
}

CheckResult check_monotone(Context &ctx)
{
    CheckResult out{"monotone", "m_lambda(U_k) >= m_lambda(U_{k-1})", {}, 0.0};
    const MultiplicitySeries &current = ctx.current();
    const MultiplicitySeries &previous = ctx.previous();
    std::size_t violations = 0;
    for (const auto &lambda : partitions_up_to(ctx.bound, static_cast<int>(ctx.d))) {
        violations += current.multiplicity(lambda) < previous.multiplicity(lambda) ? 1 : 0;
    }
    out.reports.push_back(identity_report("monotone", degree_subject(ctx.d, ctx.bound), violations));
    return out;
}

CheckResult check_colength(Context &ctx)
{
    CheckResult out{"colength", "cl_n(U_k) equals the closed rational form", {}, 0.0};
    const TruncatedSeries computed = ctx.d >= complete_variable_count(ctx.k)
                                         ? evaluate_diagonal(ctx.current().series())
                                         : colength_series(ctx.k, ctx.bound);
    const TruncatedSeries closed = colength_closed(ctx.k, ctx.bound);
    for (int n = 0; n <= ctx.bound; ++n) {
        const ExponentVector e{n};
        out.reports.push_back({"colength", "cl_" + std::to_string(n), closed.coefficient(e), computed.coefficient(e)});
    }
    return out;
}

using CheckFn = CheckResult (*)(Context &);

const std::map<std::string, CheckFn> &registry()
{
    static const std::map<std::string, CheckFn> checks = {
        {"weyl", check_weyl},   {"hook_sum", check_hook_sum}, {"hilbert", check_hilbert},
        {"recurrence", check_recurrence}, {"berele", check_berele}, {"closed", check_closed},
        {"closed_v", check_closed_v}, {"maximal", check_maximal}, {"support", check_support},
        {"monotone", check_monotone}, {"colength", check_colength},
    };
    return checks;
}

} // namespace

bool CheckResult::passed() const
{
    return failures() == 0;
}

std::size_t CheckResult::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const ClosedFormReport &r) { return !r.passed(); }));
}

std::size_t VerificationReport::passed_count() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed(); }));
}

std::string VerificationReport::summary() const
{
    const std::size_t passed = passed_count();
    return std::string(passed == checks.size() ? "PASS " : "FAIL ") + std::to_string(passed) + "/"
           + std::to_string(checks.size());
}

const std::vector<std::string> &all_check_names()
{
    static const std::vector<std::string> names = {"weyl", "hook_sum", "hilbert", "recurrence",
                                                   "berele", "closed",  "closed_v", "maximal",
                                                   "support", "monotone", "colength"};
    return names;
}

std::vector<std::string> applicable_checks(int k)
{
    std::vector<std::string> out;
    for (const auto &name : all_check_names()) {
        if ((name == "recurrence" || name == "monotone") && k < 2) {
            continue;
        }
        if (name == "closed" && k > 3) {
            continue;
        }
        if (name == "closed_v" && (k < 2 || k > 3)) {
            continue;
        }
        if (name == "colength" && k > 4) {
            continue;
        }
        out.push_back(name);
    }
    return out;
}

VerificationReport run_verification(int k, std::size_t d, int degree_bound, const std::vector<std::string> &checks,
                                    const std::function<void(const std::string &)> &progress)
{
    const std::vector<std::string> applicable = applicable_checks(k);
    std::vector<std::string> selected;
    if (checks.empty()) {
        selected = applicable;
    } else {
        for (const auto &name : checks) {
            if (!registry().contains(name)) {
                throw std::invalid_argument("unknown check '" + name + "'");
            }
            if (std::find(applicable.begin(), applicable.end(), name) == applicable.end()) {
                throw std::invalid_argument("check '" + name + "' does not apply to k = " + std::to_string(k));
            }
        }
        // Keep the canonical order regardless of how the list was given.
        for (const auto &name : applicable) {
            if (std::find(checks.begin(), checks.end(), name) != checks.end()) {
                selected.push_back(name);
            }
        }
    }

    VerificationReport report{k, d, degree_bound, {}};
    Context ctx(k, d, degree_bound);
    for (const auto &name : selected) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult result = registry().at(name)(ctx);
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (progress) {
            std::ostringstream line;
            line << (result.passed() ? "PASS " : "FAIL ") << name << " (" << result.reports.size()
                 << " comparisons, " << result.seconds << " s)";
            progress(line.str());
        }
        report.checks.push_back(std::move(result));
    }
    return report;
}

std::string render_verification(const VerificationReport &report, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::json: {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto &check : report.checks) {
            nlohmann::json reports = nlohmann::json::array();
            for (const auto &r : check.reports) {
                reports.push_back({{"check", r.check},
                                   {"subject", r.subject},
                                   {"expected", integer_to_json(r.expected)},
                                   {"computed", integer_to_json(r.computed)},
                                   {"pass", r.passed()}});
            }
            checks.push_back({{"name", check.name},
                              {"description", check.description},
                              {"passed", check.passed()},
                              {"reports", std::move(reports)}});
        }
        nlohmann::json doc = {{"k", report.k},
                              {"d", report.d},
                              {"degree_bound", report.degree_bound},
                              {"checks", std::move(checks)},
                              {"summary", report.summary()}};
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "check,subject,expected,computed,pass\n";
        for (const auto &check : report.checks) {
            for (const auto &r : check.reports) {
                out << r.check << ",\"" << r.subject << "\"," << r.expected << ',' << r.computed << ','
                    << (r.passed() ? "true" : "false") << '\n';
            }
        }
        break;
    case Format::text:
        out << "# verification of U_" << report.k << ": d=" << report.d << " degree_bound=" << report.degree_bound
            << '\n';
        for (const auto &check : report.checks) {
            out << (check.passed() ? "PASS " : "FAIL ") << check.name << ": " << check.description << " ("
                << check.reports.size() << " comparisons)\n";
            std::size_t listed = 0;
            for (const auto &r : check.reports) {
                if (!r.passed() && listed++ < max_listed_failures) {
                    out << "    " << r.subject << ": expected " << r.expected << ", computed " << r.computed << '\n';
                }
            }
        }
        out << report.summary() << '\n';
        break;
    }
    return out.str();
}

} // namespace utcochar::cli
