#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "verify.hpp"

namespace utcochar::cli
{

namespace
{

class Stopwatch
{
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

private:
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

void validate(const RunConfig &config)
{
    if (config.k < 1) {
        throw std::invalid_argument("--k must be at least 1");
    }
    if (config.variables() < 1 || config.variables() > max_variables) {
        throw std::invalid_argument("--d must lie in [1, " + std::to_string(max_variables) + "]");
    }
    if (config.degree_bound() < 0 || config.degree_bound() > max_exponent) {
        throw std::invalid_argument("--max-degree must lie in [0, " + std::to_string(max_exponent)
                                    + "]");
    }
}

std::string cmd_multiplicities(const RunConfig &config, std::ostream &err)
{
    Stopwatch clock;
    const MultiplicitySeries series = multiplicity_series_Uk(config.k, config.variables(), config.degree_bound());
    const MultiplicityTable table = to_table(config.k, series);
    err << "multiplicities: " << table.entries.size() << " partitions in " << clock.seconds() << " s\n";
    return render_multiplicities(table, series, config.format, config.v_form);
}

std::string cmd_colength(const RunConfig &config, std::ostream &err)
{
    Stopwatch clock;
    const std::size_t d = config.variables();
    const int bound = config.degree_bound();
    const TruncatedSeries colength = evaluate_diagonal(multiplicity_series_Uk(config.k, d, bound).series());
    std::optional<TruncatedSeries> closed;
    if (config.k <= 4 && d >= complete_variable_count(config.k)) {
        closed = colength_closed(config.k, bound);
    } else if (config.k <= 4) {
        err << "colength: d < 2k-1, closed form omitted\n";
    }
    err << "colength: " << clock.seconds() << " s\n";
    return render_colength(config.k, d, colength, closed ? &*closed : nullptr, config.format);
}

std::string cmd_hilbert(const RunConfig &config, std::ostream &err)
{
    Stopwatch clock;
    const std::size_t d = config.variables();
    const int bound = config.degree_bound();
    const TruncatedSeries binomial_form = hilbert_series_binomial(config.k, d, bound);
    const bool identical = binomial_form == hilbert_series_telescoped(config.k, d, bound);
    err << "hilbert: " << binomial_form.terms().size() << " terms in " << clock.seconds() << " s\n";
    return render_hilbert(config.k, binomial_form, identical, config.format);
}

std::string cmd_verify(const RunConfig &config, std::ostream &err, std::size_t &failures)
{
    const VerificationReport report = run_verification(config.k, config.variables(), config.degree_bound(),
                                                       config.checks,
                                                       [&err](const std::string &line) { err << line << '\n'; });
    failures = report.checks.size() - report.passed_count();
    return render_verification(report, config.format);
}

} // namespace

std::size_t RunConfig::variables() const
{
    return d.value_or(complete_variable_count(k));
}

int RunConfig::degree_bound() const
{
    return max_degree.value_or(k <= 3 ? 10 : 8);
}

int verification_exit_code(std::size_t failures)
{
    if (failures == 0) {
        return exit_ok;
    }
    return static_cast<int>(std::min<std::size_t>(failures + 1, exit_failure_cap));
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Cocharacters of upper triangular matrix algebras", "utcochar"};
    app.require_subcommand(1);

    RunConfig config;
    const std::map<std::string, Format> formats = {{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

    const auto add_common = [&](CLI::App *sub) {
        sub->add_option("--k", config.k, "size of the matrix algebra U_k")->required();
        sub->add_option("--d", config.d, "number of variables (default 2k-1)");
        sub->add_option("--max-degree", config.max_degree, "total degree bound N (default 10, or 8 for k >= 4)");
        sub->add_option("--format", config.format, "text, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", config.out_path, "write results to this file instead of standard output");
    };

    CLI::App *multiplicities = app.add_subcommand("multiplicities", "multiplicity table m_lambda(U_k)");
    add_common(multiplicities);
    multiplicities->add_flag("--v-form", config.v_form, "also list the series in v_i = t_1...t_i");

    CLI::App *colength = app.add_subcommand("colength", "colength sequence cl_n(U_k)");
    add_common(colength);

    CLI::App *hilbert = app.add_subcommand("hilbert", "Hilbert series of the relatively free algebra F_d(U_k)");
    add_common(hilbert);

    CLI::App *verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify);
    verify->add_option("--checks", config.checks, "comma-separated subset of checks")
        ->delimiter(',')
        ->check(CLI::IsMember(all_check_names()));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    config.command = app.get_subcommands().front()->get_name();

    std::string rendered;
    std::size_t failures = 0;
    try {
        validate(config);
        if (config.command == "multiplicities") {
            rendered = cmd_multiplicities(config, err);
        } else if (config.command == "colength") {
            rendered = cmd_colength(config, err);
        } else if (config.command == "hilbert") {
            rendered = cmd_hilbert(config, err);
        } else {
            rendered = cmd_verify(config, err, failures);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (config.out_path.empty()) {
        out << rendered;
    } else {
        std::ofstream file(config.out_path, std::ios::binary);
        if (!file || !(file << rendered)) {
            err << "error: cannot write " << config.out_path << '\n';
            return exit_usage;
        }
    }
    return verification_exit_code(failures);
}

} // namespace utcochar::cli
