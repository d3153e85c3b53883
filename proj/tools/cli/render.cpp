#include "render.hpp"

#include <sstream>
#include <stdexcept>

namespace utcochar::cli
{

namespace
{

std::optional<Integer> closed_multiplicity(int k, const Partition &lambda)
{
    switch (k) {
    case 1:
        return m_U1_closed(lambda);
    case 2:
        return m_U2_closed(lambda);
    case 3:
        return m_U3_closed(lambda);
    default:
        return std::nullopt;
    }
}

nlohmann::json v_terms_json(const MultiplicitySeries &series)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto &[v, c] : to_v_variables(series).sorted_terms()) {
        out.push_back({{"v_exponents", v.to_vector()}, {"coeff", integer_to_json(c)}});
    }
    return out;
}

std::string v_monomial_text(const ExponentVector &v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += "v" + std::to_string(i + 1);
        if (v[i] > 1) {
            out += '^' + std::to_string(v[i]);
        }
    }
    return out.empty() ? "1" : out;
}

Integer coefficient_at(const TruncatedSeries &univariate, int n)
{
    return univariate.coefficient(ExponentVector{n});
}

} // namespace

nlohmann::json integer_to_json(const Integer &value)
{
    if (const auto small = to_int64(value)) {
        return *small;
    }
    return value.str();
}

Integer integer_from_json(const nlohmann::json &value)
{
    if (value.is_number_integer()) {
        return Integer(value.get<std::int64_t>());
    }
    if (value.is_string()) {
        return Integer(value.get<std::string>());
    }
    throw std::invalid_argument("expected an integer or a decimal string");
}

nlohmann::json partition_to_json(const Partition &lambda)
{
    return std::vector<int>(lambda.parts().begin(), lambda.parts().end());
}

Partition partition_from_json(const nlohmann::json &value)
{
    return Partition(value.get<std::vector<int>>());
}

nlohmann::json multiplicity_series_to_json(const MultiplicitySeries &series)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[lambda, c] : series.entries()) {
        terms.push_back({{"partition", partition_to_json(lambda)}, {"coeff", integer_to_json(c)}});
    }
    return {{"d", series.var_count()},
            {"degree_bound", series.degree_bound()},
            {"effective_bound", series.effective_bound()},
            {"terms", std::move(terms)}};
}

MultiplicitySeries multiplicity_series_from_json(const nlohmann::json &value)
{
    const auto d = value.at("d").get<std::size_t>();
    TruncatedSeries series(d, value.at("degree_bound").get<int>());
    for (const auto &term : value.at("terms")) {
        series.add_term(exponents_of(partition_from_json(term.at("partition")), d),
                        integer_from_json(term.at("coeff")));
    }
    return MultiplicitySeries(std::move(series), value.at("effective_bound").get<int>());
}

std::string partition_to_csv(const Partition &lambda)
{
    std::string out;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(lambda[i]);
    }
    return out;
}

std::string render_multiplicities(const MultiplicityTable &table, const MultiplicitySeries &series, Format format,
                                  bool v_form)
{
    const bool has_closed = closed_multiplicity(table.k, Partition{}).has_value();
    std::ostringstream out;
    switch (format) {
    case Format::json: {
        nlohmann::json doc = multiplicity_series_to_json(series);
        doc["k"] = table.k;
        doc["complete"] = table.complete();
        if (v_form) {
            doc["v_terms"] = v_terms_json(series);
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "partition,weight,multiplicity" << (has_closed ? ",closed_form" : "") << '\n';
        for (const auto &[lambda, m] : table.entries) {
            out << partition_to_csv(lambda) << ',' << lambda.weight() << ',' << m;
            if (has_closed) {
                out << ',' << *closed_multiplicity(table.k, lambda);
            }
            out << '\n';
        }
        break;
    case Format::text:
        out << "# multiplicities of U_" << table.k << ": d=" << table.d << " degree_bound=" << table.degree_bound
            << " effective_bound=" << table.effective_bound << " complete=" << (table.complete() ? "yes" : "no")
            << '\n';
        for (const auto &[lambda, m] : table.entries) {
            out << lambda.to_string() << ": " << m << '\n';
        }
        if (v_form) {
            out << "# v-variables (v_i = t_1...t_i)\n";
            for (const auto &[v, c] : to_v_variables(series).sorted_terms()) {
                out << v_monomial_text(v) << ": " << c << '\n';
            }
        }
        break;
    }
    return out.str();
}

std::string render_colength(int k, std::size_t d, const TruncatedSeries &colength, const TruncatedSeries *closed,
                            Format format)
{
    const int bound = colength.degree_bound();
    std::ostringstream out;
    switch (format) {
    case Format::json: {
        nlohmann::json values = nlohmann::json::array();
        nlohmann::json oracle = closed ? nlohmann::json::array() : nlohmann::json(nullptr);
        for (int n = 0; n <= bound; ++n) {
            values.push_back(integer_to_json(coefficient_at(colength, n)));
            if (closed) {
                oracle.push_back(integer_to_json(coefficient_at(*closed, n)));
            }
        }
        nlohmann::json doc = {{"k", k},
                              {"d", d},
                              {"degree_bound", bound},
                              {"colength", std::move(values)},
                              {"closed_form", std::move(oracle)}};
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "n,colength" << (closed ? ",closed_form,delta" : "") << '\n';
        for (int n = 0; n <= bound; ++n) {
            const Integer value = coefficient_at(colength, n);
            out << n << ',' << value;
            if (closed) {
                const Integer expected = coefficient_at(*closed, n);
                out << ',' << expected << ',' << value - expected;
            }
            out << '\n';
        }
        break;
    case Format::text:
        out << "# colength of U_" << k << ": d=" << d << " degree_bound=" << bound << '\n';
        for (int n = 0; n <= bound; ++n) {
            const Integer value = coefficient_at(colength, n);
            out << "cl_" << n << " = " << value;
            if (closed) {
                const Integer expected = coefficient_at(*closed, n);
                out << "  (closed form " << expected << ", delta " << value - expected << ')';
            }
            out << '\n';
        }
        break;
    }
    return out.str();
}

std::string render_hilbert(int k, const TruncatedSeries &hilbert, bool forms_identical, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::json: {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto &[e, c] : hilbert.sorted_terms()) {
            terms.push_back({{"exponents", e.to_vector()}, {"coeff", integer_to_json(c)}});
        }
        nlohmann::json doc = {{"k", k},
                              {"d", hilbert.var_count()},
                              {"degree_bound", hilbert.degree_bound()},
                              {"closed_forms_identical", forms_identical},
                              {"terms", std::move(terms)}};
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        for (std::size_t i = 0; i < hilbert.var_count(); ++i) {
            out << 'e' << i + 1 << ',';
        }
        out << "coeff\n";
        for (const auto &[e, c] : hilbert.sorted_terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                out << e[i] << ',';
            }
            out << c << '\n';
        }
        break;
    case Format::text:
        out << "# hilbert series of F_d(U_" << k << "): d=" << hilbert.var_count()
            << " degree_bound=" << hilbert.degree_bound()
            << " closed forms identical: " << (forms_identical ? "yes" : "no") << '\n';
        out << dump(hilbert);
        break;
    }
    return out.str();
}

} // namespace utcochar::cli
