#ifndef TRIDEND_JSON_IO_HPP
#define TRIDEND_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "graded_seq.hpp"
#include "magnus.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "seqalg.hpp"
#include "series.hpp"

namespace tridend {

using nlohmann::json;

inline Rational rational_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

inline json matrix_to_json(const RatMatrix &m)
{
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) {
            row.push_back(to_string(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// {"dim": d, "entries": [matrix, matrix, ...]}, entries[k] = a(k)
inline MatSeq matseq_from_json(const json &j)
{
    const int dim = j.at("dim").get<int>();
    std::vector<RatMatrix> entries;
    for (const auto &mat : j.at("entries")) {
        RatMatrix m(dim);
        if (static_cast<int>(mat.size()) != dim) {
            throw std::invalid_argument("matrix row count does not match dim");
        }
        for (int i = 0; i < dim; ++i) {
            const auto &row = mat.at(static_cast<std::size_t>(i));
            if (static_cast<int>(row.size()) != dim) {
                throw std::invalid_argument("matrix column count does not match dim");
            }
            for (int k = 0; k < dim; ++k) {
                m(i, k) = rational_from_json(row.at(static_cast<std::size_t>(k)));
            }
        }
        entries.push_back(std::move(m));
    }
    return MatSeq(dim, std::move(entries));
}

inline json matseq_to_json(const MatSeq &a)
{
    json entries = json::array();
    for (int n = 0; n < a.horizon(); ++n) {
        entries.push_back(matrix_to_json(a.at(n)));
    }
    return json{{"dim", a.dim()}, {"entries", std::move(entries)}};
}

// Map from encoded basis element to "p/q", plus scalar and truncation.
template <typename Basis>
json series_to_json(const TriSeries<Basis> &x)
{
    json terms = json::object();
    for (const auto &[e, c] : x.terms()) {
        terms[e.encode()] = to_string(c);
    }
    return json{{"scalar", to_string(x.scalar())},
                {"truncation", x.truncation()},
                {"terms", std::move(terms)}};
}

inline std::string to_string(DescentOrientation v)
{
    return v == DescentOrientation::AsPrinted ? "as-printed" : "mirrored";
}

inline std::string to_string(SignRule v)
{
    return v == SignRule::DescentExponent ? "descent-exponent" : "complement-exponent";
}

inline std::string to_string(DiagOrientation v)
{
    return v == DiagOrientation::ValueAligned ? "value-aligned" : "inverted";
}

inline std::string to_string(LevelOrientation v)
{
    return v == LevelOrientation::RootDeepest ? "root-deepest" : "root-top";
}

inline json ledger_to_json(const ConventionLedger &ledger)
{
    return json{{"descent_orientation", to_string(ledger.descent_orientation)},
                {"sign_rule", to_string(ledger.sign_rule)},
                {"diagonal_orientation", to_string(ledger.diag_orientation)},
                {"level_orientation", to_string(ledger.level_orientation)},
                {"frozen", ledger.frozen},
                {"evidence_degree", ledger.evidence_degree}};
}

inline ConventionLedger ledger_from_json(const json &j)
{
    ConventionLedger ledger;
    const auto parse_flag = [&](const std::string &key, const std::string &first,
                                const std::string &second) {
        const auto v = j.at(key).get<std::string>();
        if (v != first && v != second) {
            throw std::invalid_argument("unknown value for " + key + ": " + v);
        }
        return v == first;
    };
    ledger.descent_orientation = parse_flag("descent_orientation", "as-printed", "mirrored")
                                     ? DescentOrientation::AsPrinted
                                     : DescentOrientation::Mirrored;
    ledger.sign_rule = parse_flag("sign_rule", "descent-exponent", "complement-exponent")
                           ? SignRule::DescentExponent
                           : SignRule::ComplementExponent;
    ledger.diag_orientation = parse_flag("diagonal_orientation", "value-aligned", "inverted")
                                  ? DiagOrientation::ValueAligned
                                  : DiagOrientation::Inverted;
    ledger.level_orientation = parse_flag("level_orientation", "root-deepest", "root-top")
                                   ? LevelOrientation::RootDeepest
                                   : LevelOrientation::RootTop;
    ledger.frozen = j.at("frozen").get<bool>();
    ledger.evidence_degree = j.value("evidence_degree", 0);
    return ledger;
}

inline json graded_seq_to_json(const GradedSeq &x)
{
    json degrees = json::object();
    for (int n = 1; n <= x.truncation(); ++n) {
        json per_n = json::array();
        for (int N = 0; N < x.horizon(); ++N) {
            per_n.push_back(matrix_to_json(x.degree(n).at(N)));
        }
        degrees[std::to_string(n)] = std::move(per_n);
    }
    return json{{"dim", x.dim()},
                {"horizon", x.horizon()},
                {"truncation", x.truncation()},
                {"scalar", to_string(x.scalar())},
                {"degrees", std::move(degrees)}};
}

} // namespace tridend

#endif
