#include "ca/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ca/errors.hpp"

namespace ca {

Json rational_to_json(const Rational& r) {
    return r.str();
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError("expected a rational as \"n/d\" string");
    return Rational::from_string(j.get<std::string>());
}

Json poly_to_json(const ParamPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json vars = Json::object();
        for (const auto& [v, e] : m.factors) vars[v.name()] = e;
        terms.push_back({{"vars", vars}, {"coeff", rational_to_json(c)}});
    }
    return terms;
}

Var var_from_name(const std::string& name) {
    if (name == "hbar") return Var::hbar();
    if (name == "sigma") return Var::sigma();
    auto paren = name.find('(');
    if (paren == std::string::npos || name.back() != ')')
        throw ParseError("unknown variable name: " + name);
    std::string head = name.substr(0, paren);
    std::string args = name.substr(paren + 1, name.size() - paren - 2);
    std::vector<int> idx;
    std::istringstream is(args);
    std::string piece;
    while (std::getline(is, piece, ',')) idx.push_back(std::stoi(piece));
    if (head == "lambda" && idx.size() == 1) return Var::lambda(idx[0]);
    if (head == "t" && idx.size() == 4) return Var::t(idx[0], idx[1], idx[2], idx[3]);
    if (head == "mu" && idx.size() == 2) return Var::mu(idx[0], idx[1]);
    throw ParseError("unknown variable name: " + name);
}

ParamPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a polynomial as an array of terms");
    ParamPoly p;
    for (const auto& term : j) {
        Monomial m;
        for (const auto& [name, exp] : term.at("vars").items())
            m.factors.emplace_back(var_from_name(name), exp.get<int>());
        std::sort(m.factors.begin(), m.factors.end());
        p.add_term(m, rational_from_json(term.at("coeff")));
    }
    return p;
}

Json matrix_to_json(const PPolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

PPolyMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a matrix as an array of rows");
    std::size_t rows = j.size(), cols = j.at(0).size();
    PPolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw ParseError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = poly_from_json(j.at(i).at(c));
    }
    return m;
}

Json report_to_json(const Report& r) {
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json e = {{"id", c.id}, {"status", status_name(c.status)}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        cases.push_back(std::move(e));
    }
    return Json{{"suite", r.suite},
                {"cases", cases},
                {"summary",
                 {{"passed", r.passed()}, {"failed", r.failed()}, {"skipped", r.skipped()}}}};
}

Json fd_to_json(const FDAlgebra& a) {
    Json unit = Json::array();
    for (const auto& c : a.unit) unit.push_back(rational_to_json(c));
    Json table = Json::array();
    for (const auto& row : a.table) {
        Json jrow = Json::array();
        for (const auto& entry : row) {
            Json cell = Json::array();
            for (const auto& c : entry) cell.push_back(rational_to_json(c));
            jrow.push_back(std::move(cell));
        }
        table.push_back(std::move(jrow));
    }
    return Json{{"dim", a.dim}, {"unit", unit}, {"table", table}};
}

FDAlgebra fd_from_json(const Json& j) {
    FDAlgebra a;
    a.dim = j.at("dim").get<std::size_t>();
    for (const auto& c : j.at("unit")) a.unit.push_back(rational_from_json(c));
    for (const auto& jrow : j.at("table")) {
        std::vector<RatVector> row;
        for (const auto& cell : jrow) {
            RatVector entry;
            for (const auto& c : cell) entry.push_back(rational_from_json(c));
            row.push_back(std::move(entry));
        }
        a.table.push_back(std::move(row));
    }
    a.validate();
    return a;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_json(os.str());
}

}  // namespace ca
