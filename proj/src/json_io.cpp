#include "lrw/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lrw {

namespace {

std::vector<int> parse_tuple_key(const std::string& key) {
    std::vector<int> out;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

std::string tuple_key(const std::vector<int>& tuple, int base = 1) {
    std::ostringstream os;
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i)
            os << ",";
        os << tuple[i] + base;
    }
    return os.str();
}

void reject_unknown_keys(const Json& j, const std::vector<std::string>& allowed,
                         const std::string& what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const auto& k : allowed)
            if (it.key() == k)
                ok = true;
        if (!ok)
            throw InputError(what + ": unknown key '" + it.key() + "'");
    }
}

}  // namespace

Json presentation_json(const Presentation& pres) {
    Json j;
    j["variables"] = Json::array();
    for (const auto& v : pres->context()->vars())
        j["variables"].push_back(Json{{"name", v.name}, {"invertible", v.invertible}});
    j["rank_L"] = pres->rank();
    Json anchor = Json::array();
    for (int i = 0; i < pres->rank(); ++i) {
        Json row = Json::array();
        for (int m = 0; m < pres->context()->num_vars(); ++m)
            row.push_back(pres->anchor_coeff(i, m).str());
        anchor.push_back(row);
    }
    j["anchor"] = anchor;
    Json bracket = Json::object();
    for (int i = 0; i < pres->rank(); ++i)
        for (int k = i + 1; k < pres->rank(); ++k) {
            LElement b = pres->bracket_basis(i, k);
            if (pres->is_zero(b))
                continue;
            Json coeffs = Json::array();
            for (const auto& c : b)
                coeffs.push_back(c.str());
            bracket[tuple_key({i, k})] = coeffs;
        }
    j["bracket"] = bracket;
    return j;
}

Presentation presentation_from_json(const Json& j) {
    try {
        reject_unknown_keys(j, {"variables", "rank_L", "anchor", "bracket"}, "presentation");
        std::vector<Variable> vars;
        for (const auto& v : j.at("variables")) {
            reject_unknown_keys(v, {"name", "invertible"}, "variable");
            vars.push_back({v.at("name").get<std::string>(), v.at("invertible").get<bool>()});
        }
        Context ctx = RingContext::make(std::move(vars));
        int l = j.at("rank_L").get<int>();
        const Json& anchor = j.at("anchor");
        if (static_cast<int>(anchor.size()) != l)
            throw InputError("presentation: anchor must have rank_L rows");
        std::vector<std::vector<LaurentPoly>> rows;
        for (const auto& row : anchor) {
            if (static_cast<int>(row.size()) != ctx->num_vars())
                throw InputError("presentation: anchor row length must equal variable count");
            std::vector<LaurentPoly> r;
            for (const auto& cell : row)
                r.push_back(LaurentPoly::parse(ctx, cell.get<std::string>()));
            rows.push_back(std::move(r));
        }
        std::map<std::pair<int, int>, LElement> brackets;
        if (j.contains("bracket"))
            for (auto it = j.at("bracket").begin(); it != j.at("bracket").end(); ++it) {
                std::vector<int> idx = parse_tuple_key(it.key());
                if (idx.size() != 2)
                    throw InputError("presentation: bracket key must be 'i,j'");
                LElement val;
                for (const auto& cell : it.value())
                    val.push_back(LaurentPoly::parse(ctx, cell.get<std::string>()));
                brackets.emplace(std::make_pair(idx[0] - 1, idx[1] - 1), std::move(val));
            }
        return std::make_shared<const LiePresentation>(ctx, l, std::move(rows),
                                                       std::move(brackets));
    } catch (const Json::exception& e) {
        throw InputError(std::string("presentation: ") + e.what());
    }
}

Json cochain_json(const Cochain& w) {
    Json j;
    j["degree"] = w.degree();
    Json values = Json::object();
    for (const auto& [tuple, poly] : w.values())
        values[tuple_key(tuple)] = poly.str();
    j["values"] = values;
    return j;
}

Cochain cochain_from_json(const Presentation& pres, const Json& j) {
    try {
        reject_unknown_keys(j, {"degree", "values"}, "cochain");
        Cochain w(pres, j.at("degree").get<int>());
        if (j.contains("values"))
            for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
                std::vector<int> tuple =
                    it.key().empty() ? std::vector<int>{} : parse_tuple_key(it.key());
                for (int& v : tuple)
                    v -= 1;
                w.set_value(tuple, LaurentPoly::parse(pres->context(), it.value().get<std::string>()));
            }
        return w;
    } catch (const Json::exception& e) {
        throw InputError(std::string("cochain: ") + e.what());
    }
}

Json even_poly_json(const EvenClassPolynomial& e) {
    Json j = Json::object();
    for (int m = 0; m < e.num_components(); ++m)
        j[std::to_string(2 * m)] = cochain_json(e.component(m))["values"];
    return j;
}

Word word_from_json(const Context& ctx, const Json& j) {
    try {
        Word word;
        for (const auto& tok : j) {
            if (tok.contains("coef"))
                word.push_back(
                    WordToken::coefficient(LaurentPoly::parse(ctx, tok.at("coef").get<std::string>())));
            else if (tok.contains("gen"))
                word.push_back(WordToken::generator(tok.at("gen").get<int>() - 1));
            else if (tok.contains("z"))
                word.push_back(WordToken::z());
            else
                throw InputError("word: token must be one of coef|gen|z");
        }
        return word;
    } catch (const Json::exception& e) {
        throw InputError(std::string("word: ") + e.what());
    }
}

Json uelement_json(const UElement& u) {
    Json j = Json::object();
    for (const auto& [m, c] : u.terms()) {
        std::ostringstream key;
        for (size_t i = 0; i < m.p.size(); ++i) {
            if (i)
                key << ",";
            key << m.p[i];
        }
        if (m.z_exp != 0)
            key << "|z^" << m.z_exp;
        j[key.str()] = c.str();
    }
    return j;
}

Json connection_json(const Connection& conn) {
    Json j;
    j["rank"] = conn.rank;
    Json omega = Json::array();
    for (const auto& m : conn.omega) {
        Json mat = Json::array();
        for (int r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < m.cols(); ++c)
                row.push_back(m.at(r, c).str());
            mat.push_back(row);
        }
        omega.push_back(mat);
    }
    j["omega"] = omega;
    return j;
}

Connection connection_from_json(const Presentation& pres, const Json& j) {
    try {
        reject_unknown_keys(j, {"rank", "omega"}, "connection");
        int rank = j.at("rank").get<int>();
        Connection conn(pres, rank);
        const Json& omega = j.at("omega");
        if (static_cast<int>(omega.size()) != pres->rank())
            throw InputError("connection: need one matrix per basis direction");
        for (int i = 0; i < pres->rank(); ++i) {
            const Json& mat = omega.at(i);
            if (static_cast<int>(mat.size()) != rank)
                throw InputError("connection: matrix row count must equal rank");
            for (int r = 0; r < rank; ++r) {
                const Json& row = mat.at(r);
                if (static_cast<int>(row.size()) != rank)
                    throw InputError("connection: matrix must be square of size rank");
                for (int c = 0; c < rank; ++c)
                    conn.omega[i].at(r, c) =
                        LaurentPoly::parse(pres->context(), row.at(c).get<std::string>());
            }
        }
        return conn;
    } catch (const Json::exception& e) {
        throw InputError(std::string("connection: ") + e.what());
    }
}

Json axiom_report_json(const AxiomReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["all_passed"] = r.all_passed();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        if (!c.detail.empty())
            e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

Json confluence_report_json(const ConfluenceReport& r) {
    Json j;
    j["resolvable"] = r.resolvable;
    Json overlaps = Json::array();
    for (const auto& o : r.overlaps) {
        Json e;
        e["kind"] = o.kind;
        e["generators"] = o.generators;
        if (!o.coefficient.empty())
            e["coefficient"] = o.coefficient;
        e["resolved"] = o.resolved;
        if (!o.resolved)
            e["discrepancy"] = uelement_json(o.discrepancy);
        overlaps.push_back(e);
    }
    j["overlaps"] = overlaps;
    return j;
}

Json cohomology_window_json(const CohomologyWindow& w) {
    Json j;
    j["p"] = w.p;
    j["D"] = w.D;
    j["dimension"] = w.dimension;
    Json reps = Json::array();
    for (const auto& rep : w.representatives)
        reps.push_back(cochain_json(rep));
    j["representatives"] = reps;
    return j;
}

Json curvature_form_json(const CurvatureForm& f) {
    Json j = Json::object();
    for (const auto& [key, m] : f.value) {
        Json mat = Json::array();
        for (int r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < m.cols(); ++c)
                row.push_back(m.at(r, c).str());
            mat.push_back(row);
        }
        j[tuple_key({key.first, key.second})] = mat;
    }
    return j;
}

Json kclass_json(const KClass& u) {
    Json j = Json::array();
    for (const auto& [atom, mult] : u.atoms()) {
        Json e;
        e["rank"] = atom.rank;
        e["c1"] = cochain_json(atom.c1_rep);
        e["scalar_type"] = atom.scalar_type;
        e["label"] = atom.label;
        e["mult"] = mult;
        j.push_back(e);
    }
    return j;
}

Json window_module_json(const WindowModule& mod, const WindowCurvatureReport& report) {
    Json j;
    j["k"] = mod.k;
    j["i"] = mod.i;
    j["rank"] = report.rank;
    j["filtration"] = "pbw-window";
    j["filtration_note"] =
        "coordinate projection onto PBW monomials of degree in [k, k+i); a left-ideal "
        "filtration can collapse when the twist takes unit values";
    Json basis = Json::array();
    for (const auto& m : mod.basis) {
        std::ostringstream os;
        for (size_t t = 0; t < m.p.size(); ++t) {
            if (t)
                os << ",";
            os << m.p[t];
        }
        basis.push_back(os.str());
    }
    j["basis"] = basis;
    j["omega"] = connection_json(mod.connection)["omega"];
    j["curvature_deviation"] = curvature_form_json(report.deviation);
    j["scalar_type"] = report.scalar_type;
    j["routes_agree"] = report.routes_agree;
    j["relation_holds"] = report.relation_holds;
    Json interior = Json::array();
    for (bool b : report.interior)
        interior.push_back(b);
    j["interior"] = interior;
    j["interior_scalar"] = report.interior_scalar;
    return j;
}

Json kernel_sum_json(const KernelSumReport& r) {
    Json j;
    j["eta_minus_one"] = kclass_json(r.eta_minus_one);
    j["rank"] = r.eta_minus_one.total_rank();
    j["total_multiplicity"] = r.eta_minus_one.total_multiplicity();
    j["ch"] = even_poly_json(r.ch);
    j["ch_reduced"] = even_poly_json(r.ch_reduced);
    j["ch_reduced_zero"] = r.ch_reduced_zero;
    j["formally_nonzero"] = r.formally_nonzero;
    j["c1"] = cochain_json(r.c1);
    j["c1_class_zero"] = r.c1_class_zero;
    return j;
}

Json kernel_product_json(const KernelProductReport& r) {
    Json j;
    j["omega"] = kclass_json(r.omega);
    j["c1"] = cochain_json(r.c1);
    j["c1_class_zero"] = r.c1_class_zero;
    j["formally_nontrivial"] = r.formally_nontrivial;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError("cannot parse '" + path + "': " + e.what());
    }
}

}  // namespace lrw
