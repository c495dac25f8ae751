#include "waring/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace waring {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const JsonParseError&) {
        throw;
    } catch (const json::exception& e) {
        throw JsonParseError(std::string(what) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw JsonParseError(std::string(what) + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw JsonParseError(std::string(what) + ": " + e.what());
    } catch (const std::out_of_range& e) {
        throw JsonParseError(std::string(what) + ": " + e.what());
    }
}

void require(bool cond, const std::string& msg)
{
    if (!cond) throw JsonParseError(msg);
}

std::vector<int> to_one_based(const std::vector<int>& v)
{
    std::vector<int> out(v);
    for (auto& x : out) ++x;
    return out;
}

std::vector<int> from_one_based(const json& j, int limit)
{
    std::vector<int> out;
    for (const auto& x : j) {
        int v = x.get<int>() - 1;
        require(v >= 0 && v < limit, "index out of range");
        out.push_back(v);
    }
    return out;
}

}  // namespace

json to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const json& j)
{
    return guarded("rational", [&] {
        if (j.is_number_integer()) return Rational(j.get<long>());
        return parse_rational(j.get<std::string>());
    });
}

json to_json(const FieldElem& x)
{
    json arr = json::array();
    for (const auto& c : x.coeffs()) arr.push_back(c.get_str());
    return arr;
}

FieldElem field_elem_from_json(const json& j, Field field)
{
    return guarded("field element", [&] {
        require(j.is_array() && j.size() == 6, "field element must be an array of 6 rationals");
        std::array<Rational, 6> c;
        for (int i = 0; i < 6; ++i) c[i] = rational_from_json(j[i]);
        return field.from_coeffs(c);
    });
}

json to_json(const SquareMatrix& m)
{
    json rows = json::array();
    for (int r = 0; r < m.n(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.n(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

SquareMatrix matrix_from_json(const json& j, Field field)
{
    return guarded("matrix", [&] {
        require(j.is_array() && !j.empty(), "matrix must be a nonempty array of rows");
        std::vector<std::vector<FieldElem>> rows;
        for (const auto& jr : j) {
            require(jr.is_array() && jr.size() == j.size(), "matrix must be square");
            std::vector<FieldElem> row;
            for (const auto& x : jr) row.push_back(field_elem_from_json(x, field));
            rows.push_back(std::move(row));
        }
        return SquareMatrix::from_rows(field, rows);
    });
}

json to_json(const CubicForm& f)
{
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json mono = json::array();
        for (auto [p, q] : m.pairs(f.n())) mono.push_back({p + 1, q + 1});
        terms.push_back({{"monomial", mono}, {"coeff", to_json(c)}});
    }
    return {{"n", f.n()}, {"terms", terms}};
}

CubicForm cubic_form_from_json(const json& j, Field field)
{
    return guarded("cubic form", [&] {
        const int n = j.at("n").get<int>();
        require(n >= 1, "cubic form needs n >= 1");
        CubicForm f(field, n);
        for (const auto& t : j.at("terms")) {
            const auto& mono = t.at("monomial");
            require(mono.is_array() && mono.size() == 3, "monomial must list three index pairs");
            std::array<std::pair<int, int>, 3> pairs;
            for (int k = 0; k < 3; ++k) pairs[k] = {mono[k].at(0).get<int>() - 1, mono[k].at(1).get<int>() - 1};
            f.add_term(Monomial::from_pairs(n, pairs), field_elem_from_json(t.at("coeff"), field));
        }
        return f;
    });
}

json to_json(const WaringDecomposition& d)
{
    json mats = json::array();
    for (const auto& m : d.matrices) mats.push_back(to_json(m));
    return {{"n", d.n}, {"weight", to_json(d.weight)}, {"tau", to_json(d.tau)}, {"matrices", mats}};
}

WaringDecomposition decomposition_from_json(const json& j)
{
    return guarded("decomposition", [&] {
        WaringDecomposition d;
        d.n = j.at("n").get<int>();
        require(d.n >= 1, "decomposition needs n >= 1");
        d.weight = rational_from_json(j.at("weight"));
        Field f = Field::with_tau(rational_from_json(j.at("tau")));
        d.tau = f.tau();
        for (const auto& jm : j.at("matrices")) {
            SquareMatrix m = matrix_from_json(jm, f);
            require(m.n() == d.n, "decomposition matrix has wrong size");
            d.matrices.push_back(std::move(m));
        }
        return d;
    });
}

json to_json(const VerificationReport& r)
{
    return {{"exact_match", r.exact_match}, {"tau", to_json(r.tau_used)}, {"difference", to_json(r.difference)}};
}

VerificationReport verification_report_from_json(const json& j)
{
    return guarded("verification report", [&] {
        Field f = Field::with_tau(rational_from_json(j.at("tau")));
        return VerificationReport{j.at("exact_match").get<bool>(), cubic_form_from_json(j.at("difference"), f),
                                  f.tau()};
    });
}

json to_json(const SymOp& op)
{
    return {{"matrix", to_json(op.g.rep())}, {"transpose", op.transpose}, {"conjugate", op.conjugate}};
}

SymOp symop_from_json(const json& j, Field field)
{
    return guarded("symmetry op", [&] {
        return SymOp{ProjectiveMatrix(matrix_from_json(j.at("matrix"), field)), j.at("transpose").get<bool>(),
                     j.at("conjugate").get<bool>()};
    });
}

json to_json(const AffineMap& a)
{
    return {{"A", {{a.linear[0][0], a.linear[0][1]}, {a.linear[1][0], a.linear[1][1]}}},
            {"t", {a.translation[0], a.translation[1]}}};
}

AffineMap affine_map_from_json(const json& j)
{
    return guarded("affine map", [&] {
        AffineMap a;
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) a.linear[r][c] = j.at("A").at(r).at(c).get<int>();
            a.translation[r] = j.at("t").at(r).get<int>();
        }
        return a;
    });
}

json to_json(const GroupElement& e)
{
    json j = to_json(e.op);
    j["perm"] = to_one_based(e.induced.perm);
    json scalars = json::array();
    for (const auto& s : e.induced.witnesses) scalars.push_back(to_json(s));
    j["scalars"] = scalars;
    j["first_block_affine"] = nullptr;
    if (e.induced.perm.size() == 18) {
        bool blocks_kept = true;
        for (int i = 0; i < 9; ++i) blocks_kept = blocks_kept && e.induced.perm[i] < 9;
        if (blocks_kept) {
            auto la = label_action(e.induced);
            if (la.blocks[0]) j["first_block_affine"] = to_json(*la.blocks[0]);
        }
    }
    return j;
}

GroupElement group_element_from_json(const json& j, Field field)
{
    return guarded("group element", [&] {
        GroupElement e{symop_from_json(j, field), {}};
        const auto& perm = j.at("perm");
        e.induced.perm = from_one_based(perm, static_cast<int>(perm.size()));
        for (const auto& s : j.at("scalars")) e.induced.witnesses.push_back(field_elem_from_json(s, field));
        require(e.induced.witnesses.size() == e.induced.perm.size(), "scalars and perm differ in length");
        return e;
    });
}

json to_json(const GroupReport& g, bool include_elements)
{
    json gens = json::array();
    for (const auto& op : g.generators) gens.push_back(to_json(op));
    json j{{"order", g.order()}, {"generators", gens}};
    if (!g.generators.empty()) j["tau"] = to_json(g.generators.front().g.field().tau());
    if (include_elements) {
        json elems = json::array();
        for (const auto& e : g.elements) elems.push_back(to_json(e));
        j["elements"] = elems;
    }
    return j;
}

GroupReport group_report_from_json(const json& j, Field field)
{
    return guarded("group report", [&] {
        GroupReport g;
        for (const auto& op : j.at("generators")) g.generators.push_back(symop_from_json(op, field));
        if (j.contains("elements"))
            for (const auto& e : j.at("elements")) g.elements.push_back(group_element_from_json(e, field));
        return g;
    });
}

json to_json(const Configuration& c)
{
    json pts = json::array();
    for (const auto& p : c.points) {
        json coords = json::array();
        for (const auto& x : p.coords()) coords.push_back(to_json(x));
        pts.push_back(coords);
    }
    json lines = json::array();
    for (const auto& ln : c.lines) lines.push_back({ln[0] + 1, ln[1] + 1, ln[2] + 1});
    json j{{"points", pts}, {"lines", lines}};
    if (!c.points.empty()) j["tau"] = to_json(c.points.front().field().tau());
    return j;
}

Configuration configuration_from_json(const json& j, Field field)
{
    return guarded("configuration", [&] {
        std::vector<ProjPoint> pts;
        for (const auto& jp : j.at("points")) {
            require(jp.is_array() && jp.size() == 3, "points must have three coordinates");
            std::vector<FieldElem> coords;
            for (const auto& x : jp) coords.push_back(field_elem_from_json(x, field));
            pts.emplace_back(std::move(coords));
        }
        require(!pts.empty(), "configuration has no points");
        if (!j.contains("lines")) return build_configuration(pts);
        Configuration c{pts, {}};
        for (const auto& jl : j.at("lines")) {
            auto idx = from_one_based(jl, static_cast<int>(pts.size()));
            require(idx.size() == 3, "lines must have three points");
            Line ln{idx[0], idx[1], idx[2]};
            std::sort(ln.begin(), ln.end());
            c.lines.push_back(ln);
        }
        return c;
    });
}

json to_json(const NumericCandidate& c)
{
    json mats = json::array();
    for (int i = 0; i < c.r; ++i) {
        json m = json::array();
        for (int p = 0; p < c.n; ++p)
            for (int q = 0; q < c.n; ++q) m.push_back({c.at(i, p, q).real(), c.at(i, p, q).imag()});
        mats.push_back(m);
    }
    return {{"n", c.n}, {"r", c.r}, {"matrices", mats}};
}

NumericCandidate candidate_from_json(const json& j)
{
    return guarded("candidate", [&] {
        const int n = j.at("n").get<int>();
        const int r = j.at("r").get<int>();
        require(n >= 1 && r >= 0, "candidate needs n >= 1 and r >= 0");
        const auto& mats = j.at("matrices");
        require(mats.is_array() && static_cast<int>(mats.size()) == r, "candidate must list r matrices");
        NumericCandidate c(n, r);
        for (int i = 0; i < r; ++i) {
            require(mats[i].is_array() && static_cast<int>(mats[i].size()) == n * n,
                    "candidate matrices must list n*n entries");
            for (int k = 0; k < n * n; ++k)
                c.at(i, k / n, k % n) = cplx(mats[i][k].at(0).get<double>(), mats[i][k].at(1).get<double>());
        }
        return c;
    });
}

json to_json(const SearchResult& r)
{
    json j = to_json(r.best);
    j["loss"] = r.loss;
    j["seed"] = r.seed;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    return j;
}

SearchResult search_result_from_json(const json& j)
{
    return guarded("search result", [&] {
        SearchResult r;
        r.best = candidate_from_json(j);
        r.loss = j.at("loss").get<double>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.iterations = j.at("iterations").get<long>();
        r.converged = j.at("converged").get<bool>();
        return r;
    });
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw JsonParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::exception& e) {
        throw JsonParseError(path + ": " + e.what());
    }
}

}  // namespace waring
