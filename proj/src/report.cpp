#include "tropdisc/report.hpp"

#include "tropdisc/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace tropdisc {

namespace {

std::int64_t json_int(const Int& x) {
    if (x < (std::numeric_limits<std::int64_t>::min)() ||
        x > (std::numeric_limits<std::int64_t>::max)())
        throw Error("report: integer exceeds the serializable range");
    return x.convert_to<std::int64_t>();
}

Json vec_json(const IntVector& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(json_int(x));
    return a;
}

Json vecs_json(const std::vector<IntVector>& vs) {
    Json a = Json::array();
    for (const IntVector& v : vs) a.push_back(vec_json(v));
    return a;
}

Json mat_json(const IntMatrix& m) {
    Json a = Json::array();
    for (int i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
    return a;
}

Json ratmat_json(const RatMatrix& m) {
    Json a = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        a.push_back(std::move(row));
    }
    return a;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

IntVector int_vector_from(const Json& j, const std::string& what) {
    if (!j.is_array()) throw Error("system file: " + what + " must be an array of integers");
    IntVector v;
    for (const Json& x : j) {
        if (!x.is_number_integer()) throw Error("system file: " + what + " must contain integers");
        v.push_back(Int(x.get<std::int64_t>()));
    }
    return v;
}

}  // namespace

Json system_to_json(const SystemSpec& spec) {
    Json j;
    j["n"] = spec.n;
    Json eqs = Json::array();
    for (const Equation& eq : spec.equations) {
        Json e;
        e["omega"] = vec_json(eq.omega);
        Json lams = Json::array();
        for (const IntVector& lam : eq.lambda) lams.push_back(vec_json(lam));
        e["lambda"] = std::move(lams);
        eqs.push_back(std::move(e));
    }
    j["equations"] = std::move(eqs);
    return j;
}

SystemSpec system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("equations"))
        throw Error("system file: expected an object with fields n and equations");
    if (!j["n"].is_number_integer()) throw Error("system file: n must be an integer");
    SystemSpec spec;
    spec.n = j["n"].get<int>();
    if (!j["equations"].is_array()) throw Error("system file: equations must be an array");
    for (const Json& e : j["equations"]) {
        if (!e.is_object() || !e.contains("omega") || !e.contains("lambda"))
            throw Error("system file: each equation needs omega and lambda");
        Equation eq;
        eq.omega = int_vector_from(e["omega"], "omega");
        if (!e["lambda"].is_array()) throw Error("system file: lambda must be an array of arrays");
        for (const Json& lam : e["lambda"]) eq.lambda.push_back(int_vector_from(lam, "lambda entry"));
        spec.equations.push_back(std::move(eq));
    }
    return spec;
}

SystemSpec load_system(const std::string& path) {
    std::string text = read_file(path);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("system file: ") + e.what(), e.byte);
    }
    return system_from_json(j);
}

SupportPolynomial load_polynomial(const std::string& path, int expected_dim) {
    std::string text = read_file(path);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("polynomial file: ") + e.what(), e.byte);
        }
        if (!j.is_array()) throw Error("polynomial file: expected an array of terms");
        SupportPolynomial p;
        p.dim = expected_dim;
        for (const Json& t : j) {
            if (!t.is_object() || !t.contains("exponent") || !t.contains("coeff"))
                throw Error("polynomial file: each term needs exponent and coeff");
            IntVector e = int_vector_from(t["exponent"], "exponent");
            if (p.dim == 0) p.dim = int(e.size());
            if (int(e.size()) != p.dim)
                throw Error("polynomial file: inconsistent exponent lengths");
            Rat c;
            if (t["coeff"].is_number_integer())
                c = Rat(t["coeff"].get<std::int64_t>());
            else if (t["coeff"].is_string())
                c = Rat(Int(t["coeff"].get<std::string>()));
            else
                throw Error("polynomial file: coeff must be an integer or a string");
            auto it = p.terms.find(e);
            if (it == p.terms.end()) {
                if (c != 0) p.terms.emplace(std::move(e), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) p.terms.erase(it);
            }
        }
        return p;
    }
    return parse_polynomial(text, expected_dim);
}

Json derived_report(const DerivedMatrices& d) {
    Json j;
    j["n"] = d.n;
    j["N"] = d.N;
    j["Lambda"] = mat_json(d.Lambda);
    j["chi"] = mat_json(d.chi);
    j["detOmega"] = json_int(d.det_omega);
    j["Phi"] = ratmat_json(d.Phi);
    j["PhiTilde"] = ratmat_json(d.PhiTilde);
    j["Psi"] = mat_json(d.Psi);
    j["PsiTilde"] = mat_json(d.PsiTilde);
    j["U"] = mat_json(d.U);
    j["V"] = mat_json(d.V);
    return j;
}

Json normals_report(const NormalDirections& nd) {
    Json j;
    j["raw"] = vecs_json(nd.raw);
    j["primitive"] = vecs_json(nd.primitive_all);
    j["primitive_set"] = vecs_json(nd.primitive_set);
    return j;
}

Json tropical_report(const TropicalFan& fan) {
    Json j;
    j["direct_rays"] = vecs_json(fan.direct_rays);
    Json hidden = Json::array();
    for (const HiddenRay& h : fan.hidden_rays) {
        Json e;
        e["ray"] = vec_json(h.ray);
        e["parents"] = h.parents;
        hidden.push_back(std::move(e));
    }
    j["hidden_rays"] = std::move(hidden);
    Json cones = Json::array();
    for (const ImageCone& c : fan.cones) {
        Json e;
        e["label"] = c.name;
        e["extreme_rays"] = vecs_json(c.geometry.rays());
        cones.push_back(std::move(e));
    }
    j["cones"] = std::move(cones);
    j["cone_count"] = int(fan.cones.size());
    j["ray_count"] = int(fan.direct_rays.size() + fan.hidden_rays.size());
    j["multiplicity"] = json_int(fan.multiplicity);
    j["hypersurface_check"] = fan.hypersurface;
    j["warnings"] = fan.warnings;
    return j;
}

Json oracle_report(const PolytopeFacets& facets, const RayComparison& cmp) {
    Json j;
    j["facet_count"] = int(facets.facets.size());
    Json fs = Json::array();
    for (const Facet& f : facets.facets) {
        Json e;
        e["normal"] = vec_json(f.normal);
        e["support_value"] = json_int(f.support_value);
        fs.push_back(std::move(e));
    }
    j["facets"] = std::move(fs);
    j["vertex_count"] = int(facets.vertices.size());
    j["vertices"] = vecs_json(facets.vertices);
    Json c;
    c["matched"] = vecs_json(cmp.matched);
    c["oracle_only"] = vecs_json(cmp.oracle_only);
    c["fan_only"] = vecs_json(cmp.fan_only);
    j["comparison"] = std::move(c);
    j["summary"] = "matched: " + std::to_string(cmp.matched.size()) +
                   ", oracle-only: " + std::to_string(cmp.oracle_only.size()) +
                   ", fan-only: " + std::to_string(cmp.fan_only.size());
    return j;
}

Json hk_report(const std::vector<ResidualSample>& samples, double tolerance) {
    Json j;
    j["tolerance"] = tolerance;
    j["samples"] = int(samples.size());
    Json pts = Json::array();
    double worst = 0.0;
    for (const ResidualSample& r : samples) {
        Json e;
        Json s = Json::array();
        for (const Rat& x : r.s) s.push_back(x.str());
        e["s"] = std::move(s);
        e["branch_count"] = r.branch_count;
        e["residual"] = r.residual_value;
        pts.push_back(std::move(e));
        worst = std::max(worst, r.residual_value);
    }
    j["points"] = std::move(pts);
    j["max_residual"] = worst;
    j["all_below_tolerance"] = worst < tolerance;
    return j;
}

namespace {

bool is_scalar_array(const Json& j) {
    return j.is_array() &&
           std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar_str(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render_value(std::ostream& os, const Json& j, int indent) {
    std::string pad(std::size_t(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            if (val.is_primitive()) {
                os << pad << key << ": " << scalar_str(val) << "\n";
            } else if (is_scalar_array(val)) {
                os << pad << key << ": ";
                render_value(os, val, 0);
            } else {
                os << pad << key << ":\n";
                render_value(os, val, indent + 1);
            }
        }
    } else if (is_scalar_array(j)) {
        os << "(";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ", ";
            os << scalar_str(j[i]);
        }
        os << ")\n";
    } else if (j.is_array()) {
        for (const Json& x : j) {
            if (is_scalar_array(x)) {
                os << pad;
                render_value(os, x, 0);
            } else {
                render_value(os, x, indent);
                os << "\n";
            }
        }
    } else {
        os << pad << scalar_str(j) << "\n";
    }
}

}  // namespace

std::string render_human(const Json& report) {
    std::ostringstream os;
    for (const auto& [key, val] : report.items()) {
        if (val.is_primitive()) {
            os << key << ": " << scalar_str(val) << "\n";
            continue;
        }
        os << "== " << key << " ==\n";
        render_value(os, val, 1);
    }
    return os.str();
}

}  // namespace tropdisc
