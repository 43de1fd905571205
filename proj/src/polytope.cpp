#include "tropdisc/polytope.hpp"

#include "tropdisc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tropdisc {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_filler() {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
            ++pos;
    }
    bool done() {
        skip_filler();
        return pos == text.size();
    }
    char peek() {
        skip_filler();
        return text[pos];
    }
    Int read_number() {
        skip_filler();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", start);
        return Int(text.substr(start, pos - start));
    }
};

}  // namespace

SupportPolynomial parse_polynomial(const std::string& text, int expected_dim) {
    Parser p(text);
    // Each term: optional sign, optional integer coefficient, then zero or
    // more x<k>[^<e>] factors; at least one of coefficient or factor.
    std::vector<std::pair<Int, std::map<int, Int>>> terms;
    int max_var = 0;
    bool first = true;
    while (!p.done()) {
        Int sign = 1;
        char c = p.peek();
        if (c == '+' || c == '-') {
            if (c == '-') sign = -1;
            ++p.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", p.pos);
        }
        first = false;

        bool has_any = false;
        Int coeff = 1;
        if (!p.done() && std::isdigit(static_cast<unsigned char>(p.peek()))) {
            coeff = p.read_number();
            has_any = true;
        }
        std::map<int, Int> exps;
        while (!p.done() && p.peek() == 'x') {
            ++p.pos;
            std::size_t at = p.pos;
            Int idx = p.read_number();
            if (idx < 1) throw ParseError("variable index must be at least 1", at);
            if (expected_dim > 0 && idx > expected_dim)
                throw ParseError("variable index exceeds dimension " + std::to_string(expected_dim), at);
            int v = int(idx);
            max_var = std::max(max_var, v);
            Int e = 1;
            if (!p.done() && p.peek() == '^') {
                ++p.pos;
                e = p.read_number();
            }
            exps[v] += e;
            has_any = true;
        }
        if (!has_any) throw ParseError("expected a coefficient or a variable factor", p.pos);
        terms.emplace_back(sign * coeff, std::move(exps));
    }

    SupportPolynomial out;
    out.dim = expected_dim > 0 ? expected_dim : max_var;
    for (auto& [coeff, exps] : terms) {
        IntVector key(out.dim);
        for (auto& [v, e] : exps) key[v - 1] = e;
        auto it = out.terms.find(key);
        if (it == out.terms.end()) {
            out.terms.emplace(std::move(key), Rat(coeff));
        } else {
            it->second += Rat(coeff);
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

namespace {

// Generalized cross product: the kernel direction of dim-1 difference rows,
// by cofactor expansion. Zero vector when the rows are dependent.
IntVector hyperplane_normal(const std::vector<IntVector>& diffs, int dim) {
    IntVector normal(dim);
    std::vector<int> rows(diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) rows[i] = int(i);
    IntMatrix m = IntMatrix::from_rows(diffs);
    for (int c = 0; c < dim; ++c) {
        std::vector<int> cols;
        for (int j = 0; j < dim; ++j)
            if (j != c) cols.push_back(j);
        Int minor = det(m.submatrix(rows, cols));
        normal[c] = (c % 2 == 0) ? minor : -minor;
    }
    return normal;
}

bool next_combination(std::vector<int>& idx, int n) {
    int k = int(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

PolytopeFacets facet_normals(const SupportPolynomial& p) {
    const int N = p.dim;
    if (N < 1) throw DegenerateSupport("facet_normals: dimension must be at least 1");
    std::vector<IntVector> pts;
    for (const auto& [e, c] : p.terms) pts.push_back(e);
    const int M = int(pts.size());

    {
        std::vector<IntVector> diffs;
        for (int i = 1; i < M; ++i) {
            IntVector d(N);
            for (int j = 0; j < N; ++j) d[j] = pts[i][j] - pts[0][j];
            diffs.push_back(std::move(d));
        }
        if (M == 0 || rank(IntMatrix::from_rows(diffs)) < N)
            throw DegenerateSupport("facet_normals: support does not affinely span the ambient space");
    }

    std::set<std::pair<IntVector, Int>> facet_set;
    std::vector<int> subset(N);
    for (int i = 0; i < N; ++i) subset[i] = i;
    do {
        std::vector<IntVector> diffs;
        for (int i = 1; i < N; ++i) {
            IntVector d(N);
            for (int j = 0; j < N; ++j) d[j] = pts[subset[i]][j] - pts[subset[0]][j];
            diffs.push_back(std::move(d));
        }
        IntVector normal = hyperplane_normal(diffs, N);
        if (is_zero(normal)) continue;
        normal = primitive(normal);
        Int c0 = dot(normal, pts[subset[0]]);
        bool below = false, above = false;
        for (int i = 0; i < M && !(below && above); ++i) {
            Int v = dot(normal, pts[i]);
            if (v < c0) below = true;
            if (v > c0) above = true;
        }
        if (below && above) continue;
        if (!above && !below) continue;  // flat support, excluded by the span check
        if (below) {
            for (Int& v : normal) v = -v;
            c0 = -c0;
        }
        facet_set.emplace(std::move(normal), std::move(c0));
    } while (next_combination(subset, M));

    PolytopeFacets out;
    for (const auto& [n, c] : facet_set) out.facets.push_back({n, c});

    // A support point is a vertex exactly when its active facet normals span.
    for (const IntVector& pt : pts) {
        std::vector<IntVector> active;
        for (const Facet& f : out.facets)
            if (dot(f.normal, pt) == f.support_value) active.push_back(f.normal);
        if (int(active.size()) >= N && rank(IntMatrix::from_rows(active)) == N)
            out.vertices.push_back(pt);
    }
    return out;
}

RayComparison compare_rays(const PolytopeFacets& oracle, const std::vector<IntVector>& rays) {
    std::set<IntVector> a;
    for (const Facet& f : oracle.facets) a.insert(f.normal);
    std::set<IntVector> b(rays.begin(), rays.end());
    RayComparison out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.matched));
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.oracle_only));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out.fan_only));
    return out;
}

RayComparison compare_rays(const PolytopeFacets& oracle, const TropicalFan& fan) {
    return compare_rays(oracle, fan.all_rays());
}

}  // namespace tropdisc
