#include "tropdisc/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>

namespace tropdisc {

std::vector<RatVector> rref(std::vector<RatVector> rows, std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    if (rows.empty()) return rows;
    const int cols = int(rows[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < int(rows.size()); ++c) {
        int p = r;
        while (p < int(rows.size()) && rows[p][c] == 0) ++p;
        if (p == int(rows.size())) continue;
        std::swap(rows[p], rows[r]);
        Rat inv = rows[r][c];
        for (int j = c; j < cols; ++j) rows[r][j] /= inv;
        for (int i = 0; i < int(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<IntVector> kernel_basis(const std::vector<RatVector>& rows, int dim) {
    std::vector<int> pivots;
    std::vector<RatVector> R = rref(rows, &pivots);
    std::vector<bool> is_pivot(dim, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<IntVector> basis;
    for (int f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        RatVector z(dim);
        z[f] = 1;
        for (int i = 0; i < int(R.size()); ++i) z[pivots[i]] = -R[i][f];
        basis.push_back(primitive_of_rational(z));
    }
    return basis;
}

bool in_cone_hull(const std::vector<IntVector>& gens, const std::vector<IntVector>& lines,
                  const IntVector& x) {
    const int d = int(x.size());
    std::vector<IntVector> cols;
    cols.reserve(gens.size() + 2 * lines.size());
    for (const IntVector& g : gens) {
        if (int(g.size()) != d) throw std::invalid_argument("in_cone_hull: generator length mismatch");
        cols.push_back(g);
    }
    for (const IntVector& l : lines) {
        if (int(l.size()) != d) throw std::invalid_argument("in_cone_hull: line length mismatch");
        cols.push_back(l);
        IntVector neg(l.size());
        for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        cols.push_back(std::move(neg));
    }
    const int m = int(cols.size());

    // Phase-1 simplex tableau: structural columns, artificial identity, rhs.
    const int width = m + d + 1;
    std::vector<RatVector> tab(d, RatVector(width));
    for (int r = 0; r < d; ++r) {
        bool flip = x[r] < 0;
        for (int j = 0; j < m; ++j) tab[r][j] = Rat(flip ? -cols[j][r] : cols[j][r]);
        tab[r][m + r] = 1;
        tab[r][m + d] = Rat(flip ? -x[r] : x[r]);
    }
    std::vector<int> basis(d);
    for (int r = 0; r < d; ++r) basis[r] = m + r;

    // Reduced costs for minimizing the sum of artificials.
    RatVector red(m + d);
    Rat obj = 0;
    for (int r = 0; r < d; ++r) {
        obj += tab[r][m + d];
        for (int j = 0; j < m; ++j) red[j] -= tab[r][j];
    }

    while (true) {
        int enter = -1;
        for (int j = 0; j < m + d; ++j)
            if (red[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int r = 0; r < d; ++r) {
            if (tab[r][enter] <= 0) continue;
            Rat ratio = tab[r][m + d] / tab[r][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("in_cone_hull: phase-1 objective unbounded");
        Rat piv = tab[leave][enter];
        for (int j = 0; j < width; ++j) tab[leave][j] /= piv;
        Rat c = red[enter];
        obj += c * tab[leave][m + d];
        for (int j = 0; j < m + d; ++j) red[j] -= c * tab[leave][j];
        for (int r = 0; r < d; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            Rat f = tab[r][enter];
            for (int j = 0; j < width; ++j) tab[r][j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }
    return obj == 0;
}

namespace {

// Which processed inequalities a ray satisfies with equality.
struct BitVec {
    std::vector<std::uint64_t> words;
    explicit BitVec(int capacity = 0) : words(std::size_t(capacity + 63) / 64, 0) {}
    void set(int i) { words[std::size_t(i) >> 6] |= std::uint64_t(1) << (i & 63); }
    void set_first(int n) {
        for (int i = 0; i < n; ++i) set(i);
    }
    bool contains_all(const BitVec& other) const {
        for (std::size_t i = 0; i < words.size(); ++i)
            if (other.words[i] & ~words[i]) return false;
        return true;
    }
    friend BitVec common_bits(const BitVec& a, const BitVec& b) {
        BitVec r;
        r.words.resize(a.words.size());
        for (std::size_t i = 0; i < a.words.size(); ++i) r.words[i] = a.words[i] & b.words[i];
        return r;
    }
};

struct DDRay {
    IntVector z;
    BitVec active;
};

IntVector scale_combine(const Int& ca, const IntVector& a, const Int& cb, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ca * a[i] + cb * b[i];
    return r;
}

// Double description inside the kernel of `equations`: extreme rays and a
// lineality basis of { x : equations x = 0, inequalities x >= 0 }, as
// primitive integer vectors in the ambient space, not yet canonicalized.
std::pair<std::vector<IntVector>, std::vector<IntVector>> dd_from_hrep(
    int dim, const std::vector<IntVector>& equations, const std::vector<IntVector>& inequalities) {
    std::vector<RatVector> eq_rows;
    for (const IntVector& e : equations) {
        if (int(e.size()) != dim) throw std::invalid_argument("dd_from_hrep: equation length mismatch");
        RatVector row(dim);
        for (int j = 0; j < dim; ++j) row[j] = Rat(e[j]);
        eq_rows.push_back(std::move(row));
    }
    std::vector<IntVector> K = kernel_basis(eq_rows, dim);
    const int k = int(K.size());
    if (k == 0) return {{}, {}};

    // Inequalities restricted to kernel coordinates; identically-zero ones
    // hold throughout the kernel and are dropped.
    std::vector<IntVector> ineq_z;
    for (const IntVector& a : inequalities) {
        if (int(a.size()) != dim) throw std::invalid_argument("dd_from_hrep: inequality length mismatch");
        IntVector az(k);
        bool zero = true;
        for (int j = 0; j < k; ++j) {
            az[j] = dot(a, K[j]);
            if (az[j] != 0) zero = false;
        }
        if (!zero) ineq_z.push_back(std::move(az));
    }
    const int T = int(ineq_z.size());

    std::vector<IntVector> lin;
    for (int j = 0; j < k; ++j) {
        IntVector e(k);
        e[j] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<DDRay> rays;

    for (int t = 0; t < T; ++t) {
        const IntVector& a = ineq_z[t];

        int pivot = -1;
        for (int j = 0; j < int(lin.size()); ++j)
            if (dot(a, lin[j]) != 0) {
                pivot = j;
                break;
            }
        if (pivot >= 0) {
            // The constraint cuts the lineality space: peel one lineality
            // direction off as a new ray and push every other generator into
            // the constraint's hyperplane.
            IntVector l0 = lin[pivot];
            Int alpha0 = dot(a, l0);
            if (alpha0 < 0) {
                for (Int& v : l0) v = -v;
                alpha0 = -alpha0;
            }
            std::vector<IntVector> new_lin;
            for (int j = 0; j < int(lin.size()); ++j) {
                if (j == pivot) continue;
                Int aj = dot(a, lin[j]);
                new_lin.push_back(primitive(scale_combine(alpha0, lin[j], -aj, l0)));
            }
            for (DDRay& r : rays) {
                Int ar = dot(a, r.z);
                r.z = primitive(scale_combine(alpha0, r.z, -ar, l0));
                // Earlier constraints vanish on l0 (it was in the lineality
                // space), so previous activity is unchanged by the shift.
                r.active.set(t);
            }
            DDRay nr{std::move(l0), BitVec(T)};
            nr.active.set_first(t);
            rays.push_back(std::move(nr));
            lin = std::move(new_lin);
            continue;
        }

        std::vector<int> pos, zero, neg;
        std::vector<Int> val(rays.size());
        for (int i = 0; i < int(rays.size()); ++i) {
            val[i] = dot(a, rays[i].z);
            (val[i] > 0 ? pos : val[i] == 0 ? zero : neg).push_back(i);
        }
        if (neg.empty()) {
            for (int i : zero) rays[i].active.set(t);
            continue;
        }
        if (pos.empty()) {
            std::vector<DDRay> kept;
            for (int i : zero) {
                rays[i].active.set(t);
                kept.push_back(std::move(rays[i]));
            }
            rays = std::move(kept);
            continue;
        }

        std::vector<DDRay> combos;
        for (int p : pos)
            for (int n : neg) {
                BitVec common = common_bits(rays[p].active, rays[n].active);
                // Combinatorial adjacency: p and n are adjacent iff no third
                // ray is active everywhere both are. Valid because the ray
                // list stays irredundant throughout the insertion loop.
                bool adjacent = true;
                for (int o = 0; o < int(rays.size()) && adjacent; ++o) {
                    if (o == p || o == n) continue;
                    if (rays[o].active.contains_all(common)) adjacent = false;
                }
                if (!adjacent) continue;
                DDRay w;
                w.z = primitive(scale_combine(val[p], rays[n].z, -val[n], rays[p].z));
                w.active = common;
                w.active.set(t);
                combos.push_back(std::move(w));
            }
        std::vector<DDRay> next;
        for (int i : pos) next.push_back(std::move(rays[i]));
        for (int i : zero) {
            rays[i].active.set(t);
            next.push_back(std::move(rays[i]));
        }
        for (DDRay& w : combos) next.push_back(std::move(w));
        rays = std::move(next);
    }

    auto back = [&](const IntVector& z) {
        IntVector x(dim);
        for (int j = 0; j < k; ++j)
            for (int c = 0; c < dim; ++c) x[c] += z[j] * K[j][c];
        return primitive(x);
    };
    std::vector<IntVector> rays_x, lin_x;
    for (const DDRay& r : rays) rays_x.push_back(back(r.z));
    for (const IntVector& l : lin) lin_x.push_back(back(l));
    return {std::move(rays_x), std::move(lin_x)};
}

// Canonical lineality basis (primitive RREF rows) plus the canonical
// representative of each ray modulo that basis.
struct VForm {
    std::vector<IntVector> rays;
    std::vector<IntVector> lin;
    std::vector<int> lin_pivots;
};

VForm canonical_vform(int dim, const std::vector<IntVector>& rays_in,
                      const std::vector<IntVector>& lin_in) {
    VForm out;
    std::vector<RatVector> lin_rows;
    for (const IntVector& l : lin_in) {
        RatVector row(dim);
        for (int j = 0; j < dim; ++j) row[j] = Rat(l[j]);
        lin_rows.push_back(std::move(row));
    }
    std::vector<RatVector> L = rref(std::move(lin_rows), &out.lin_pivots);
    for (const RatVector& row : L) out.lin.push_back(primitive_of_rational(row));

    std::set<IntVector> seen;
    std::vector<IntVector> reduced;
    for (const IntVector& r : rays_in) {
        RatVector x(dim);
        for (int j = 0; j < dim; ++j) x[j] = Rat(r[j]);
        for (int i = 0; i < int(L.size()); ++i) {
            Rat c = x[out.lin_pivots[i]];
            if (c == 0) continue;
            for (int j = 0; j < dim; ++j) x[j] -= c * L[i][j];
        }
        if (is_zero(x)) continue;  // the ray lies in the lineality space
        IntVector rep = primitive_of_rational(x);
        if (seen.insert(rep).second) reduced.push_back(std::move(rep));
    }

    // Extreme-ray sweep; removals keep the cone unchanged, so one pass over
    // a shrinking candidate list suffices.
    for (std::size_t i = 0; i < reduced.size();) {
        std::vector<IntVector> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        if (in_cone_hull(others, out.lin, reduced[i]))
            reduced.erase(reduced.begin() + i);
        else
            ++i;
    }
    std::sort(reduced.begin(), reduced.end());
    out.rays = std::move(reduced);
    return out;
}

}  // namespace

PolyCone PolyCone::canonicalize(int dim, std::vector<IntVector> rays, std::vector<IntVector> lin) {
    PolyCone c;
    c.dim_ = dim;
    VForm v = canonical_vform(dim, rays, lin);
    c.rays_ = std::move(v.rays);
    c.lin_ = std::move(v.lin);

    {
        std::vector<RatVector> span_rows;
        for (const IntVector& g : c.rays_) {
            RatVector row(dim);
            for (int j = 0; j < dim; ++j) row[j] = Rat(g[j]);
            span_rows.push_back(std::move(row));
        }
        for (const IntVector& g : c.lin_) {
            RatVector row(dim);
            for (int j = 0; j < dim; ++j) row[j] = Rat(g[j]);
            span_rows.push_back(std::move(row));
        }
        for (const RatVector& row : rref(std::move(span_rows)))
            c.span_.push_back(primitive_of_rational(row));
        c.span_dim_ = int(c.span_.size());
    }

    // H-representation through polarity: the polar cone's lineality gives
    // our equations and its extreme rays give our facets.
    std::vector<IntVector> polar_ineq;
    for (const IntVector& r : c.rays_) {
        IntVector neg(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        polar_ineq.push_back(std::move(neg));
    }
    auto [polar_rays, polar_lin] = dd_from_hrep(dim, c.lin_, polar_ineq);
    VForm pv = canonical_vform(dim, polar_rays, polar_lin);
    c.hrep_.equations = std::move(pv.lin);
    for (const IntVector& rho : pv.rays) {
        IntVector ineq(rho.size());
        for (std::size_t i = 0; i < rho.size(); ++i) ineq[i] = -rho[i];
        c.hrep_.inequalities.push_back(std::move(ineq));
    }
    std::sort(c.hrep_.inequalities.begin(), c.hrep_.inequalities.end());
    return c;
}

PolyCone PolyCone::trivial(int dim) { return canonicalize(dim, {}, {}); }

PolyCone PolyCone::from_generators(int dim, const std::vector<IntVector>& gens) {
    std::vector<IntVector> clean;
    std::set<IntVector> seen;
    for (const IntVector& g : gens) {
        if (int(g.size()) != dim) throw std::invalid_argument("from_generators: length mismatch");
        if (is_zero(g)) continue;
        IntVector p = primitive(g);
        if (seen.insert(p).second) clean.push_back(std::move(p));
    }
    // A generator g spans a line of the cone exactly when -g is also a
    // nonnegative combination; those generators span the lineality space.
    std::vector<IntVector> lines;
    for (const IntVector& g : clean) {
        IntVector neg(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
        if (in_cone_hull(clean, {}, neg)) lines.push_back(g);
    }
    return canonicalize(dim, clean, lines);
}

PolyCone PolyCone::from_hrep(int dim, const HRep& h) {
    auto [rays, lin] = dd_from_hrep(dim, h.equations, h.inequalities);
    return canonicalize(dim, std::move(rays), std::move(lin));
}

bool PolyCone::contains(const IntVector& x) const {
    if (int(x.size()) != dim_) throw std::invalid_argument("contains: length mismatch");
    for (const IntVector& e : hrep_.equations)
        if (dot(e, x) != 0) return false;
    for (const IntVector& a : hrep_.inequalities)
        if (dot(a, x) < 0) return false;
    return true;
}

bool PolyCone::contains(const PolyCone& other) const {
    for (const IntVector& r : other.rays_)
        if (!contains(r)) return false;
    for (const IntVector& l : other.lin_) {
        for (const IntVector& e : hrep_.equations)
            if (dot(e, l) != 0) return false;
        for (const IntVector& a : hrep_.inequalities)
            if (dot(a, l) != 0) return false;
    }
    return true;
}

PolyCone intersect(const PolyCone& a, const PolyCone& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect: ambient dimensions differ");
    HRep h;
    h.equations = a.hrep_.equations;
    h.equations.insert(h.equations.end(), b.hrep_.equations.begin(), b.hrep_.equations.end());
    h.inequalities = a.hrep_.inequalities;
    h.inequalities.insert(h.inequalities.end(), b.hrep_.inequalities.begin(),
                          b.hrep_.inequalities.end());
    return PolyCone::from_hrep(a.ambient_dim(), h);
}

namespace {

// Sign-normalized primitive hyperplane normal for deduplication.
IntVector hyperplane_key(const IntVector& a) {
    IntVector p = primitive(a);
    for (const Int& v : p) {
        if (v > 0) return p;
        if (v < 0) {
            for (Int& w : p) w = -w;
            return p;
        }
    }
    return p;
}

bool union_covers(const std::vector<PolyCone>& members, const PolyCone& piece,
                  std::vector<IntVector> planes) {
    if (piece.is_trivial()) return true;
    for (const PolyCone& m : members)
        if (m.contains(piece)) return true;

    for (std::size_t i = 0; i < planes.size(); ++i) {
        const IntVector& h = planes[i];
        bool has_pos = false, has_neg = false;
        for (const IntVector& r : piece.rays()) {
            Int v = dot(h, r);
            if (v > 0) has_pos = true;
            if (v < 0) has_neg = true;
        }
        for (const IntVector& l : piece.lineality())
            if (dot(h, l) != 0) has_pos = has_neg = true;
        if (!has_pos || !has_neg) continue;

        std::vector<IntVector> rest;
        for (std::size_t j = 0; j < planes.size(); ++j)
            if (j != i) rest.push_back(planes[j]);

        HRep hp = piece.hrep();
        hp.inequalities.push_back(h);
        PolyCone plus = PolyCone::from_hrep(piece.ambient_dim(), hp);

        HRep hm = piece.hrep();
        IntVector neg(h.size());
        for (std::size_t j = 0; j < h.size(); ++j) neg[j] = -h[j];
        hm.inequalities.push_back(std::move(neg));
        PolyCone minus = PolyCone::from_hrep(piece.ambient_dim(), hm);

        return union_covers(members, plus, rest) && union_covers(members, minus, std::move(rest));
    }
    // No member facet hyperplane cuts the piece, and no single member
    // contains it: summing witnesses outside each member produces a point of
    // the piece outside the whole union.
    return false;
}

}  // namespace

bool union_equals(const std::vector<PolyCone>& members, const PolyCone& hull) {
    if (members.empty()) return hull.is_trivial();
    std::set<IntVector> plane_set;
    for (const PolyCone& m : members)
        for (const IntVector& a : m.hrep().inequalities) plane_set.insert(hyperplane_key(a));
    std::vector<IntVector> planes(plane_set.begin(), plane_set.end());
    return union_covers(members, hull, std::move(planes));
}

}  // namespace tropdisc
