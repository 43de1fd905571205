#include "tropdisc/tropical.hpp"

#include "tropdisc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace tropdisc {

namespace {

using SpanKey = std::vector<IntVector>;
using ConeKey = std::pair<std::vector<IntVector>, std::vector<IntVector>>;

ConeKey cone_key(const PolyCone& c) { return {c.rays(), c.lineality()}; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

ImageCone map_cone(const IntMatrix& V, const BergmanCone& c) {
    ImageCone out;
    std::set<IntVector> seen;
    for (const IntVector& g : c.generators) {
        IntVector img = V * g;
        if (is_zero(img)) continue;
        IntVector p = primitive(img);
        if (seen.insert(p).second) out.generators.push_back(std::move(p));
    }
    out.geometry = PolyCone::from_generators(V.rows(), out.generators);
    if (!c.flag.chain.empty()) out.label_members = c.flag.chain.back().members;
    out.source_flags = {c.label};
    out.name = c.label;
    return out;
}

MergeResult merge_cones(const std::vector<ImageCone>& cones) {
    MergeResult result;
    std::map<SpanKey, std::vector<int>> groups;
    for (int i = 0; i < int(cones.size()); ++i)
        groups[cones[i].geometry.span_basis()].push_back(i);

    for (auto& [span, idx] : groups) {
        UnionFind uf(int(idx.size()));
        for (int i = 0; i < int(idx.size()); ++i)
            for (int j = i + 1; j < int(idx.size()); ++j) {
                PolyCone meet = intersect(cones[idx[i]].geometry, cones[idx[j]].geometry);
                if (meet.span_dim() >= 1) uf.unite(i, j);
            }
        std::map<int, std::vector<int>> components;
        for (int i = 0; i < int(idx.size()); ++i) components[uf.find(i)].push_back(idx[i]);

        for (auto& [root, comp] : components) {
            if (comp.size() == 1) {
                result.cones.push_back(cones[comp[0]]);
                continue;
            }
            std::vector<PolyCone> geoms;
            std::vector<IntVector> all_gens;
            for (int ci : comp) {
                geoms.push_back(cones[ci].geometry);
                const PolyCone& g = cones[ci].geometry;
                all_gens.insert(all_gens.end(), g.rays().begin(), g.rays().end());
                for (const IntVector& l : g.lineality()) {
                    all_gens.push_back(l);
                    IntVector neg(l.size());
                    for (std::size_t t = 0; t < l.size(); ++t) neg[t] = -l[t];
                    all_gens.push_back(std::move(neg));
                }
            }
            PolyCone hull =
                PolyCone::from_generators(cones[comp[0]].geometry.ambient_dim(), all_gens);

            if (union_equals(geoms, hull)) {
                ImageCone merged;
                merged.geometry = hull;
                merged.generators = hull.rays();
                for (int ci : comp) {
                    merged.label_members = sorted_union(merged.label_members, cones[ci].label_members);
                    merged.source_flags.insert(merged.source_flags.end(),
                                               cones[ci].source_flags.begin(),
                                               cones[ci].source_flags.end());
                }
                std::sort(merged.source_flags.begin(), merged.source_flags.end());
                merged.name = subset_label(merged.label_members);
                result.cones.push_back(std::move(merged));
            } else {
                std::string names;
                for (int ci : comp) {
                    if (!names.empty()) names += ",";
                    names += cones[ci].name;
                }
                result.non_convex_groups.push_back(names);
                for (int ci : comp) result.cones.push_back(cones[ci]);
            }
        }
    }

    std::sort(result.cones.begin(), result.cones.end(), [](const ImageCone& a, const ImageCone& b) {
        return cone_key(a.geometry) < cone_key(b.geometry);
    });
    std::sort(result.non_convex_groups.begin(), result.non_convex_groups.end());
    return result;
}

ImageCone intersect_pair(const ImageCone& a, const ImageCone& b) {
    ImageCone out;
    out.geometry = intersect(a.geometry, b.geometry);
    out.generators = out.geometry.rays();
    out.label_members = sorted_union(a.label_members, b.label_members);
    out.name = a.name + "&" + b.name;
    return out;
}

std::vector<IntVector> TropicalFan::all_rays() const {
    std::vector<IntVector> out = direct_rays;
    for (const HiddenRay& h : hidden_rays) out.push_back(h.ray);
    return out;
}

TropicalFan tropicalize(const DerivedMatrices& d) {
    TropicalFan fan;
    fan.dim = d.N;
    fan.multiplicity = lattice_index(d.omega, d.Lambda);
    fan.hypersurface = hypersurface_check(d);
    if (!fan.hypersurface)
        fan.warnings.push_back(
            "hypersurface check failed: some entry of Phi or PhiTilde is zero; "
            "the discriminant set may have codimension above 1");

    std::set<IntVector> direct_set;
    for (int j = 0; j < d.V.cols(); ++j) {
        IntVector p = primitive(d.V.col(j));
        if (direct_set.insert(p).second) fan.direct_rays.push_back(std::move(p));
    }

    LinearMatroid matroid(d.U);
    if (matroid.rank() >= 2) {
        BergmanFan bf = bergman_fan(matroid);
        std::vector<ImageCone> mapped;
        for (const BergmanCone& c : bf.cones) mapped.push_back(map_cone(d.V, c));
        // The image of a flag cone can drop dimension (a flat whose incidence
        // vector lies in the kernel of V collapses its generator). Such a cone
        // is a face of some full image cone, not a maximal cone of the image
        // fan, so it must not survive as a separate member.
        std::vector<ImageCone> maximal;
        for (std::size_t i = 0; i < mapped.size(); ++i) {
            bool buried = false;
            for (std::size_t j = 0; j < mapped.size() && !buried; ++j)
                buried = j != i && mapped[j].span_dim() > mapped[i].span_dim() &&
                         mapped[j].geometry.contains(mapped[i].geometry);
            if (!buried) maximal.push_back(mapped[i]);
        }
        MergeResult merged = merge_cones(maximal);
        fan.cones = std::move(merged.cones);
        for (const std::string& g : merged.non_convex_groups)
            fan.warnings.push_back("non-convex union kept unmerged: " + g);
    } else {
        fan.warnings.push_back("matroid rank below 2: no flag cones, ray set is the V columns only");
    }

    // Pairwise intersections, iterated: an intersection of positive span
    // dimension re-enters the pool so that rays buried deeper than one
    // pairwise meet are still found (relevant for N >= 4).
    struct PoolCone {
        PolyCone geometry;
        std::set<std::string> parents;
    };
    std::vector<PoolCone> pool;
    std::set<ConeKey> pool_keys;
    for (const ImageCone& c : fan.cones) {
        pool.push_back({c.geometry, {c.name}});
        pool_keys.insert(cone_key(c.geometry));
    }

    std::map<IntVector, std::set<std::string>> hidden;
    std::set<std::pair<std::size_t, std::size_t>> done;
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t sz = pool.size();
        for (std::size_t a = 0; a < sz; ++a)
            for (std::size_t b = a + 1; b < sz; ++b) {
                if (!done.insert({a, b}).second) continue;
                PolyCone meet = intersect(pool[a].geometry, pool[b].geometry);
                if (meet.is_trivial()) continue;
                std::set<std::string> parents = pool[a].parents;
                parents.insert(pool[b].parents.begin(), pool[b].parents.end());
                if (pool[a].geometry.span_basis() != pool[b].geometry.span_basis() &&
                    meet.span_dim() >= fan.dim - 1 && fan.dim >= 2)
                    fan.warnings.push_back("full-dimensional overlap between cones of different spans");
                for (const IntVector& r : meet.rays())
                    if (!direct_set.count(r)) {
                        auto& p = hidden[r];
                        p.insert(parents.begin(), parents.end());
                    }
                if (meet.span_dim() >= 2) {
                    ConeKey key = cone_key(meet);
                    if (pool_keys.insert(key).second) {
                        pool.push_back({std::move(meet), parents});
                        grew = true;
                    }
                }
            }
    }

    for (auto& [ray, parents] : hidden)
        fan.hidden_rays.push_back({ray, {parents.begin(), parents.end()}});
    return fan;
}

}  // namespace tropdisc
