#include "tropdisc/system.hpp"

#include "tropdisc/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tropdisc {

namespace {

// col == -1 names the omega column of equation eq; both indices 1-based in
// the message.
std::string column_name(int eq, int col) {
    std::string s = "equation " + std::to_string(eq + 1);
    if (col < 0)
        s += ", omega";
    else
        s += ", lambda " + std::to_string(col + 1);
    return s;
}

}  // namespace

void validate(const SystemSpec& spec) {
    if (spec.n <= 0) throw Error("validate: n must be positive");
    if (int(spec.equations.size()) != spec.n)
        throw Error("validate: expected " + std::to_string(spec.n) + " equations, got " +
                    std::to_string(spec.equations.size()));

    const int n = spec.n;
    for (int i = 0; i < n; ++i) {
        const Equation& eq = spec.equations[i];
        if (int(eq.omega.size()) != n)
            throw Error("validate: omega of equation " + std::to_string(i + 1) + " has length " +
                        std::to_string(eq.omega.size()) + ", expected " + std::to_string(n));
        for (int j = 0; j < int(eq.lambda.size()); ++j)
            if (int(eq.lambda[j].size()) != n)
                throw Error("validate: " + column_name(i, j) + " has length " +
                            std::to_string(eq.lambda[j].size()) + ", expected " + std::to_string(n));
    }

    IntMatrix omega(n, n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) omega.at(r, i) = spec.equations[i].omega[r];
    if (det(omega) == 0)
        throw DegenerateOmega("validate: the matrix of omega columns is singular");

    for (int i = 0; i < n; ++i) {
        const Equation& eq = spec.equations[i];
        for (int j = 0; j < int(eq.lambda.size()); ++j) {
            if (is_zero(eq.lambda[j]))
                throw ZeroOrOmegaInLambda("validate: " + column_name(i, j) + " is the zero vector");
            if (eq.lambda[j] == eq.omega)
                throw ZeroOrOmegaInLambda("validate: " + column_name(i, j) +
                                          " equals the omega of its own equation");
        }
    }

    // Columns must be distinct within each equation's support {omega} U
    // lambda. Repeats across equations are legal: the disjoint union of the
    // supports keeps them as separate coordinates.
    for (int i = 0; i < n; ++i) {
        std::map<IntVector, int> seen;
        const Equation& eq = spec.equations[i];
        seen.emplace(eq.omega, -1);
        for (int j = 0; j < int(eq.lambda.size()); ++j) {
            auto [it, inserted] = seen.emplace(eq.lambda[j], j);
            if (!inserted)
                throw DuplicateExponent("validate: " + column_name(i, j) + " repeats " +
                                        column_name(i, it->second));
        }
    }
}

DerivedMatrices derive(const SystemSpec& spec) {
    validate(spec);
    DerivedMatrices d;
    d.n = spec.n;
    const int n = d.n;

    d.N = 0;
    for (const Equation& eq : spec.equations) d.N += int(eq.lambda.size());
    const int N = d.N;

    d.omega = IntMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) d.omega.at(r, i) = spec.equations[i].omega[r];

    d.Lambda = IntMatrix(n, N);
    d.chi = IntMatrix(n, N);
    d.block_of.assign(N, 0);
    {
        int col = 0;
        for (int i = 0; i < n; ++i) {
            for (const IntVector& lam : spec.equations[i].lambda) {
                for (int r = 0; r < n; ++r) d.Lambda.at(r, col) = lam[r];
                d.chi.at(i, col) = 1;
                d.block_of[col] = i;
                ++col;
            }
        }
    }

    d.det_omega = det(d.omega);
    d.Psi = adjugate(d.omega) * d.Lambda;

    d.PsiTilde = d.Psi;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) d.PsiTilde.at(i, j) -= d.det_omega * d.chi.at(i, j);

    d.Phi = RatMatrix(n, N);
    d.PhiTilde = RatMatrix(n, N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) {
            d.Phi.at(i, j) = Rat(d.Psi.at(i, j), d.det_omega);
            d.PhiTilde.at(i, j) = d.Phi.at(i, j) - Rat(d.chi.at(i, j));
        }

    d.U = IntMatrix(N + 2 * n, N);
    for (int j = 0; j < N; ++j) d.U.at(j, j) = -d.det_omega;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) {
            d.U.at(N + i, j) = d.Psi.at(i, j);
            d.U.at(N + n + i, j) = d.PsiTilde.at(i, j);
        }

    d.V = IntMatrix(N, N + 2 * n);
    for (int j = 0; j < N; ++j) d.V.at(j, j) = d.det_omega;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) {
            d.V.at(j, N + i) = -d.Psi.at(i, j);
            d.V.at(j, N + n + i) = d.PsiTilde.at(i, j);
        }

    return d;
}

bool hypersurface_check(const DerivedMatrices& d) {
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.N; ++j)
            if (d.Phi.at(i, j) == 0 || d.PhiTilde.at(i, j) == 0) return false;
    return true;
}

Int lattice_index(const IntMatrix& omega, const IntMatrix& Lambda) {
    IntMatrix joint = omega.hcat(Lambda);
    Int g = minor_gcd(joint, joint.rows());
    if (g == 0) throw RankDeficient("lattice_index: support does not span, all maximal minors vanish");
    return g;
}

Int lattice_index(const SystemSpec& spec) {
    validate(spec);
    const int n = spec.n;
    IntMatrix omega(n, n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) omega.at(r, i) = spec.equations[i].omega[r];
    int N = 0;
    for (const Equation& eq : spec.equations) N += int(eq.lambda.size());
    IntMatrix Lambda(n, N);
    int col = 0;
    for (const Equation& eq : spec.equations)
        for (const IntVector& lam : eq.lambda) {
            for (int r = 0; r < n; ++r) Lambda.at(r, col) = lam[r];
            ++col;
        }
    return lattice_index(omega, Lambda);
}

NormalDirections theorem1_normals(const DerivedMatrices& d) {
    NormalDirections out;
    const int N = d.N, n = d.n;
    out.raw.reserve(N + 2 * n);
    for (int j = 0; j < N; ++j) {
        IntVector e(N);
        e[j] = 1;
        out.raw.push_back(std::move(e));
    }
    for (int i = 0; i < n; ++i) {
        IntVector psi = d.Psi.row(i);
        for (Int& x : psi) x = -x;
        out.raw.push_back(std::move(psi));
    }
    for (int i = 0; i < n; ++i) out.raw.push_back(d.PsiTilde.row(i));

    out.primitive_all.reserve(out.raw.size());
    for (const IntVector& v : out.raw) out.primitive_all.push_back(primitive(v));

    out.primitive_set = out.primitive_all;
    std::sort(out.primitive_set.begin(), out.primitive_set.end());
    out.primitive_set.erase(std::unique(out.primitive_set.begin(), out.primitive_set.end()),
                            out.primitive_set.end());
    return out;
}

}  // namespace tropdisc
