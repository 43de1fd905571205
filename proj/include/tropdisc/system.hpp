#pragma once

#include "tropdisc/exact.hpp"

#include <vector>

namespace tropdisc {

// One reduced equation: the distinguished exponent omega plus the remaining
// support columns lambda, all length-n integer vectors.
struct Equation {
    IntVector omega;
    std::vector<IntVector> lambda;
};

// A square reduced system of n equations in n variables.
struct SystemSpec {
    int n = 0;
    std::vector<Equation> equations;
};

// Everything derived from a valid system. Column order is the concatenation
// of the lambda lists, equation by equation; block_of maps each of the N
// columns to its 0-based equation index.
struct DerivedMatrices {
    int n = 0;
    int N = 0;
    IntMatrix omega;     // n x n, column i is equations[i].omega
    IntMatrix Lambda;    // n x N
    IntMatrix chi;       // n x N block indicator
    Int det_omega;       // nonzero for a valid system
    IntMatrix Psi;       // adj(omega) * Lambda
    IntMatrix PsiTilde;  // Psi - det_omega * chi
    RatMatrix Phi;       // Psi / det_omega
    RatMatrix PhiTilde;  // Phi - chi
    IntMatrix U;         // (N + 2n) x N: -det_omega*I, then Psi rows, then PsiTilde rows
    IntMatrix V;         // N x (N + 2n): det_omega*I | -Psi^T | PsiTilde^T
    std::vector<int> block_of;
};

// Checks shape, nonsingular omega, nonzero lambdas distinct from their own
// omega, and distinctness of the columns within each equation; a column may
// reappear in another equation. Throws DegenerateOmega, ZeroOrOmegaInLambda
// or DuplicateExponent; error messages name the offending equation and
// column (1-based).
void validate(const SystemSpec& spec);

// Validates, then builds all derived matrices.
DerivedMatrices derive(const SystemSpec& spec);

// True when no entry of Phi or PhiTilde is zero, i.e. every support exponent
// interacts with every equation and the dual-variety closure argument for a
// hypersurface applies.
bool hypersurface_check(const DerivedMatrices& d);

// gcd of the maximal minors of the n x (n + N) matrix (omega | Lambda); the
// index of the lattice generated by the support in Z^n. Throws RankDeficient
// if all maximal minors vanish.
Int lattice_index(const SystemSpec& spec);
Int lattice_index(const IntMatrix& omega, const IntMatrix& Lambda);

// The N + 2n candidate normal directions e_1..e_N, -psi_1..-psi_n,
// psi-tilde_1..psi-tilde_n, in that order. raw[i] and primitive_all[i] are
// aligned; primitive_set is the sorted deduplicated set of the primitive
// forms. Up to scaling these are the columns of V.
struct NormalDirections {
    std::vector<IntVector> raw;
    std::vector<IntVector> primitive_all;
    std::vector<IntVector> primitive_set;
};

NormalDirections theorem1_normals(const DerivedMatrices& d);

}  // namespace tropdisc
