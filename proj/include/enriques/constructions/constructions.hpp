#pragma once

#include <string>
#include <vector>

#include "enriques/algebra/poly.hpp"

namespace enriques::constructions {

enum class Status { pass, fail, open };
std::string to_string(Status s);

/// Outcome of one polynomial identity or finite search. `residual` is "0"
/// for a passing identity check; for searches it describes what was found.
struct IdentityCheckReport {
    std::string id;
    Status status = Status::fail;
    std::string residual;
    std::string details;
};

/// Quadric, involution, pencil and local-singularity identities of the
/// first quadric construction.
std::vector<IdentityCheckReport> verify_type_I();
/// Tangent pencil, A_3 and A_1 local forms of the second one.
std::vector<IdentityCheckReport> verify_type_II();
/// The quintic-symmetric surface sum x_i = sum 1/x_i = 0 in P^4.
std::vector<IdentityCheckReport> verify_type_VI();
/// Kummer-surface substitutions and involutions.
std::vector<IdentityCheckReport> verify_kummer_appendix();
/// The order-4 automorphism of y^2 + t^2 xy + y = x^3 + x^2 + t^2.
std::vector<IdentityCheckReport> verify_sigma_Y();

/// "type_I", "type_II", "type_VI", "kummer", "sigma_Y". Throws UnknownBuiltin.
std::vector<IdentityCheckReport> verify_case(const std::string& name);
std::vector<std::string> case_names();

// ---- helpers, exposed for testing ----

/// Multiplicity of the root (a : b) of a binary form in (s, r), i.e. the
/// largest e with (b s + a r)^e dividing the form. Coefficients may involve
/// other variables.
unsigned root_multiplicity(const algebra::Poly& form, algebra::Var s, algebra::Var r, algebra::Raw a, algebra::Raw b);

/// Least N <= max_n with m^N inside (g, dg/dv : v) + m^(N+1) at the origin
/// (hence, by Nakayama, inside the ideal in the local ring), or 0.
int isolated_singularity_exponent(const algebra::Poly& g, const std::vector<algebra::Var>& vars, int max_n = 4);

struct QuadraticSingularity {
    bool singular;     // g(0) = 0 and every first partial vanishes at 0
    int polar_rank;    // rank of the bilinear form of the quadratic part
    bool nondegenerate;  // the quadric of the quadratic part is smooth
};
/// Node test at the origin, valid in characteristic 2: for n variables the
/// polar form has rank n (n even), or rank n - 1 with the quadratic part
/// nonzero on its radical (n odd).
QuadraticSingularity quadratic_singularity(const algebra::Poly& g, const std::vector<algebra::Var>& vars);

}  // namespace enriques::constructions
