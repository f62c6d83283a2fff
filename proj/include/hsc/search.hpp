#pragma once

#include <cstdint>
#include <optional>

#include "hsc/hermitian.hpp"

namespace hsc {

// Feasibility search: find x with d(omega_x) = 0 (by construction) and
// H(x) = omega_x^{1,1}(., J.) positive definite, or report not finding one.
// found is a proof (exact certificate); not_found is only evidence.
struct FeasibilityProblem {
    std::shared_ptr<const ComplexModel> cm;
    std::vector<Form> closed_basis;  // real basis of ker d on 2-forms
    std::vector<Mat> h_maps;         // H_i: exact symmetric matrix per basis form
};

// Exact basis of ker(d) restricted to real 2-forms.
std::vector<Form> closed_two_form_space(const LieAlgebraModel& model);

FeasibilityProblem make_problem(std::shared_ptr<const ComplexModel> cm);

struct SearchParams {
    int restarts = 64;
    int max_iters = 400;
    double step = 0.25;
    double tol = 1e-6;
    uint64_t seed = 0;
};

struct SearchReport {
    std::string status;  // "found" | "not_found"
    std::vector<Rat> candidate;  // rational coefficients when found
    bool certified = false;
    double best_min_eigenvalue = 0.0;
    int restarts_used = 0;
    uint64_t seed = 0;
    std::string infeasibility_certificate;  // reserved; empty in v1
};

// Deterministic given (problem, params): restarts own independent RNG streams
// derived from (seed, restart index) and run concurrently; results merge by
// restart index.
SearchReport feasibility_search(const FeasibilityProblem& problem, const SearchParams& params);

struct CertifyResult {
    bool ok = false;
    std::string reason;  // failing minor / closedness witness on rejection
    std::optional<HermitianSymplecticData> data;
};

// Build omega_x exactly from rational coefficients and run validate_hs.
CertifyResult certify_candidate(const FeasibilityProblem& problem, const std::vector<Rat>& x);

}  // namespace hsc
