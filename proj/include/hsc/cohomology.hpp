#pragma once

#include <optional>

#include "hsc/hermitian.hpp"

namespace hsc {

struct CohomologyReport {
    std::map<int, int> betti;
    std::map<std::pair<int, int>, int> hodge;       // Dolbeault
    std::map<std::pair<int, int>, int> bott_chern;
    std::map<std::pair<int, int>, int> aeppli;
    // Page dimension tables; frolicher_pages[0] = E1, [1] = E2.
    std::vector<std::map<std::pair<int, int>, int>> frolicher_pages;
};

CohomologyReport cohomology_report(const ComplexModel& cm);

struct DdcVerdict {
    bool holds = false;
    int dim_S = 0;  // ker d ∩ im d^c within (p,q)
    int dim_T = 0;  // im dd^c within (p,q)
    std::optional<Form> witness;  // element of S \ T when the lemma fails
};

// dd^c-lemma at bidegree (p,q): every d-closed d^c-exact (p,q)-form is
// dd^c-exact. Decided by exact rank comparison; swap_roles exchanges d, d^c.
DdcVerdict ddc_lemma_check(const ComplexModel& cm, int p, int q, bool swap_roles = false);

struct Ddc1Verdict {
    bool holds = false;
    std::optional<Form> witness;  // nonzero d-exact d^c-closed (or swapped) 1-form
};

// Both directions of the 1-form lemma: im d ∩ ker d^c = 0 and im d^c ∩ ker d = 0.
Ddc1Verdict ddc_1form_check(const ComplexModel& cm);

struct GauduchonReport {
    int b1 = 0, h10 = 0, h01 = 0;
    bool eq_2h10 = false;  // b1 == 2 h^{1,0}
    bool eq_2h01 = false;  // b1 == 2 h^{0,1}
    bool ddc11 = false;    // dd^c-lemma verdict at (1,1)
    // On invariant complexes the sheaf argument need not transfer; report both.
    bool disagreement() const { return eq_2h10 != ddc11 || eq_2h01 != ddc11; }
};

GauduchonReport gauduchon_equality(const ComplexModel& cm);

struct HoloClosednessVerdict {
    bool holds = false;
    std::optional<Form> witness;  // ∂̄-closed (p,0)-form with dα != 0
    bool norm_argument_checked = false;  // n-2 case on a Hermitian symplectic datum
};

// ker ∂̄ ∩ A^{p,0} ⊆ ker d. With a datum and p = n-2, additionally replays
// the norm argument: integrate(∂α ∧ conj(∂α) ∧ omega11) = 0 forces ∂α = 0.
HoloClosednessVerdict holomorphic_closedness(const ComplexModel& cm, int p,
                                             const HermitianSymplecticData* data = nullptr);

struct FrolicherReport {
    std::map<std::pair<int, int>, int> e1, e2;
    std::map<int, int> betti;
    bool degenerates_at_e1 = false;
    // 0 when degenerate at E1; otherwise the first page whose totals exceed betti.
    int first_nondegenerate_page = 0;
    bool e2_totals_match_betti = false;
};

FrolicherReport frolicher_check(const ComplexModel& cm);

// Basis (as columns) of A^{p,q} in the canonical degree-(p+q) coordinates.
Mat pq_basis(const ComplexModel& cm, int p, int q);

}  // namespace hsc
