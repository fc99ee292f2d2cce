#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cellres/cell_complex.hpp"
#include "cellres/homology.hpp"
#include "cellres/weighting.hpp"

namespace cellres {

/// All lcms of nonempty subsets of the generator labels, deduplicated and
/// sorted by total degree then lexicographically.  Restrictions only change
/// at these multidegrees, so scanning them decides the acyclicity criterion.
std::vector<Monomial> lcm_lattice(const VertexLabeling& labeling);

/// In which order the oracle walks the lattice.  JoinIrreducibleFirst visits
/// the join-irreducible elements before the rest (each slice still in
/// degree-lex order); the verdict must not depend on the choice.
enum class LatticeScan { DegreeLex, JoinIrreducibleFirst };

struct ResolutionVerdict {
    enum class Method { Oracle, Theorem };

    bool is_resolution = false;
    Method method = Method::Oracle;
    std::optional<Monomial> witness;                 // first non-acyclic multidegree
    std::optional<HomologyProfile> witness_profile;  // its homology
};

struct TorsionSighting {
    Monomial multidegree;
    int degree = 0;
    std::vector<BigInt> invariants;
};

struct OracleResult {
    ResolutionVerdict verdict;
    std::vector<TorsionSighting> torsion;
};

/// The acyclicity criterion, decided by brute force: every lattice
/// restriction must be empty or acyclic over the chosen coefficient field.
/// scan_all keeps scanning past the first failure (for torsion reporting);
/// the reported witness is always the first failure in scan order.
OracleResult bs_oracle_detailed(const LabeledComplex& complex, int characteristic,
                                LatticeScan order = LatticeScan::DegreeLex,
                                bool scan_all = false);

ResolutionVerdict bs_oracle(const LabeledComplex& complex, int characteristic,
                            LatticeScan order = LatticeScan::DegreeLex);

struct TheoremTraceStep {
    std::int64_t alpha = 0;
    Side side = Side::X;
    int index = 0;  // index in the original graph
};

/// The recursion path of the inductive decider: vertex deletions ending in a
/// one-sided base case, or the level where no vertex qualifies.
struct TheoremTrace {
    std::vector<TheoremTraceStep> steps;
    bool reached_base = false;
    std::int64_t fail_alpha = 0;  // the minimum at the failing level
};

std::string trace_to_string(const TheoremTrace& trace);

/// The inductive decider: true when m=1 or n=1, or when some vertex has all
/// incident weights equal to the current minimum and deleting it recurses to
/// true.  The trace records the first qualifying vertex (X side first) at
/// each level; the boolean itself is existential over the choices.
std::pair<bool, TheoremTrace> theorem_predicate(const EdgeWeighting& w);

/// Closed form for the (k+1)st Betti number when the decider accepts:
/// sum over j=1..k+1 of C(n,j)*C(m, k-j+2).
std::int64_t betti_formula(int m, int n, int k);

struct SurveyOptions {
    int m = 1;
    int n = 1;
    std::int64_t max_weight = 1;
    int characteristic = 0;
    int threads = 0;  // 0 = hardware concurrency (or CELLRES_THREADS via CLI)
    bool keep_verdicts = false;
    std::size_t feasibility_cap = 2'000'000;  // refuse larger weighting grids
};

struct SurveyDisagreement {
    std::vector<std::int64_t> weights;  // row-major
    bool theorem_ok = false;
    bool oracle_ok = false;
    std::optional<Monomial> witness;
};

struct SurveyTorsion {
    std::vector<std::int64_t> weights;
    TorsionSighting sighting;
};

struct SurveyVerdict {
    std::vector<std::int64_t> weights;
    bool theorem_ok = false;
    bool oracle_ok = false;
};

struct SurveyReport {
    int m = 0, n = 0;
    std::int64_t max_weight = 0;
    int characteristic = 0;
    std::size_t total = 0;
    std::size_t agreements = 0;
    std::size_t predicate_true = 0;
    std::size_t betti_mismatches = 0;
    std::size_t minimality_failures = 0;
    std::size_t compose_failures = 0;
    std::vector<SurveyDisagreement> disagreements;
    std::vector<SurveyTorsion> torsion;
    std::vector<SurveyVerdict> verdicts;  // only when keep_verdicts

    bool all_agree() const { return disagreements.empty(); }
};

/// Exhaustive comparison of the two deciders over every weighting with
/// entries in 1..max_weight, in row-major lexicographic order.  For every
/// predicate-true weighting the complex is additionally checked to be
/// minimal, to square to zero, and to have ranks matching betti_formula.
/// Weightings are distributed across worker threads; results are merged in
/// weighting order, so the report is deterministic.
SurveyReport survey(const SurveyOptions& options);

}  // namespace cellres
