#include "cellres/criteria.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cellres/chain_complex.hpp"

namespace cellres {

std::vector<Monomial> lcm_lattice(const VertexLabeling& labeling) {
    if (labeling.labels.empty()) throw std::invalid_argument("lcm_lattice: empty labeling");
    std::set<Monomial> seen;
    for (const Monomial& g : labeling.labels) {
        std::vector<Monomial> fresh;
        fresh.push_back(g);
        for (const Monomial& f : seen) fresh.push_back(lcm(f, g));
        seen.insert(fresh.begin(), fresh.end());
    }
    std::vector<Monomial> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), degree_lex_less);
    return out;
}

namespace {

std::vector<Monomial> scan_sequence(const std::vector<Monomial>& lattice, LatticeScan order) {
    if (order == LatticeScan::DegreeLex) return lattice;
    // Join-irreducible: not the lcm of the strictly smaller lattice elements
    // below it.
    std::vector<Monomial> irreducible, rest;
    for (const Monomial& f : lattice) {
        Monomial join = Monomial::one(f.ambient());
        for (const Monomial& e : lattice)
            if (e != f && divides(e, f)) join = lcm(join, e);
        (join == f ? rest : irreducible).push_back(f);
    }
    irreducible.insert(irreducible.end(), rest.begin(), rest.end());
    return irreducible;
}

}  // namespace

OracleResult bs_oracle_detailed(const LabeledComplex& complex, int characteristic,
                                LatticeScan order, bool scan_all) {
    OracleResult out;
    out.verdict.method = ResolutionVerdict::Method::Oracle;
    out.verdict.is_resolution = true;
    for (const Monomial& f : scan_sequence(lcm_lattice(complex.labeling()), order)) {
        LabeledComplex restriction = complex.restricted(f);
        if (restriction.is_empty()) continue;
        HomologyProfile profile = reduced_homology(restriction, characteristic);
        for (const auto& [deg, invs] : profile.torsion)
            out.torsion.push_back({f, deg, invs});
        if (!profile.all_zero() && out.verdict.is_resolution) {
            out.verdict.is_resolution = false;
            out.verdict.witness = f;
            out.verdict.witness_profile = profile;
            if (!scan_all) return out;
        }
    }
    return out;
}

ResolutionVerdict bs_oracle(const LabeledComplex& complex, int characteristic,
                            LatticeScan order) {
    return bs_oracle_detailed(complex, characteristic, order, false).verdict;
}

namespace {

bool predicate_recurse(const EdgeWeighting& w, const std::vector<int>& x_ids,
                       const std::vector<int>& y_ids, TheoremTrace& trace) {
    if (w.m == 1 || w.n == 1) {
        trace.reached_base = true;
        return true;
    }
    const std::int64_t alpha = min_weight(w);
    struct Candidate {
        Side side;
        int local;
    };
    std::vector<Candidate> candidates;
    for (int i = 1; i <= w.m; ++i) {
        bool all = true;
        for (int j = 1; j <= w.n && all; ++j) all = w.weight(i, j) == alpha;
        if (all) candidates.push_back({Side::X, i});
    }
    for (int j = 1; j <= w.n; ++j) {
        bool all = true;
        for (int i = 1; i <= w.m && all; ++i) all = w.weight(i, j) == alpha;
        if (all) candidates.push_back({Side::Y, j});
    }
    if (candidates.empty()) {
        trace.reached_base = false;
        trace.fail_alpha = alpha;
        return false;
    }
    TheoremTrace first_failure;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const auto& [side, local] = candidates[k];
        std::vector<int> xs = x_ids, ys = y_ids;
        int original = side == Side::X ? x_ids[local - 1] : y_ids[local - 1];
        if (side == Side::X)
            xs.erase(xs.begin() + (local - 1));
        else
            ys.erase(ys.begin() + (local - 1));
        TheoremTrace sub;
        sub.steps = trace.steps;
        sub.steps.push_back({alpha, side, original});
        if (predicate_recurse(delete_vertex(w, side, local), xs, ys, sub)) {
            trace = sub;
            return true;
        }
        if (k == 0) first_failure = sub;
    }
    trace = first_failure;
    return false;
}

}  // namespace

std::pair<bool, TheoremTrace> theorem_predicate(const EdgeWeighting& w) {
    TheoremTrace trace;
    std::vector<int> xs(w.m), ys(w.n);
    for (int i = 0; i < w.m; ++i) xs[i] = i + 1;
    for (int j = 0; j < w.n; ++j) ys[j] = j + 1;
    bool ok = predicate_recurse(w, xs, ys, trace);
    return {ok, trace};
}

std::string trace_to_string(const TheoremTrace& trace) {
    std::ostringstream os;
    for (const auto& step : trace.steps)
        os << "v=" << (step.side == Side::X ? "X" : "Y") << step.index << " -> ";
    if (trace.reached_base)
        os << "base";
    else
        os << "stuck at alpha=" << trace.fail_alpha;
    return os.str();
}

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

std::int64_t betti_formula(int m, int n, int k) {
    if (m < 1 || n < 1 || k < 0) throw std::invalid_argument("betti_formula: bad arguments");
    std::int64_t out = 0;
    for (int j = 1; j <= k + 1; ++j) out += binomial(n, j) * binomial(m, k - j + 2);
    return out;
}

namespace {

EdgeWeighting weighting_from_flat(int m, int n, const std::vector<std::int64_t>& flat) {
    std::vector<std::vector<std::int64_t>> rows(m, std::vector<std::int64_t>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = flat[i * n + j];
    return EdgeWeighting(m, n, std::move(rows));
}

struct PerWeighting {
    std::vector<std::int64_t> weights;
    bool theorem_ok = false;
    bool oracle_ok = false;
    std::optional<Monomial> witness;
    std::vector<TorsionSighting> torsion;
    bool betti_ok = true;
    bool minimal_ok = true;
    bool compose_ok = true;
};

PerWeighting examine_weighting(int m, int n, const std::vector<std::int64_t>& flat,
                               int characteristic) {
    PerWeighting out;
    out.weights = flat;
    EdgeWeighting w = weighting_from_flat(m, n, flat);
    auto [theorem_ok, trace] = theorem_predicate(w);
    out.theorem_ok = theorem_ok;
    LabeledComplex complex = LabeledComplex::full(edge_weight_labels(w));
    OracleResult oracle = bs_oracle_detailed(complex, characteristic, LatticeScan::DegreeLex,
                                             /*scan_all=*/true);
    out.oracle_ok = oracle.verdict.is_resolution;
    out.witness = oracle.verdict.witness;
    out.torsion = std::move(oracle.torsion);
    if (theorem_ok) {
        FreeChainComplex f = build_cellular(complex);
        out.minimal_ok = is_minimal(f).minimal;
        out.compose_ok = compose_is_zero(f).ok;
        for (int k = 0; k <= m + n - 2; ++k)
            if (static_cast<std::int64_t>(f.rank(k + 1)) != betti_formula(m, n, k))
                out.betti_ok = false;
        if (f.top_degree() != m + n - 1) out.betti_ok = false;
    }
    return out;
}

}  // namespace

SurveyReport survey(const SurveyOptions& options) {
    if (options.m < 1 || options.n < 1 || options.max_weight < 1)
        throw std::invalid_argument("survey: bad dimensions or weight bound");
    const int cells = options.m * options.n;
    double estimate = 1;
    for (int k = 0; k < cells; ++k) estimate *= static_cast<double>(options.max_weight);
    if (estimate > static_cast<double>(options.feasibility_cap)) {
        std::ostringstream os;
        os << "survey: search space of " << estimate << " weightings exceeds the cap of "
           << options.feasibility_cap;
        throw std::invalid_argument(os.str());
    }
    const std::size_t total = static_cast<std::size_t>(estimate);

    auto weighting_at = [&](std::size_t index) {
        std::vector<std::int64_t> flat(cells);
        for (int k = cells - 1; k >= 0; --k) {
            flat[k] = 1 + static_cast<std::int64_t>(index % options.max_weight);
            index /= options.max_weight;
        }
        return flat;
    };

    unsigned threads = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, total == 0 ? 1 : static_cast<unsigned>(total));

    std::vector<PerWeighting> results(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= total) return;
            results[k] = examine_weighting(options.m, options.n, weighting_at(k),
                                           options.characteristic);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SurveyReport report;
    report.m = options.m;
    report.n = options.n;
    report.max_weight = options.max_weight;
    report.characteristic = options.characteristic;
    report.total = total;
    for (const PerWeighting& r : results) {
        if (r.theorem_ok == r.oracle_ok)
            ++report.agreements;
        else
            report.disagreements.push_back({r.weights, r.theorem_ok, r.oracle_ok, r.witness});
        if (r.theorem_ok) {
            ++report.predicate_true;
            if (!r.betti_ok) ++report.betti_mismatches;
            if (!r.minimal_ok) ++report.minimality_failures;
            if (!r.compose_ok) ++report.compose_failures;
        }
        for (const TorsionSighting& t : r.torsion) report.torsion.push_back({r.weights, t});
        if (options.keep_verdicts)
            report.verdicts.push_back({r.weights, r.theorem_ok, r.oracle_ok});
    }
    return report;
}

}  // namespace cellres
