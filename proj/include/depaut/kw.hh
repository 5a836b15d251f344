// kw.hh -- L-coverings, grids, induced nfas, legitimacy, duals, and the
// exact Kameda-Weiner minimal-nfa search.

#ifndef DEPAUT_KW_HH_
#define DEPAUT_KW_HH_

#include "depaut/jsldfa.hh"

namespace depaut {

inline constexpr int kDefaultGridCap = 22;

struct Grid {
    Bits rows;  // subset of LW(L) indices
    Bits cols;  // subset of LW(L^r) indices
};

// all inclusion-maximal bicliques of the dependency relation, in a
// deterministic order; throws SearchCapExceeded beyond the cap
std::vector<Grid> grids(const Language& l, int cap = kDefaultGridCap);

struct LCovering {
    Language language;
    FinRel rel;    // H subseteq H_s x LW(L^r)
    FinRel lower;  // the computed lower component over LW(L) x H_s
};

// computes the lower component by the pointwise formula and validates the
// factorization lower ; rel = DR_L; throws NotACovering
LCovering mk_covering(const Language& l, const FinRel& rel);
// relabel rows as the grids A x B they generate
LCovering biclique_form(const LCovering& c);
// the dual L^r-covering, converse of the lower component
LCovering dual_covering(const LCovering& c);
bool is_maximal(const LCovering& c);

Nfa induced_nfa(const LCovering& c);
bool is_legitimate(const LCovering& c);

// the covering whose rows are a chosen set of grids
LCovering covering_of_grids(const Language& l, const std::vector<Grid>& gs,
                            const std::vector<int>& chosen);

struct MinimalNfaResult {
    Nfa nfa;
    LCovering covering;
    std::vector<int> grid_indices;
};

// exact minimum legitimate covering by grids; iterates cover sizes from the
// bipartite-dimension lower bound; when the result is small enough the
// Kameda-Weiner optimality guarantee is additionally cross-checked against
// exhaustive enumeration of all smaller nfas
MinimalNfaResult minimal_nfa(const Language& l, int grid_cap = kDefaultGridCap);
// all minimal legitimate covers, deduplicated by induced-nfa isomorphism
std::vector<MinimalNfaResult> enumerate_minimal_covers(const Language& l,
                                                       int grid_cap = kDefaultGridCap);

// no nfa with fewer than `states` states accepts l (exhaustive; feasible up
// to 2-state machines over alphabets of <= 2 letters)
bool no_smaller_nfa_exists(const Language& l, int states);

// is there a legitimate covering by exactly k grids?
bool exists_legitimate_cover(const Language& l, int k, int grid_cap = kDefaultGridCap);

// the atomizer covering H_e of a machine accepting l, validated legitimate
LCovering covering_of_extension(const JslDfa& j);

std::string covering_to_text(const LCovering& c);

}  // namespace depaut

#endif
