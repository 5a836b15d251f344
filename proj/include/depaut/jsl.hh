// jsl.hh -- finite join-semilattices as union-closed set families, their
// morphisms and adjoints, irreducibles, and the Open/Pirr equivalence.

#ifndef DEPAUT_JSL_HH_
#define DEPAUT_JSL_HH_

#include <string>
#include <unordered_map>
#include <vector>

#include "depaut/finrel.hh"

namespace depaut {

// A finite join-semilattice, concretely: a union-closed family of subsets of
// `base` containing the empty set. Join is union, order is inclusion, meets
// exist as the largest member below the intersection.
struct Jsl {
    FinSet base;
    std::vector<Bits> family;  // canonically sorted, union-closed, contains {}

    int size() const { return (int)family.size(); }
    int index_of(const Bits& b) const;  // -1 if absent
    int bottom() const;
    int top() const;

    bool leq(int x, int y) const { return family[x].subset_of(family[y]); }
    int join2(int x, int y) const;
    int meet2(int x, int y) const;
    int join(const std::vector<int>& xs) const;  // empty join = bottom
    int meet(const std::vector<int>& xs) const;  // empty meet = top

    std::vector<int> join_irreducibles() const;
    std::vector<int> meet_irreducibles() const;

    bool operator==(const Jsl& o) const { return base == o.base && family == o.family; }
};

// closes under union, inserts the empty set, sorts canonically
Jsl mk_jsl(FinSet base, const std::vector<Bits>& members);
Jsl powerset_jsl(const FinSet& base);

struct JslMor {
    Jsl dom, cod;
    std::vector<int> map;  // per dom family index, a cod family index
    // adjoints live between the order duals, realized on the same carriers
    // with reversed leq; this marks that orientation
    bool between_duals = false;
};

// validates map({}) = {} and map(X u Y) = map(X) u map(Y) on all pairs
JslMor mk_jsl_mor(Jsl dom, Jsl cod, std::vector<int> map);
JslMor jsl_identity(const Jsl& s);
JslMor jsl_compose(const JslMor& f, const JslMor& g);  // g after f
bool is_bijective(const JslMor& f);

// the adjoint f_*(t) = join{ s : f(s) <= t }, a morphism between the order
// duals realized on the same carriers; adjoint(adjoint(f)) = f
JslMor adjoint(const JslMor& f);

// the order-dual join-semilattice realized concretely over base J(s):
// element x maps to { j in J(s) : j not<= x }
struct DualJsl {
    Jsl jsl;
    std::vector<int> to_dual;    // original index -> dual index
    std::vector<int> from_dual;  // dual index -> original index
};
DualJsl dual_jsl(const Jsl& s);

// Open : Dep -> JSL_f
Jsl open_of(const FinRel& g);
JslMor open_mor(const DepMor& f);

// Pirr : JSL_f -> Dep
FinRel pirr_of(const Jsl& s);
DepMor pirr_mor(const JslMor& f);

// rep_S : S -> Open(Pirr S), s |-> { m in M(S) : s not<= m }; a bijective morphism
JslMor rep_iso(const Jsl& s);

struct RoundTripReport {
    int families_checked = 0;
    int relations_checked = 0;
    bool ok = true;
    std::string detail;
};
// randomized cross-check of both natural isomorphisms (rep and red)
RoundTripReport check_equivalence_round_trips(uint64_t seed, int n_cases = 100);

std::string jsl_to_text(const Jsl& s);
std::string jsl_to_dot(const Jsl& s);  // Hasse diagram

}  // namespace depaut

#endif
