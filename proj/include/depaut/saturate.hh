// saturate.hh -- saturation predicates on nfas, the irreducible
// simplification, transition-maximal extension, atomizer, and the three
// atomicity characterizations with two-sided verification.

#ifndef DEPAUT_SATURATE_HH_
#define DEPAUT_SATURATE_HH_

#include "depaut/canonical.hh"
#include "depaut/jsldfa.hh"
#include "depaut/kw.hh"

namespace depaut {

struct SaturationWitness {
    std::string kind;  // "initial", "final", "transition"
    int state = -1, state2 = -1;
    int letter = -1;
};

struct SaturationReport {
    bool locally = true;
    bool intersection = true;
    bool transition_maximal = true;
    bool union_free = true;
    std::vector<SaturationWitness> locally_witnesses;
    std::vector<SaturationWitness> intersection_witnesses;
    std::vector<SaturationWitness> transition_maximal_witnesses;
    std::vector<SaturationWitness> union_free_witnesses;

    std::string to_text() const;
};

SaturationReport saturation(const Nfa& n);

// greedy fixpoint: add initials, then finals, then transitions in (src,
// letter, dst) order whenever the language is preserved
Nfa transition_maximal_extension(const Nfa& n);

// states = join-irreducible accepted languages of the full subset
// construction; locally-saturated, union-free, never larger
Nfa simple_irr(const Nfa& n);

struct AtomizerResult {
    std::vector<Language> elem_atomized;  // per carrier element, cl_L(language)
    std::vector<Language> family;         // the atomized semilattice, deduplicated
};
AtomizerResult atomizer(const JslDfa& j);
// H_e over J(simplified carrier) x LW(L^r); edge iff v^r in cl_L(j-language)
FinRel atomizer_relation(const JslDfa& j);
// theta_e : atomized family -> open sets of H_e is a union-preserving bijection
CheckReport atomizer_open_check(const JslDfa& j);

struct AtomicityReport {
    bool atomic_direct = false, atomic_via_rsc = false;
    bool positive_direct = false, positive_via_order = false;
    bool subatomic_direct = false, subatomic_via_monoid = false;
    bool direct_available = true;  // false when a cap was hit
    std::string detail;

    bool consistent() const {
        return !direct_available ||
               (atomic_direct == atomic_via_rsc && positive_direct == positive_via_order &&
                subatomic_direct == subatomic_via_monoid);
    }
    std::string to_text() const;
};

AtomicityReport atomicity(const Nfa& n, int atom_cap = kDefaultAtomCap);

}  // namespace depaut

#endif
