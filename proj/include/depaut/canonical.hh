// canonical.hh -- the canonical boolean, distributive and boolean-syntactic
// machines, the quotient-atom and quotient-intersection bijections, and
// their dual representations.

#ifndef DEPAUT_CANONICAL_HH_
#define DEPAUT_CANONICAL_HH_

#include "depaut/jsldfa.hh"

namespace depaut {

inline constexpr int kDefaultAtomCap = 12;

// a canonical machine over a family of left predicates; elements are sets of
// atoms (boolMin, distMin) or sets of syntactic classes (synBoolMin)
struct CanonicalMachine {
    JslDfa machine;
    std::vector<Language> base_langs;  // per base index: atom / class language
    Language language;

    Language lang_of_elem(int x) const;  // union of the base languages in x
};

// all unions of atoms: the state-minimal boolean machine (carrier 2^#atoms)
CanonicalMachine bool_min(const Language& l, int atom_cap = kDefaultAtomCap);
// closure of LW(L) under unions and intersections
CanonicalMachine dist_min(const Language& l, int atom_cap = kDefaultAtomCap);
// all unions of syntactic congruence classes (carrier 2^#classes)
CanonicalMachine syn_bool_min(const Language& l, int class_cap = kDefaultAtomCap);

// kappa_L : LW(L^r) -> atoms of LP(L); returned as atom languages indexed by
// the states of the canonical dfa of reverse(l), with the transition
// relationship verified
std::vector<Language> kappa(const Language& l, int atom_cap = kDefaultAtomCap);
// lambda_L : LW(L^r) -> J(LD(L)); per reverse-state, the join-irreducible
// intersection of the quotients containing the reversed representative
std::vector<Language> lambda_bij(const Language& l, int atom_cap = kDefaultAtomCap);

// theta : fullSubset(minDfa(L^r)) -> pentagram(boolMin(L)) is an isomorphism
CheckReport dual_bool_check(const Language& l, int atom_cap = kDefaultAtomCap);
// rho_L : Det(minSat(L^r), supseteq, rev minSat(L^r)) -> pentagram(distMin(L))
CheckReport dual_dist_check(const Language& l, int atom_cap = kDefaultAtomCap);
// dep(rev(minDfa(L^r))) -> Airr(boolMin(L)) is an aut_Dep-isomorphism
CheckReport bool_dep_aut_check(const Language& l, int atom_cap = kDefaultAtomCap);
// (rev(minSat(L^r)), subseteq, minSat(L^r)) -> Airr(distMin(L)) likewise
CheckReport dist_dep_aut_check(const Language& l, int atom_cap = kDefaultAtomCap);

}  // namespace depaut

#endif
