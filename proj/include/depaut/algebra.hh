// algebra.hh -- transition/syntactic monoids, transition/syntactic idempotent
// semirings, power semirings, and their duality with right-quotient closure.

#ifndef DEPAUT_ALGEBRA_HH_
#define DEPAUT_ALGEBRA_HH_

#include "depaut/jsldfa.hh"

namespace depaut {

struct FinMonoid {
    std::vector<std::vector<int>> elems;  // endofunction tables (or class reps)
    std::vector<Word> witness;            // shortest word per element
    std::vector<std::vector<int>> mult;   // mult[u][v] = class of (word_u word_v)
    int unit = 0;
    std::vector<int> gens;  // per alphabet letter

    int size() const { return (int)elems.size(); }
};

// closure of the letter functions under composition, with the natural dfa
// structure accepting L(d)
struct MonoidDfa {
    FinMonoid monoid;
    Dfa dfa;  // states = monoid elements, initial = unit
};
MonoidDfa transition_monoid(const Dfa& d, int cap = 200000);
// the syntactic monoid, realized as the transition monoid of the canonical
// minimal dfa (Thm: they are isomorphic); class labels are shortest witnesses
MonoidDfa syntactic_monoid(const Language& l, int cap = 200000);

struct IdemSemiring {
    Jsl carrier;                          // elements as a union-closed family
    std::vector<std::vector<int>> elems;  // endomorphism tables of the host carrier
    std::vector<std::vector<int>> mult;   // mult[x][y]: first x, then y
    int unit = 0;
    int zero = 0;
    std::vector<int> gens;
    std::vector<std::vector<Word>> witness;  // finite word set per element (display)

    int size() const { return (int)elems.size(); }
};

// verifies associativity, unit laws, bilinearity and annihilation exhaustively
void verify_semiring(const IdemSemiring& s);

// closure of the letter endomorphisms under composition and pointwise join;
// the associated JSL-dfa accepts L(host) and is JSL-reachable
struct SemiringDfa {
    IdemSemiring semiring;
    JslDfa machine;
};
SemiringDfa transition_semiring(const JslDfa& host, int cap = 4096);
// Polak's syntactic semiring, as the transition semiring of jslDfaMin(L)
SemiringDfa syntactic_semiring(const Language& l, int cap = 4096);

// finitary power semiring of a finite monoid: full powerset carrier
IdemSemiring power_semiring(const FinMonoid& m, int cap = 4096);

// the smallest right-quotient closed JSL-dfa accepting L: rqc(jslDfaMin(L))
SimpleJslDfa jsl_dfa_syn_min(const Language& l);

// acc : (jslDfaTs(j))^pentagram -> jslDfaRqc(j^pentagram) for JSL-reachable j
CheckReport rqc_duality_check(const JslDfa& j);
// power-semiring duality against synBoolMin, and the syntactic-semiring dual
// against jslDfaSynMin
CheckReport power_dual_check(const Language& l, int cap = 4096);

std::string semiring_to_text(const IdemSemiring& s);

}  // namespace depaut

#endif
