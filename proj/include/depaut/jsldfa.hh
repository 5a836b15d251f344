// jsldfa.hh -- dfas interpreted in join-semilattices and dependency automata:
// Det/Airr/Rev, the pentagram dual, reach/simple factorization, the
// state-minimal JSL-dfa, the canonical RFSA and Brzozowski's construction.

#ifndef DEPAUT_JSLDFA_HH_
#define DEPAUT_JSLDFA_HH_

#include "depaut/jsl.hh"
#include "depaut/lang.hh"

namespace depaut {

// deterministic automaton whose state space is a Jsl, transitions preserve
// joins and the non-final states are the down-set of top_nonfinal
struct JslDfa {
    Alphabet alphabet;
    Jsl carrier;
    int init = 0;
    std::vector<std::vector<int>> trans;  // [letter][element]
    int top_nonfinal = 0;

    int size() const { return carrier.size(); }
    bool is_final(int x) const { return !carrier.leq(x, top_nonfinal); }
};

// validates that each letter's action is a join-morphism
JslDfa mk_jsl_dfa(Alphabet a, Jsl carrier, int init, std::vector<std::vector<int>> trans,
                  int top_nonfinal);

bool accept_j(const JslDfa& d, const Word& w);
// language of the underlying dfa started at element x
Language lang_of_element(const JslDfa& d, int x);
Language lang_of(const JslDfa& d);

// two machines isomorphic under a given element bijection?
bool is_jsl_dfa_iso(const JslDfa& a, const JslDfa& b, const std::vector<int>& map);
// isomorphism located by matching element languages (exact for simple
// machines, where languages are distinct; empty if none)
std::optional<std::vector<int>> iso_by_language(const JslDfa& a, const JslDfa& b);
// exact isomorphism search over join-irreducible matchings
std::optional<std::vector<int>> find_jsl_dfa_iso(const JslDfa& a, const JslDfa& b);
// identical representation: same family, init, transition tables, finals
bool same_machine(const JslDfa& a, const JslDfa& b);

// the dual machine on the order-dual carrier with adjoint transitions;
// accepts the reversed language, involutive up to isomorphism
JslDfa pentagram(const JslDfa& d);

struct DepAut {
    Nfa lower;
    FinRel rel;
    Nfa upper;
};

// validates the dependency automaton axioms; throws NotADepMorphism
DepAut mk_dep_aut(Nfa lower, FinRel rel, Nfa upper);

DepAut dep_of_nfa(const Nfa& n);     // (N, diagonal, rev N)
JslDfa full_subset(const Nfa& n);    // Det(dep(N)): powerset carrier
DepAut dep_of_lang(const Language& l);  // (minDfa L, DR_L, minDfa L^r)

JslDfa det(const DepAut& d);
DepAut airr(const JslDfa& j);
DepAut rev_dep(const DepAut& d);

JslDfa jsl_reach(const JslDfa& j);
bool is_jsl_reachable(const JslDfa& j);
bool is_simple(const JslDfa& j);

struct SimpleJslDfa {
    JslDfa machine;
    std::vector<int> acc;              // original element -> new element
    std::vector<Language> elem_langs;  // per new element
};
SimpleJslDfa jsl_simple(const JslDfa& j);

// a simplified JSL-dfa over a union-closed family of languages, realized
// through the rep map over the family's meet-irreducibles
SimpleJslDfa jsl_dfa_from_language_family(std::vector<Language> family, const Language& l);

// the state-minimal JSL-dfa: union closure of LW(L) represented as the
// open sets of the dependency relation over the LW(L^r) base
struct MinJslDfa {
    JslDfa machine;
    QuotientIndex lw;       // LW(L) index (rows of DR_L)
    QuotientIndex lw_rev;   // LW(L^r) index (the carrier base)
    std::vector<int> quotient_elem;  // per LW(L) state, its carrier element
};
MinJslDfa jsl_dfa_min(const Language& l);

struct CheckReport {
    bool ok = true;
    std::string detail;
};

// builds alpha(X) = { v^{-1}L^r : v in X^r } explicitly and asserts it is a
// bijective JSL-dfa morphism jslDfaMin(L) -> Det(dep(L))
CheckReport dependency_theorem_check(const Language& l);

// states = join-irreducible left quotients; N_a(X1,X2) iff X2 subseteq a^{-1}X1
Nfa canonical_rfsa(const Language& l);
// the saturated nfa on all of LW(L)
Nfa sat_min_dfa(const Language& l);

// rsc(rev(rsc(rev n))); cross-asserts against the canonical minimal dfa
Dfa brzozowski_minimize(const Nfa& n, bool cross_check = true);

// right-quotient closure: smallest simplified machine whose language family
// contains all right word quotients of the join-irreducible languages
SimpleJslDfa rqc(const JslDfa& j);

std::string jsl_dfa_to_json(const JslDfa& d);
std::string dep_aut_to_dot(const DepAut& d);

}  // namespace depaut

#endif
