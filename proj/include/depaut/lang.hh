// lang.hh -- regular languages as canonical values: the minimal complete
// BFS-ordered dfa is the representation, structural equality is language
// equality. Quotients, reversal, the dependency relation, dr_L and atoms.

#ifndef DEPAUT_LANG_HH_
#define DEPAUT_LANG_HH_

#include <optional>
#include <string>
#include <vector>

#include "depaut/automata.hh"

namespace depaut {

struct Language {
    Alphabet alphabet;
    // minimal complete dfa, states numbered in BFS order from state 0,
    // exploring letters in alphabet order
    std::vector<std::vector<int>> next;  // [letter][state]
    Bits final;

    int states() const { return final.size(); }
    bool operator==(const Language& o) const {
        return alphabet == o.alphabet && next == o.next && final == o.final;
    }
    bool operator!=(const Language& o) const { return !(*this == o); }
    bool operator<(const Language& o) const;  // usable as a map key
    size_t hash() const;
};

Language from_nfa(const Nfa& n);
Language from_dfa(const Dfa& d);
Language empty_language(const Alphabet& a);
Language epsilon_language(const Alphabet& a);
Language full_language(const Alphabet& a);
Language word_language(const Alphabet& a, const Word& w);

Dfa canonical_dfa(const Language& l);  // view the representation as a Dfa

bool member(const Language& l, const Word& w);
bool is_empty(const Language& l);
Language reverse(const Language& l);
Language complement(const Language& l);
Language union_lang(const Language& a, const Language& b);
Language intersect_lang(const Language& a, const Language& b);
bool subset_lang(const Language& a, const Language& b);
bool intersects_lang(const Language& a, const Language& b);

Language left_word_quotient(const Language& l, const Word& u);

struct QuotientIndex {
    Language language;
    std::vector<Word> reps;  // per canonical state, the BFS-minimal word reaching it

    int size() const { return (int)reps.size(); }
    // the quotient at state i, as a Language
    Language quotient(int i) const;
};
QuotientIndex left_quotients(const Language& l);

Language left_set_quotient(const Language& l, const Language& u_set);
Language right_quotient(const Language& l, const Language& v_set);

// dr_L(X) = [complement(X)^r]^{-1} L for X a left quotient of reverse(l)
// (a union of its left word quotients); cross-checked against the union
// formula; throws if X is not such a quotient
Language dr_l(const Language& l, const Language& x);

// rows = LW(L), columns = LW(L^r), edge iff u v^r in L
FinRel dependency_relation(const Language& l);

// the E_L-classes, indexed by the states of the canonical dfa of reverse(l)
// (atom i is the class of reverse(rep_i)); pairwise disjoint, union = Sigma^*
std::vector<Language> atoms(const Language& l);

// union of the atoms meeting x; the smallest left predicate containing x
Language cl_l(const Language& l, const Language& x);

// some word accepted (shortest, alphabet order), if any
std::optional<Word> shortest_word(const Language& l);

// canonical complete minimal dfa of an nfa's language
Dfa min_dfa_of(const Nfa& n);
// the dfa of accepted languages plus the acceptance map state -> language index
struct SimpleDfa {
    Dfa dfa;
    std::vector<int> acc;              // original state -> simple state
    std::vector<Language> state_lang;  // per simple state
};
SimpleDfa simple_dfa(const Dfa& d);

std::string word_display(const Word& w);  // epsilon shown as "%"

}  // namespace depaut

#endif
