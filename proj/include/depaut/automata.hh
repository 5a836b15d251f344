// automata.hh -- classical nfas and dfas over small lowercase alphabets:
// acceptance, reversal, reachable subset construction, reach/coreach parts,
// isomorphism checks, JSON and DOT interchange.

#ifndef DEPAUT_AUTOMATA_HH_
#define DEPAUT_AUTOMATA_HH_

#include <string>
#include <vector>

#include "depaut/finrel.hh"

namespace depaut {

struct Alphabet {
    std::string symbols;  // strictly increasing, nonempty, <= 26 lowercase letters

    Alphabet() = default;
    explicit Alphabet(std::string s);
    int size() const { return (int)symbols.size(); }
    int index(char c) const;  // -1 if absent
    char letter(int i) const { return symbols[i]; }
    bool operator==(const Alphabet& o) const { return symbols == o.symbols; }
};

// a word is a string over the alphabet; the empty string is epsilon
using Word = std::string;

struct Nfa {
    Alphabet alphabet;
    FinSet states;
    Bits initial, final;
    std::vector<FinRel> trans;  // per letter, states x states

    int size() const { return states.size(); }
};

Nfa mk_nfa(Alphabet a, FinSet states, Bits initial, Bits final, std::vector<FinRel> trans);
Nfa empty_nfa(const Alphabet& a);  // one non-initial non-final state

bool accepts(const Nfa& n, const Word& w);
Bits run(const Nfa& n, const Bits& from, const Word& w);
Nfa at_states(const Nfa& n, const Bits& s);
Nfa reverse(const Nfa& n);

struct Dfa {
    Alphabet alphabet;
    FinSet states;
    int initial = 0;
    Bits final;
    std::vector<std::vector<int>> next;  // [letter][state]

    int size() const { return states.size(); }
    int step(int q, const Word& w) const;
};

Nfa to_nfa(const Dfa& d);
Dfa mk_dfa(const Nfa& n);  // requires |I| = 1 and total functional transitions

// reachable subset construction (BFS order, letters in alphabet order);
// states named by their subsets, optionally also returned as bitsets
Dfa rsc(const Nfa& n, std::vector<Bits>* subsets_out = nullptr);
Nfa reach_part(const Nfa& n);
Nfa coreach_part(const Nfa& n);

// exact nfa isomorphism via backtracking with signature pruning
bool iso_nfa(const Nfa& a, const Nfa& b);
// dfa isomorphism; exact (canonical BFS form when reachable, backtracking otherwise)
bool iso_dfa(const Dfa& a, const Dfa& b);

std::string nfa_to_json(const Nfa& n);
Nfa nfa_from_json(const std::string& text);
std::string nfa_to_dot(const Nfa& n);

}  // namespace depaut

#endif
