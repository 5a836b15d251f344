// regex.hh -- the CLI-facing regex grammar, compiled to epsilon-free nfas via
// the position (Glushkov) construction.
//
// grammar: lowercase letters are literals, juxtaposition concatenates,
// '+' is union, '*' is Kleene star, '(' ')' group, '%' is the empty word,
// '#' is the empty language.

#ifndef DEPAUT_REGEX_HH_
#define DEPAUT_REGEX_HH_

#include <optional>
#include <string>

#include "depaut/automata.hh"

namespace depaut {

// throws ParseError on malformed input; the alphabet is the set of letters
// occurring in the regex unless one is supplied
Nfa regex_to_nfa(const std::string& pattern, std::optional<Alphabet> alphabet = std::nullopt);

}  // namespace depaut

#endif
