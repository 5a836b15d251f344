#include "depaut/regex.hh"

#include <algorithm>
#include <memory>
#include <set>

namespace depaut {

namespace {

struct Ast {
    enum Kind { Empty, Eps, Lit, Cat, Alt, Star } kind;
    char c = 0;
    std::unique_ptr<Ast> l, r;
};
using AstPtr = std::unique_ptr<Ast>;

AstPtr node(Ast::Kind k) {
    auto a = std::make_unique<Ast>();
    a->kind = k;
    return a;
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    char peek() const { return pos < s.size() ? s[pos] : 0; }
    bool at_atom_start() const {
        char c = peek();
        return (c >= 'a' && c <= 'z') || c == '(' || c == '%' || c == '#';
    }

    AstPtr parse_alt() {
        AstPtr l = parse_cat();
        while (peek() == '+') {
            ++pos;
            AstPtr r = parse_cat();
            AstPtr a = node(Ast::Alt);
            a->l = std::move(l);
            a->r = std::move(r);
            l = std::move(a);
        }
        return l;
    }

    AstPtr parse_cat() {
        if (!at_atom_start())
            throw ParseError("regex: expected atom at position " + std::to_string(pos));
        AstPtr l = parse_post();
        while (at_atom_start()) {
            AstPtr r = parse_post();
            AstPtr a = node(Ast::Cat);
            a->l = std::move(l);
            a->r = std::move(r);
            l = std::move(a);
        }
        return l;
    }

    AstPtr parse_post() {
        AstPtr a = parse_atom();
        while (peek() == '*') {
            ++pos;
            AstPtr st = node(Ast::Star);
            st->l = std::move(a);
            a = std::move(st);
        }
        return a;
    }

    AstPtr parse_atom() {
        char c = peek();
        if (c >= 'a' && c <= 'z') {
            ++pos;
            AstPtr a = node(Ast::Lit);
            a->c = c;
            return a;
        }
        if (c == '%') {
            ++pos;
            return node(Ast::Eps);
        }
        if (c == '#') {
            ++pos;
            return node(Ast::Empty);
        }
        if (c == '(') {
            ++pos;
            AstPtr a = parse_alt();
            if (peek() != ')') throw ParseError("regex: missing ')'");
            ++pos;
            return a;
        }
        throw ParseError(std::string("regex: unexpected character '") + c + "'");
    }
};

// Glushkov data per subexpression over letter positions
struct Gl {
    bool nullable;
    Bits first, last;
};

struct Glushkov {
    std::vector<char> pos_letter;          // position -> letter
    std::vector<Bits> follow;              // position -> follow set

    Gl walk(const Ast* a, int n_pos) {
        switch (a->kind) {
            case Ast::Empty:
                return {false, Bits(n_pos), Bits(n_pos)};
            case Ast::Eps:
                return {true, Bits(n_pos), Bits(n_pos)};
            case Ast::Lit: {
                int p = (int)pos_letter.size();
                pos_letter.push_back(a->c);
                follow.emplace_back(n_pos);
                Gl g{false, Bits(n_pos), Bits(n_pos)};
                g.first.set(p);
                g.last.set(p);
                return g;
            }
            case Ast::Cat: {
                Gl gl = walk(a->l.get(), n_pos);
                Gl gr = walk(a->r.get(), n_pos);
                gl.last.for_each([&](int p) { follow[p] |= gr.first; });
                Gl g;
                g.nullable = gl.nullable && gr.nullable;
                g.first = gl.nullable ? (gl.first | gr.first) : gl.first;
                g.last = gr.nullable ? (gl.last | gr.last) : gr.last;
                return g;
            }
            case Ast::Alt: {
                Gl gl = walk(a->l.get(), n_pos);
                Gl gr = walk(a->r.get(), n_pos);
                return {gl.nullable || gr.nullable, gl.first | gr.first, gl.last | gr.last};
            }
            case Ast::Star: {
                Gl g = walk(a->l.get(), n_pos);
                g.last.for_each([&](int p) { follow[p] |= g.first; });
                g.nullable = true;
                return g;
            }
        }
        throw std::logic_error("unreachable");
    }
};

int count_positions(const Ast* a) {
    switch (a->kind) {
        case Ast::Lit:
            return 1;
        case Ast::Cat:
        case Ast::Alt:
            return count_positions(a->l.get()) + count_positions(a->r.get());
        case Ast::Star:
            return count_positions(a->l.get());
        default:
            return 0;
    }
}

void collect_letters(const Ast* a, std::set<char>& out) {
    if (a->kind == Ast::Lit) out.insert(a->c);
    if (a->l) collect_letters(a->l.get(), out);
    if (a->r) collect_letters(a->r.get(), out);
}

}  // namespace

Nfa regex_to_nfa(const std::string& pattern, std::optional<Alphabet> alphabet) {
    Parser p(pattern);
    AstPtr ast = p.parse_alt();
    if (p.pos != pattern.size())
        throw ParseError("regex: trailing input at position " + std::to_string(p.pos));

    Alphabet a;
    if (alphabet) {
        a = *alphabet;
        std::set<char> letters;
        collect_letters(ast.get(), letters);
        for (char c : letters)
            if (a.index(c) < 0)
                throw ParseError(std::string("regex: letter '") + c + "' not in alphabet");
    } else {
        std::set<char> letters;
        collect_letters(ast.get(), letters);
        if (letters.empty()) letters.insert('a');  // degenerate % / # patterns
        a = Alphabet(std::string(letters.begin(), letters.end()));
    }

    int n_pos = count_positions(ast.get());
    Glushkov gk;
    Gl root = gk.walk(ast.get(), n_pos);

    // states: 0 = start, 1..n_pos = positions
    int n = n_pos + 1;
    FinSet st;
    st.labels.push_back("s");
    for (int i = 0; i < n_pos; ++i)
        st.labels.push_back(std::string(1, gk.pos_letter[i]) + std::to_string(i + 1));
    std::vector<FinRel> tr(a.size(), FinRel(st, st));
    root.first.for_each([&](int q) { tr[a.index(gk.pos_letter[q])].set_edge(0, q + 1); });
    for (int p2 = 0; p2 < n_pos; ++p2)
        gk.follow[p2].for_each(
            [&](int q) { tr[a.index(gk.pos_letter[q])].set_edge(p2 + 1, q + 1); });
    Bits init(n), fin(n);
    init.set(0);
    if (root.nullable) fin.set(0);
    root.last.for_each([&](int q) { fin.set(q + 1); });
    return mk_nfa(a, st, init, fin, std::move(tr));
}

}  // namespace depaut
