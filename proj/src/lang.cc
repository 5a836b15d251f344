#include "depaut/lang.hh"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace depaut {

bool Language::operator<(const Language& o) const {
    if (alphabet.symbols != o.alphabet.symbols) return alphabet.symbols < o.alphabet.symbols;
    if (states() != o.states()) return states() < o.states();
    if (next != o.next) return next < o.next;
    return final < o.final;
}

size_t Language::hash() const {
    size_t h = std::hash<std::string>()(alphabet.symbols);
    for (const auto& row : next)
        for (int v : row) h = h * 1000003u + (size_t)v;
    return h * 31 + final.hash();
}

namespace {

// Moore partition refinement on a complete dfa given by tables
std::vector<int> minimize_classes(int n, const std::vector<std::vector<int>>& next,
                                  const Bits& final) {
    std::vector<int> cls(n);
    for (int q = 0; q < n; ++q) cls[q] = final.test(q) ? 1 : 0;
    int n_cls = 2;
    for (;;) {
        std::map<std::vector<int>, int> sig_to_cls;
        std::vector<int> next_cls(n);
        for (int q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.push_back(cls[q]);
            for (const auto& row : next) sig.push_back(cls[row[q]]);
            auto [it, fresh] = sig_to_cls.try_emplace(sig, (int)sig_to_cls.size());
            (void)fresh;
            next_cls[q] = it->second;
        }
        if ((int)sig_to_cls.size() == n_cls && next_cls == cls) return cls;
        n_cls = (int)sig_to_cls.size();
        cls = next_cls;
    }
}

Language canonicalize(int n, const std::vector<std::vector<int>>& next, const Bits& final,
                      int initial, const Alphabet& alphabet) {
    std::vector<int> cls = minimize_classes(n, next, final);
    int n_cls = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<std::vector<int>> qnext(next.size(), std::vector<int>(n_cls, -1));
    Bits qfinal(n_cls);
    for (int q = 0; q < n; ++q) {
        for (size_t a = 0; a < next.size(); ++a) qnext[a][cls[q]] = cls[next[a][q]];
        if (final.test(q)) qfinal.set(cls[q]);
    }
    // BFS renumber from the initial class (only reachable classes survive;
    // the input dfa is reachable so every class is, but be safe)
    std::vector<int> order(n_cls, -1);
    std::queue<int> bfs;
    order[cls[initial]] = 0;
    bfs.push(cls[initial]);
    int seen = 1;
    while (!bfs.empty()) {
        int cur = bfs.front();
        bfs.pop();
        for (size_t a = 0; a < next.size(); ++a) {
            int nx = qnext[a][cur];
            if (order[nx] < 0) {
                order[nx] = seen++;
                bfs.push(nx);
            }
        }
    }
    Language l;
    l.alphabet = alphabet;
    l.next.assign(next.size(), std::vector<int>(seen, -1));
    l.final = Bits(seen);
    for (int c = 0; c < n_cls; ++c) {
        if (order[c] < 0) continue;
        for (size_t a = 0; a < next.size(); ++a) l.next[a][order[c]] = order[qnext[a][c]];
        if (qfinal.test(c)) l.final.set(order[c]);
    }
    return l;
}

}  // namespace

Language from_nfa(const Nfa& n) {
    Dfa d = rsc(n);  // complete and reachable
    std::vector<std::vector<int>> next = d.next;
    return canonicalize(d.size(), next, d.final, d.initial, d.alphabet);
}

Language from_dfa(const Dfa& d) {
    // dfas built elsewhere (e.g. canonical dfas with a moved initial state)
    // may have unreachable states; rsc strips them first
    return from_nfa(to_nfa(d));
}

Language empty_language(const Alphabet& a) { return from_nfa(empty_nfa(a)); }

Language epsilon_language(const Alphabet& a) {
    Nfa n = empty_nfa(a);
    n.final.set(0);
    n.initial.set(0);
    // one accepting state with no outgoing transitions accepts only epsilon
    return from_nfa(n);
}

Language full_language(const Alphabet& a) { return complement(empty_language(a)); }

Language word_language(const Alphabet& a, const Word& w) {
    int n = (int)w.size() + 1;
    FinSet st = FinSet::numbered(n, "q");
    std::vector<FinRel> tr(a.size(), FinRel(st, st));
    for (size_t i = 0; i < w.size(); ++i) {
        int li = a.index(w[i]);
        if (li < 0) throw std::invalid_argument("word_language: letter not in alphabet");
        tr[li].set_edge((int)i, (int)i + 1);
    }
    Bits init(n), fin(n);
    init.set(0);
    fin.set(n - 1);
    return from_nfa(mk_nfa(a, st, init, fin, std::move(tr)));
}

Dfa canonical_dfa(const Language& l) {
    Dfa d;
    d.alphabet = l.alphabet;
    d.states = FinSet::numbered(l.states(), "q");
    d.initial = 0;
    d.final = l.final;
    d.next = l.next;
    return d;
}

bool member(const Language& l, const Word& w) {
    int q = 0;
    for (char c : w) {
        int a = l.alphabet.index(c);
        if (a < 0) throw std::invalid_argument("member: letter not in alphabet");
        q = l.next[a][q];
    }
    return l.final.test(q);
}

bool is_empty(const Language& l) { return l.states() == 1 && !l.final.test(0); }

Language reverse(const Language& l) { return from_nfa(reverse(to_nfa(canonical_dfa(l)))); }

Language complement(const Language& l) {
    Dfa d = canonical_dfa(l);
    d.final = d.final.complement();
    return from_dfa(d);
}

namespace {

// product construction over the two canonical dfas
Language product(const Language& a, const Language& b, bool which_or) {
    if (!(a.alphabet == b.alphabet))
        throw std::invalid_argument("product: alphabets differ");
    int nb = b.states();
    int n = a.states() * nb;
    std::vector<std::vector<int>> next(a.alphabet.size(), std::vector<int>(n));
    Bits fin(n);
    for (int p = 0; p < a.states(); ++p)
        for (int q = 0; q < nb; ++q) {
            int s = p * nb + q;
            for (int t = 0; t < a.alphabet.size(); ++t)
                next[t][s] = a.next[t][p] * nb + b.next[t][q];
            bool fa = a.final.test(p), fb = b.final.test(q);
            if (which_or ? (fa || fb) : (fa && fb)) fin.set(s);
        }
    Dfa d;
    d.alphabet = a.alphabet;
    d.states = FinSet::numbered(n, "p");
    d.initial = 0;
    d.final = fin;
    d.next = next;
    return from_dfa(d);
}

}  // namespace

Language union_lang(const Language& a, const Language& b) { return product(a, b, true); }
Language intersect_lang(const Language& a, const Language& b) { return product(a, b, false); }

bool intersects_lang(const Language& a, const Language& b) {
    if (!(a.alphabet == b.alphabet))
        throw std::invalid_argument("intersects_lang: alphabets differ");
    // reachability of an accepting pair in the product
    int nb = b.states();
    std::set<int> seen;
    std::queue<std::pair<int, int>> bfs;
    bfs.push({0, 0});
    seen.insert(0);
    while (!bfs.empty()) {
        auto [p, q] = bfs.front();
        bfs.pop();
        if (a.final.test(p) && b.final.test(q)) return true;
        for (int t = 0; t < a.alphabet.size(); ++t) {
            int np = a.next[t][p], nq = b.next[t][q];
            if (seen.insert(np * nb + nq).second) bfs.push({np, nq});
        }
    }
    return false;
}

bool subset_lang(const Language& a, const Language& b) {
    return !intersects_lang(a, complement(b));
}

Language left_word_quotient(const Language& l, const Word& u) {
    Dfa d = canonical_dfa(l);
    d.initial = d.step(0, u);
    return from_dfa(d);
}

Language QuotientIndex::quotient(int i) const {
    Dfa d = canonical_dfa(language);
    d.initial = i;
    return from_dfa(d);
}

QuotientIndex left_quotients(const Language& l) {
    // the canonical dfa is BFS-ordered, so BFS rediscovery in the same order
    // yields length-then-lexicographically minimal representatives
    QuotientIndex qi;
    qi.language = l;
    qi.reps.assign(l.states(), Word());
    std::vector<bool> seen(l.states(), false);
    std::queue<int> bfs;
    seen[0] = true;
    bfs.push(0);
    while (!bfs.empty()) {
        int q = bfs.front();
        bfs.pop();
        for (int a = 0; a < l.alphabet.size(); ++a) {
            int nx = l.next[a][q];
            if (!seen[nx]) {
                seen[nx] = true;
                qi.reps[nx] = qi.reps[q] + l.alphabet.letter(a);
                bfs.push(nx);
            }
        }
    }
    return qi;
}

Language left_set_quotient(const Language& l, const Language& u_set) {
    if (!(l.alphabet == u_set.alphabet))
        throw std::invalid_argument("left_set_quotient: alphabets differ");
    // S = { delta_L(0, u) : u in U }: collect L-components of product states
    // reached while the U-component is final
    int nl = l.states();
    Bits starts(nl);
    std::set<int> seen;
    std::queue<std::pair<int, int>> bfs;
    bfs.push({0, 0});
    seen.insert(0);
    while (!bfs.empty()) {
        auto [p, q] = bfs.front();  // p in u_set, q in l
        bfs.pop();
        if (u_set.final.test(p)) starts.set(q);
        for (int t = 0; t < l.alphabet.size(); ++t) {
            int np = u_set.next[t][p], nq = l.next[t][q];
            if (seen.insert(np * nl + nq).second) bfs.push({np, nq});
        }
    }
    Nfa n = to_nfa(canonical_dfa(l));
    n.initial = starts;
    return from_nfa(n);
}

Language right_quotient(const Language& l, const Language& v_set) {
    return reverse(left_set_quotient(reverse(l), reverse(v_set)));
}

Language dr_l(const Language& l, const Language& x) {
    // x must be a left quotient of reverse(l), i.e. a union of its left word
    // quotients; x = U^{-1} L^r for the representatives U of those below x
    Language lr = reverse(l);
    QuotientIndex qir = left_quotients(lr);
    std::vector<int> below;
    Language check = empty_language(l.alphabet);
    for (int i = 0; i < qir.size(); ++i) {
        Language q = qir.quotient(i);
        if (subset_lang(q, x)) {
            below.push_back(i);
            check = union_lang(check, q);
        }
    }
    if (!(check == x))
        throw std::invalid_argument("dr_l: argument is not a left quotient of reverse(l)");
    Language primary = left_set_quotient(l, reverse(complement(x)));
    // union formula: dr_L(U^{-1}L^r) = union{ X in LW(L) : X cap U^r empty }
    Dfa dl = canonical_dfa(l);
    Bits starts(l.states());
    for (int q = 0; q < l.states(); ++q) {
        bool hits = false;
        for (int i : below) {
            Word vr(qir.reps[i].rbegin(), qir.reps[i].rend());
            if (dl.final.test(dl.step(q, vr))) hits = true;
        }
        if (!hits) starts.set(q);
    }
    Nfa n = to_nfa(dl);
    n.initial = starts;
    Language alt = from_nfa(n);
    if (!(primary == alt))
        throw DefectError("dr_l: the two defining formulas disagree");
    return primary;
}

FinRel dependency_relation(const Language& l) {
    QuotientIndex qi = left_quotients(l);
    QuotientIndex qir = left_quotients(reverse(l));
    FinSet src, dst;
    for (const Word& u : qi.reps) src.labels.push_back(word_display(u));
    for (const Word& v : qir.reps) dst.labels.push_back(word_display(v));
    FinRel r(src, dst);
    for (int i = 0; i < qi.size(); ++i)
        for (int j = 0; j < qir.size(); ++j) {
            Word vr(qir.reps[j].rbegin(), qir.reps[j].rend());
            if (member(l, qi.reps[i] + vr)) r.set_edge(i, j);
        }
    return r;
}

namespace {

// the transition monoid of the canonical dfa, as function tables reachable
// from the identity; BFS over right-extension by letters
struct SigMachine {
    std::vector<std::vector<int>> elems;  // function tables
    std::vector<int> next_elem;           // flattened [letter * n_elems + e]
    std::map<std::vector<int>, int> index;

    static SigMachine build(const Language& l) {
        SigMachine m;
        int n = l.states();
        std::vector<int> id(n);
        for (int q = 0; q < n; ++q) id[q] = q;
        m.index[id] = 0;
        m.elems.push_back(id);
        std::vector<std::vector<int>> nxt;  // [elem][letter]
        for (size_t e = 0; e < m.elems.size(); ++e) {
            nxt.emplace_back(l.alphabet.size());
            for (int a = 0; a < l.alphabet.size(); ++a) {
                std::vector<int> f(n);
                for (int q = 0; q < n; ++q) f[q] = l.next[a][m.elems[e][q]];
                auto [it, fresh] = m.index.try_emplace(f, (int)m.elems.size());
                if (fresh) m.elems.push_back(f);
                nxt[e][a] = it->second;
                if (m.elems.size() > 200000)
                    throw CapExceeded("transition monoid closure exceeds 200000 elements");
            }
        }
        m.next_elem.assign(l.alphabet.size() * m.elems.size(), -1);
        for (size_t e = 0; e < m.elems.size(); ++e)
            for (int a = 0; a < l.alphabet.size(); ++a)
                m.next_elem[a * m.elems.size() + e] = nxt[e][a];
        return m;
    }

    Bits signature(const Language& l, int e) const {
        Bits s(l.states());
        for (int q = 0; q < l.states(); ++q)
            if (l.final.test(elems[e][q])) s.set(q);
        return s;
    }

    // language of the word set { w : elem(w) in finals }
    Language lang_with_finals(const Language& l, const std::vector<bool>& fin) const {
        Dfa d;
        d.alphabet = l.alphabet;
        d.states = FinSet::numbered((int)elems.size(), "m");
        d.initial = 0;
        d.final = Bits((int)elems.size());
        for (size_t e = 0; e < elems.size(); ++e)
            if (fin[e]) d.final.set((int)e);
        d.next.assign(l.alphabet.size(), std::vector<int>(elems.size()));
        for (int a = 0; a < l.alphabet.size(); ++a)
            for (size_t e = 0; e < elems.size(); ++e)
                d.next[a][e] = next_elem[a * elems.size() + e];
        return from_dfa(d);
    }
};

}  // namespace

std::vector<Language> atoms(const Language& l) {
    SigMachine m = SigMachine::build(l);
    Language lr = reverse(l);
    QuotientIndex qir = left_quotients(lr);
    // atom i = class of reverse(rep_i); signatures index the classes
    std::vector<Bits> sigs;
    std::set<Bits> sig_set;
    for (int i = 0; i < qir.size(); ++i) {
        Word w(qir.reps[i].rbegin(), qir.reps[i].rend());
        int e = 0;
        for (char c : w) {
            int a = l.alphabet.index(c);
            e = m.next_elem[a * m.elems.size() + e];
        }
        Bits s = m.signature(l, e);
        sigs.push_back(s);
        sig_set.insert(s);
    }
    if ((int)sig_set.size() != qir.size())
        throw DefectError("atoms: quotient-atom bijection failed (duplicate classes)");
    std::set<Bits> all_sigs;
    for (size_t e = 0; e < m.elems.size(); ++e) all_sigs.insert(m.signature(l, e));
    if (all_sigs != sig_set)
        throw DefectError("atoms: some word class not reached by a quotient representative");
    std::vector<Language> out;
    for (int i = 0; i < qir.size(); ++i) {
        std::vector<bool> fin(m.elems.size());
        for (size_t e = 0; e < m.elems.size(); ++e) fin[e] = m.signature(l, e) == sigs[i];
        out.push_back(m.lang_with_finals(l, fin));
    }
    return out;
}

Language cl_l(const Language& l, const Language& x) {
    if (!(l.alphabet == x.alphabet)) throw std::invalid_argument("cl_l: alphabets differ");
    SigMachine m = SigMachine::build(l);
    // mark signatures hit by words of x: explore the product of the monoid
    // dfa with x's canonical dfa
    int nx = x.states();
    std::set<Bits> hit;
    std::set<long long> seen;
    std::queue<std::pair<int, int>> bfs;
    bfs.push({0, 0});
    seen.insert(0);
    while (!bfs.empty()) {
        auto [e, q] = bfs.front();
        bfs.pop();
        if (x.final.test(q)) hit.insert(m.signature(l, e));
        for (int a = 0; a < l.alphabet.size(); ++a) {
            int ne = m.next_elem[a * m.elems.size() + e];
            int nq = x.next[a][q];
            if (seen.insert((long long)ne * nx + nq).second) bfs.push({ne, nq});
        }
    }
    std::vector<bool> fin(m.elems.size());
    for (size_t e = 0; e < m.elems.size(); ++e) fin[e] = hit.count(m.signature(l, e)) > 0;
    return m.lang_with_finals(l, fin);
}

std::optional<Word> shortest_word(const Language& l) {
    std::vector<int> from(l.states(), -2);
    std::vector<std::pair<int, char>> parent(l.states());
    std::queue<int> bfs;
    from[0] = -1;
    bfs.push(0);
    while (!bfs.empty()) {
        int q = bfs.front();
        bfs.pop();
        if (l.final.test(q)) {
            Word w;
            while (from[q] != -1) {
                w += parent[q].second;
                q = parent[q].first;
            }
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (int a = 0; a < l.alphabet.size(); ++a) {
            int nx = l.next[a][q];
            if (from[nx] == -2) {
                from[nx] = q;
                parent[nx] = {q, l.alphabet.letter(a)};
                bfs.push(nx);
            }
        }
    }
    return std::nullopt;
}

Dfa min_dfa_of(const Nfa& n) { return canonical_dfa(from_nfa(n)); }

SimpleDfa simple_dfa(const Dfa& d) {
    SimpleDfa out;
    std::map<Language, int> lang_idx;
    std::vector<int> acc(d.size());
    for (int q = 0; q < d.size(); ++q) {
        Dfa dq = d;
        dq.initial = q;
        Language lq = from_dfa(dq);
        auto [it, fresh] = lang_idx.try_emplace(lq, (int)lang_idx.size());
        if (fresh) out.state_lang.push_back(lq);
        acc[q] = it->second;
    }
    int m = (int)lang_idx.size();
    Dfa s;
    s.alphabet = d.alphabet;
    s.states = FinSet::numbered(m, "s");
    s.initial = acc[d.initial];
    s.final = Bits(m);
    s.next.assign(d.alphabet.size(), std::vector<int>(m, -1));
    for (int q = 0; q < d.size(); ++q) {
        if (d.final.test(q)) s.final.set(acc[q]);
        for (int a = 0; a < d.alphabet.size(); ++a) s.next[a][acc[q]] = acc[d.next[a][q]];
    }
    out.dfa = s;
    out.acc = acc;
    return out;
}

std::string word_display(const Word& w) { return w.empty() ? "%" : w; }

}  // namespace depaut
