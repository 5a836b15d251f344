#include "depaut/jsldfa.hh"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace depaut {

JslDfa mk_jsl_dfa(Alphabet a, Jsl carrier, int init, std::vector<std::vector<int>> trans,
                  int top_nonfinal) {
    if ((int)trans.size() != a.size())
        throw std::invalid_argument("mk_jsl_dfa: one transition map per letter");
    for (const auto& t : trans) mk_jsl_mor(carrier, carrier, t);  // join-preservation
    if (init < 0 || init >= carrier.size() || top_nonfinal < 0 ||
        top_nonfinal >= carrier.size())
        throw std::invalid_argument("mk_jsl_dfa: element out of range");
    JslDfa d;
    d.alphabet = std::move(a);
    d.carrier = std::move(carrier);
    d.init = init;
    d.trans = std::move(trans);
    d.top_nonfinal = top_nonfinal;
    return d;
}

bool accept_j(const JslDfa& d, const Word& w) {
    int x = d.init;
    for (char c : w) {
        int a = d.alphabet.index(c);
        if (a < 0) throw std::invalid_argument("accept_j: letter not in alphabet");
        x = d.trans[a][x];
    }
    return d.is_final(x);
}

static Dfa underlying_dfa(const JslDfa& d) {
    Dfa u;
    u.alphabet = d.alphabet;
    u.states = FinSet::numbered(d.size(), "e");
    u.initial = d.init;
    u.final = Bits(d.size());
    for (int x = 0; x < d.size(); ++x)
        if (d.is_final(x)) u.final.set(x);
    u.next = d.trans;
    return u;
}

Language lang_of_element(const JslDfa& d, int x) {
    Dfa u = underlying_dfa(d);
    u.initial = x;
    return from_dfa(u);
}

Language lang_of(const JslDfa& d) { return lang_of_element(d, d.init); }

bool is_jsl_dfa_iso(const JslDfa& a, const JslDfa& b, const std::vector<int>& map) {
    if (!(a.alphabet == b.alphabet)) return false;
    if ((int)map.size() != a.size() || a.size() != b.size()) return false;
    std::vector<bool> hit(b.size(), false);
    for (int v : map) {
        if (v < 0 || v >= b.size() || hit[v]) return false;
        hit[v] = true;
    }
    try {
        mk_jsl_mor(a.carrier, b.carrier, map);
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (map[a.init] != b.init) return false;
    for (int x = 0; x < a.size(); ++x) {
        if (a.is_final(x) != b.is_final(map[x])) return false;
        for (int t = 0; t < a.alphabet.size(); ++t)
            if (map[a.trans[t][x]] != b.trans[t][map[x]]) return false;
    }
    return true;
}

bool same_machine(const JslDfa& a, const JslDfa& b) {
    return a.alphabet == b.alphabet && a.carrier.family == b.carrier.family &&
           a.init == b.init && a.trans == b.trans && a.top_nonfinal == b.top_nonfinal;
}

namespace {

struct JslDfaIso {
    const JslDfa *a, *b;
    std::vector<int> ji1, ji2;
    std::vector<int> match;

    // cheap invariants per join-irreducible
    std::vector<std::pair<int, int>> sig(const JslDfa& d, const std::vector<int>& ji) const {
        std::vector<std::pair<int, int>> s;
        for (int j : ji) {
            int below = 0;
            for (int x = 0; x < d.size(); ++x)
                if (d.carrier.leq(x, j)) ++below;
            s.push_back({below, d.is_final(j) ? 1 : 0});
        }
        return s;
    }

    std::optional<std::vector<int>> extend() const {
        std::vector<int> map(a->size(), -1);
        for (int x = 0; x < a->size(); ++x) {
            Bits u(b->carrier.base.size());
            for (size_t p = 0; p < ji1.size(); ++p)
                if (a->carrier.leq(ji1[p], x)) u |= b->carrier.family[ji2[match[p]]];
            int y = b->carrier.index_of(u);
            if (y < 0) return std::nullopt;
            map[x] = y;
        }
        if (is_jsl_dfa_iso(*a, *b, map)) return map;
        return std::nullopt;
    }

    std::optional<std::vector<int>> search(size_t pos, std::vector<bool>& used,
                                           const std::vector<std::pair<int, int>>& s1,
                                           const std::vector<std::pair<int, int>>& s2) {
        if (pos == ji1.size()) return extend();
        for (size_t q = 0; q < ji2.size(); ++q) {
            if (used[q] || s1[pos] != s2[q]) continue;
            bool ok = true;
            for (size_t p = 0; p < pos && ok; ++p) {
                if (a->carrier.leq(ji1[p], ji1[pos]) !=
                    b->carrier.leq(ji2[match[p]], ji2[q]))
                    ok = false;
                if (a->carrier.leq(ji1[pos], ji1[p]) !=
                    b->carrier.leq(ji2[q], ji2[match[p]]))
                    ok = false;
            }
            if (!ok) continue;
            match[pos] = (int)q;
            used[q] = true;
            if (auto r = search(pos + 1, used, s1, s2)) return r;
            used[q] = false;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<std::vector<int>> find_jsl_dfa_iso(const JslDfa& a, const JslDfa& b) {
    if (!(a.alphabet == b.alphabet) || a.size() != b.size()) return std::nullopt;
    JslDfaIso iso;
    iso.a = &a;
    iso.b = &b;
    iso.ji1 = a.carrier.join_irreducibles();
    iso.ji2 = b.carrier.join_irreducibles();
    if (iso.ji1.size() != iso.ji2.size()) return std::nullopt;
    iso.match.assign(iso.ji1.size(), -1);
    std::vector<bool> used(iso.ji2.size(), false);
    auto s1 = iso.sig(a, iso.ji1), s2 = iso.sig(b, iso.ji2);
    return iso.search(0, used, s1, s2);
}

std::optional<std::vector<int>> iso_by_language(const JslDfa& a, const JslDfa& b) {
    if (a.size() != b.size()) return std::nullopt;
    std::map<Language, int> bl;
    for (int y = 0; y < b.size(); ++y)
        if (!bl.emplace(lang_of_element(b, y), y).second) return std::nullopt;
    std::vector<int> map(a.size());
    for (int x = 0; x < a.size(); ++x) {
        auto it = bl.find(lang_of_element(a, x));
        if (it == bl.end()) return std::nullopt;
        map[x] = it->second;
    }
    if (is_jsl_dfa_iso(a, b, map)) return map;
    return std::nullopt;
}

JslDfa pentagram(const JslDfa& d) {
    DualJsl du = dual_jsl(d.carrier);
    std::vector<std::vector<int>> trans(d.alphabet.size(),
                                        std::vector<int>(d.size()));
    for (int t = 0; t < d.alphabet.size(); ++t) {
        // adjoint transition (delta_a)_* computed in the original carrier,
        // then conjugated to the dual representation
        for (int y = 0; y < d.size(); ++y) {
            Bits u(d.carrier.base.size());
            for (int s = 0; s < d.size(); ++s)
                if (d.carrier.leq(d.trans[t][s], y)) u |= d.carrier.family[s];
            int star = d.carrier.index_of(u);
            if (star < 0) throw DefectError("pentagram: adjoint escaped the carrier");
            trans[t][du.to_dual[y]] = du.to_dual[star];
        }
    }
    return mk_jsl_dfa(d.alphabet, du.jsl, du.to_dual[d.top_nonfinal], std::move(trans),
                      du.to_dual[d.init]);
}

DepAut mk_dep_aut(Nfa lower, FinRel rel, Nfa upper) {
    if (lower.size() != rel.n_rows() || upper.size() != rel.n_cols())
        throw std::invalid_argument("mk_dep_aut: state spaces must match the relation");
    if (!(lower.alphabet == upper.alphabet))
        throw std::invalid_argument("mk_dep_aut: alphabets differ");
    for (int a = 0; a < lower.alphabet.size(); ++a)
        if (!compose(lower.trans[a], rel).same_table(
                compose(rel, converse(upper.trans[a]))))
            throw NotADepMorphism("mk_dep_aut: N_a ; G != G ; converse(N'_a)");
    if (!(upper.final == image(rel, lower.initial)))
        throw NotADepMorphism("mk_dep_aut: upper final states must be G[I]");
    if (!(lower.final == image(converse(rel), upper.initial)))
        throw NotADepMorphism("mk_dep_aut: lower final states must be G~[I']");
    return DepAut{std::move(lower), std::move(rel), std::move(upper)};
}

DepAut dep_of_nfa(const Nfa& n) {
    return mk_dep_aut(n, FinRel::identity(n.states), reverse(n));
}

JslDfa full_subset(const Nfa& n) {
    if (n.size() > 12) throw CapExceeded("full_subset: more than 12 states");
    Jsl carrier = powerset_jsl(n.states);
    std::vector<std::vector<int>> trans(n.alphabet.size(), std::vector<int>(carrier.size()));
    for (int a = 0; a < n.alphabet.size(); ++a)
        for (int x = 0; x < carrier.size(); ++x) {
            int i = carrier.index_of(image(n.trans[a], carrier.family[x]));
            trans[a][x] = i;
        }
    int init = carrier.index_of(n.initial);
    int topnf = carrier.index_of(n.final.complement());
    return mk_jsl_dfa(n.alphabet, std::move(carrier), init, std::move(trans), topnf);
}

DepAut dep_of_lang(const Language& l) {
    FinRel dr = dependency_relation(l);
    Nfa lower = to_nfa(canonical_dfa(l));
    lower.states = dr.src;
    Nfa upper = to_nfa(canonical_dfa(reverse(l)));
    upper.states = dr.dst;
    return mk_dep_aut(std::move(lower), std::move(dr), std::move(upper));
}

JslDfa det(const DepAut& d) {
    Jsl carrier = open_of(d.rel);
    std::vector<std::vector<int>> trans(d.lower.alphabet.size(),
                                        std::vector<int>(carrier.size()));
    for (int a = 0; a < d.lower.alphabet.size(); ++a) {
        FinRel upco = converse(d.upper.trans[a]);
        for (int x = 0; x < carrier.size(); ++x) {
            int i = carrier.index_of(image(upco, carrier.family[x]));
            if (i < 0) throw DefectError("det: transition image is not open");
            trans[a][x] = i;
        }
    }
    int init = carrier.index_of(d.upper.final);
    if (init < 0) throw DefectError("det: upper final set is not open");
    // largest open avoiding the upper initial states
    Bits tnf(carrier.base.size());
    for (const Bits& o : carrier.family)
        if (!o.intersects(d.upper.initial)) tnf |= o;
    int topnf = carrier.index_of(tnf);
    if (topnf < 0) throw DefectError("det: interior escaped the opens");
    return mk_jsl_dfa(d.lower.alphabet, std::move(carrier), init, std::move(trans), topnf);
}

DepAut airr(const JslDfa& j) {
    const Jsl& s = j.carrier;
    std::vector<int> ji = s.join_irreducibles(), mi = s.meet_irreducibles();
    FinRel rel = pirr_of(s);
    // lower nfa over J(S)
    Bits li((int)ji.size()), lf((int)ji.size());
    for (size_t p = 0; p < ji.size(); ++p) {
        if (s.leq(ji[p], j.init)) li.set((int)p);
        if (j.is_final(ji[p])) lf.set((int)p);
    }
    std::vector<FinRel> lt;
    for (int a = 0; a < j.alphabet.size(); ++a) {
        FinRel t(rel.src, rel.src);
        for (size_t p = 0; p < ji.size(); ++p)
            for (size_t q = 0; q < ji.size(); ++q)
                if (s.leq(ji[q], j.trans[a][ji[p]])) t.set_edge((int)p, (int)q);
        lt.push_back(std::move(t));
    }
    Nfa lower = mk_nfa(j.alphabet, rel.src, li, lf, std::move(lt));
    // upper nfa over M(S) with adjoint transitions
    Bits ui((int)mi.size()), uf((int)mi.size());
    for (size_t p = 0; p < mi.size(); ++p) {
        if (s.leq(j.top_nonfinal, mi[p])) ui.set((int)p);
        if (!s.leq(j.init, mi[p])) uf.set((int)p);
    }
    std::vector<FinRel> ut;
    for (int a = 0; a < j.alphabet.size(); ++a) {
        // (delta_a)_* tabulated on meet-irreducibles
        std::vector<Bits> star(mi.size());
        for (size_t p = 0; p < mi.size(); ++p) {
            Bits u(s.base.size());
            for (int x = 0; x < s.size(); ++x)
                if (s.leq(j.trans[a][x], mi[p])) u |= s.family[x];
            star[p] = u;
        }
        FinRel t(rel.dst, rel.dst);
        for (size_t p = 0; p < mi.size(); ++p)
            for (size_t q = 0; q < mi.size(); ++q)
                if (star[p].subset_of(s.family[mi[q]])) t.set_edge((int)p, (int)q);
        ut.push_back(std::move(t));
    }
    Nfa upper = mk_nfa(j.alphabet, rel.dst, ui, uf, std::move(ut));
    return mk_dep_aut(std::move(lower), std::move(rel), std::move(upper));
}

DepAut rev_dep(const DepAut& d) { return mk_dep_aut(d.upper, converse(d.rel), d.lower); }

JslDfa jsl_reach(const JslDfa& j) {
    // classically reachable elements, then union closure
    std::set<int> seen{j.init};
    std::queue<int> bfs;
    bfs.push(j.init);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int a = 0; a < j.alphabet.size(); ++a)
            if (seen.insert(j.trans[a][x]).second) bfs.push(j.trans[a][x]);
    }
    std::vector<Bits> gens;
    for (int x : seen) gens.push_back(j.carrier.family[x]);
    Jsl sub = mk_jsl(j.carrier.base, gens);
    std::vector<int> old_of(sub.size());
    for (int i = 0; i < sub.size(); ++i) {
        int o = j.carrier.index_of(sub.family[i]);
        if (o < 0) throw DefectError("jsl_reach: closure escaped the carrier");
        old_of[i] = o;
    }
    std::vector<int> new_of(j.size(), -1);
    for (int i = 0; i < sub.size(); ++i) new_of[old_of[i]] = i;
    std::vector<std::vector<int>> trans(j.alphabet.size(), std::vector<int>(sub.size()));
    for (int a = 0; a < j.alphabet.size(); ++a)
        for (int i = 0; i < sub.size(); ++i) {
            int img = new_of[j.trans[a][old_of[i]]];
            if (img < 0) throw DefectError("jsl_reach: sub-carrier not closed under letters");
            trans[a][i] = img;
        }
    // largest non-final member of the sub-carrier
    Bits tnf(j.carrier.base.size());
    for (int i = 0; i < sub.size(); ++i)
        if (!j.is_final(old_of[i])) tnf |= sub.family[i];
    int topnf = sub.index_of(tnf);
    return mk_jsl_dfa(j.alphabet, std::move(sub), new_of[j.init], std::move(trans), topnf);
}

bool is_jsl_reachable(const JslDfa& j) {
    std::set<int> seen{j.init};
    std::queue<int> bfs;
    bfs.push(j.init);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int a = 0; a < j.alphabet.size(); ++a)
            if (seen.insert(j.trans[a][x]).second) bfs.push(j.trans[a][x]);
    }
    for (int ji : j.carrier.join_irreducibles())
        if (!seen.count(ji)) return false;
    return true;
}

bool is_simple(const JslDfa& j) {
    std::set<Language> langs;
    for (int x = 0; x < j.size(); ++x)
        if (!langs.insert(lang_of_element(j, x)).second) return false;
    return true;
}

SimpleJslDfa jsl_dfa_from_language_family(std::vector<Language> family, const Language& l) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    int n = (int)family.size();
    // inclusion order; complements are precomputed since subset tests are
    // intersection-emptiness against them
    std::vector<Language> comp(n);
    for (int i = 0; i < n; ++i) comp[i] = complement(family[i]);
    std::vector<Bits> le(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (!intersects_lang(family[i], comp[k])) le[i].set(k);
    auto join_of = [&](const std::vector<int>& xs) {
        Bits ub = Bits::full(n);
        for (int x : xs) ub &= le[x];
        // least upper bound: the ub below every other ub
        int best = -1;
        ub.for_each([&](int u) {
            if (best < 0) best = u;
            bool leq_all = true;
            ub.for_each([&](int v) { leq_all = leq_all && le[u].test(v); });
            if (leq_all) best = u;
        });
        if (best < 0) throw DefectError("language family: join missing (not union-closed?)");
        return best;
    };
    // meet-irreducibles: meet of the strict up-set differs from the element
    std::vector<int> mi;
    for (int i = 0; i < n; ++i) {
        bool above = false;
        for (int k = 0; k < n; ++k)
            if (k != i && le[i].test(k)) above = true;
        if (!above) continue;
        int meet = -1;
        for (int c = 0; c < n; ++c) {
            bool below_all = true;
            for (int k = 0; k < n; ++k)
                if (k != i && le[i].test(k) && !le[c].test(k)) below_all = false;
            if (below_all && (meet < 0 || le[meet].test(c))) meet = c;
        }
        if (meet != i) mi.push_back(i);
    }
    // rep over the meet-irreducibles: K |-> { m : K not<= m }
    FinSet base;
    for (size_t p = 0; p < mi.size(); ++p) base.labels.push_back("m" + std::to_string(p));
    std::vector<Bits> reps(n, Bits((int)mi.size()));
    for (int i = 0; i < n; ++i)
        for (size_t p = 0; p < mi.size(); ++p)
            if (!le[i].test(mi[p])) reps[i].set((int)p);
    Jsl carrier;
    carrier.base = base;
    carrier.family = reps;
    std::sort(carrier.family.begin(), carrier.family.end());
    carrier.family.erase(std::unique(carrier.family.begin(), carrier.family.end()),
                         carrier.family.end());
    if ((int)carrier.family.size() != n)
        throw DefectError("language family: rep not injective");
    std::vector<int> elem_of(n);  // family index -> carrier element
    for (int i = 0; i < n; ++i) elem_of[i] = carrier.index_of(reps[i]);
    // transitions: K |-> a^{-1} K, located in the family
    std::map<Language, int> fidx;
    for (int i = 0; i < n; ++i) fidx[family[i]] = i;
    Alphabet alpha = l.alphabet;
    std::vector<std::vector<int>> trans(alpha.size(), std::vector<int>(n));
    for (int a = 0; a < alpha.size(); ++a)
        for (int i = 0; i < n; ++i) {
            auto it = fidx.find(left_word_quotient(family[i], Word(1, alpha.letter(a))));
            if (it == fidx.end())
                throw DefectError("language family: not closed under letter quotients");
            trans[a][elem_of[i]] = elem_of[it->second];
        }
    auto lit = fidx.find(l);
    if (lit == fidx.end()) throw DefectError("language family: L itself missing");
    // largest member without epsilon
    std::vector<int> eps_free;
    for (int i = 0; i < n; ++i)
        if (!member(family[i], "")) eps_free.push_back(i);
    int tnf = join_of(eps_free);
    SimpleJslDfa out;
    out.machine = mk_jsl_dfa(alpha, std::move(carrier), elem_of[lit->second], std::move(trans),
                             elem_of[tnf]);
    out.elem_langs.resize(n);
    for (int i = 0; i < n; ++i) out.elem_langs[elem_of[i]] = family[i];
    out.acc.clear();
    return out;
}

SimpleJslDfa jsl_simple(const JslDfa& j) {
    std::vector<Language> langs(j.size());
    for (int x = 0; x < j.size(); ++x) langs[x] = lang_of_element(j, x);
    SimpleJslDfa out = jsl_dfa_from_language_family(langs, lang_of(j));
    std::map<Language, int> by_lang;
    for (int e = 0; e < out.machine.size(); ++e) by_lang[out.elem_langs[e]] = e;
    out.acc.resize(j.size());
    for (int x = 0; x < j.size(); ++x) out.acc[x] = by_lang.at(langs[x]);
    return out;
}

MinJslDfa jsl_dfa_min(const Language& l) {
    MinJslDfa out;
    out.lw = left_quotients(l);
    out.lw_rev = left_quotients(reverse(l));
    FinRel dr = dependency_relation(l);
    Jsl carrier = open_of(dr);  // union closure of the DR rows over LW(L^r)
    // language-side transitions: row(q) |-> row(delta(q, a)), extended by
    // unions via the saturated generating set of each element
    Dfa dl = canonical_dfa(l);
    std::vector<std::vector<int>> trans(l.alphabet.size(), std::vector<int>(carrier.size()));
    for (int a = 0; a < l.alphabet.size(); ++a)
        for (int x = 0; x < carrier.size(); ++x) {
            Bits img(dr.n_cols());
            for (int q = 0; q < dr.n_rows(); ++q)
                if (dr.rows[q].subset_of(carrier.family[x])) img |= dr.rows[dl.next[a][q]];
            int i = carrier.index_of(img);
            if (i < 0) throw DefectError("jsl_dfa_min: transition escaped the carrier");
            trans[a][x] = i;
        }
    int init = carrier.index_of(dr.rows[0]);
    Bits tnf(dr.n_cols());
    for (int q = 0; q < dr.n_rows(); ++q)
        if (!dl.final.test(q)) tnf |= dr.rows[q];
    int topnf = carrier.index_of(tnf);
    out.machine = mk_jsl_dfa(l.alphabet, std::move(carrier), init, std::move(trans), topnf);
    out.quotient_elem.resize(dr.n_rows());
    for (int q = 0; q < dr.n_rows(); ++q)
        out.quotient_elem[q] = out.machine.carrier.index_of(dr.rows[q]);
    return out;
}

CheckReport dependency_theorem_check(const Language& l) {
    CheckReport rep;
    MinJslDfa mj = jsl_dfa_min(l);
    JslDfa dd = det(dep_of_lang(l));
    // alpha(X) = { v^{-1} L^r : v in X^r }; for the element of the carrier
    // representing X = union of word quotients, this is exactly its rep bits
    if (mj.machine.size() != dd.size()) {
        rep.ok = false;
        rep.detail = "carrier sizes differ";
        return rep;
    }
    std::vector<int> map(mj.machine.size());
    Dfa dl = canonical_dfa(l);
    for (int x = 0; x < mj.machine.size(); ++x) {
        // compute alpha directly from the language of the element: X =
        // union of quotients q with row(q) below x; alpha(X) = { v-state :
        // reverse(rep_v) in X }
        Bits alpha_bits(mj.lw_rev.size());
        for (int v = 0; v < mj.lw_rev.size(); ++v) {
            Word vr(mj.lw_rev.reps[v].rbegin(), mj.lw_rev.reps[v].rend());
            bool in_x = false;
            for (int q = 0; q < mj.lw.size(); ++q)
                if (mj.machine.carrier.leq(mj.quotient_elem[q], x) &&
                    dl.final.test(dl.step(q, vr)))
                    in_x = true;
            if (in_x) alpha_bits.set(v);
        }
        int y = dd.carrier.index_of(alpha_bits);
        if (y < 0) {
            rep.ok = false;
            rep.detail = "alpha image " + alpha_bits.to_string() + " is not an open set";
            return rep;
        }
        map[x] = y;
    }
    if (!is_jsl_dfa_iso(mj.machine, dd, map)) {
        rep.ok = false;
        rep.detail = "alpha is not a JSL-dfa isomorphism";
    }
    return rep;
}

Nfa canonical_rfsa(const Language& l) {
    MinJslDfa mj = jsl_dfa_min(l);
    const Jsl& s = mj.machine.carrier;
    std::vector<int> ji = s.join_irreducibles();
    // join-irreducible elements are word quotients (rows of DR)
    std::vector<int> state_of(ji.size(), -1);
    for (size_t p = 0; p < ji.size(); ++p) {
        for (int q = 0; q < mj.lw.size(); ++q)
            if (mj.quotient_elem[q] == ji[p]) state_of[p] = q;
        if (state_of[p] < 0)
            throw DefectError("canonical_rfsa: join-irreducible is not a word quotient");
    }
    FinSet st;
    for (size_t p = 0; p < ji.size(); ++p)
        st.labels.push_back(word_display(mj.lw.reps[state_of[p]]));
    Bits init((int)ji.size()), fin((int)ji.size());
    Dfa dl = canonical_dfa(l);
    for (size_t p = 0; p < ji.size(); ++p) {
        if (s.leq(ji[p], mj.machine.init)) init.set((int)p);
        if (dl.final.test(state_of[p])) fin.set((int)p);
    }
    std::vector<FinRel> tr;
    for (int a = 0; a < l.alphabet.size(); ++a) {
        FinRel t(st, st);
        for (size_t p = 0; p < ji.size(); ++p) {
            int succ_elem = mj.quotient_elem[dl.next[a][state_of[p]]];
            for (size_t q = 0; q < ji.size(); ++q)
                if (s.leq(ji[q], succ_elem)) t.set_edge((int)p, (int)q);
        }
        tr.push_back(std::move(t));
    }
    return mk_nfa(l.alphabet, std::move(st), std::move(init), std::move(fin), std::move(tr));
}

Nfa sat_min_dfa(const Language& l) {
    MinJslDfa mj = jsl_dfa_min(l);
    FinSet st;
    for (int q = 0; q < mj.lw.size(); ++q) st.labels.push_back(word_display(mj.lw.reps[q]));
    const Jsl& s = mj.machine.carrier;
    Bits init(mj.lw.size()), fin(mj.lw.size());
    Dfa dl = canonical_dfa(l);
    for (int q = 0; q < mj.lw.size(); ++q) {
        if (s.leq(mj.quotient_elem[q], mj.machine.init)) init.set(q);
        if (dl.final.test(q)) fin.set(q);
    }
    std::vector<FinRel> tr;
    for (int a = 0; a < l.alphabet.size(); ++a) {
        FinRel t(st, st);
        for (int q1 = 0; q1 < mj.lw.size(); ++q1) {
            int succ = mj.quotient_elem[dl.next[a][q1]];
            for (int q2 = 0; q2 < mj.lw.size(); ++q2)
                if (s.leq(mj.quotient_elem[q2], succ)) t.set_edge(q1, q2);
        }
        tr.push_back(std::move(t));
    }
    return mk_nfa(l.alphabet, std::move(st), std::move(init), std::move(fin), std::move(tr));
}

Dfa brzozowski_minimize(const Nfa& n, bool cross_check) {
    Dfa out = rsc(reverse(to_nfa(rsc(reverse(n)))));
    if (cross_check && !iso_dfa(out, min_dfa_of(n)))
        throw DefectError("brzozowski_minimize: result differs from the canonical minimal dfa");
    return out;
}

SimpleJslDfa rqc(const JslDfa& j) {
    SimpleJslDfa s = jsl_simple(j);
    // join-irreducible languages of the simplified machine
    std::vector<int> ji = s.machine.carrier.join_irreducibles();
    std::vector<Language> gens;
    for (int p : ji) {
        const Language& k = s.elem_langs[p];
        // all right word quotients K v^{-1} = reverse of the left quotients
        // of reverse(K)
        Language kr = reverse(k);
        QuotientIndex qk = left_quotients(kr);
        for (int i = 0; i < qk.size(); ++i) gens.push_back(reverse(qk.quotient(i)));
    }
    // close under unions
    std::set<Language> fam(gens.begin(), gens.end());
    fam.insert(empty_language(lang_of(j).alphabet));
    std::vector<Language> work(fam.begin(), fam.end());
    for (size_t i = 0; i < work.size(); ++i)
        for (const Language& g : gens) {
            Language u = union_lang(work[i], g);
            if (fam.insert(u).second) work.push_back(u);
        }
    return jsl_dfa_from_language_family(std::vector<Language>(fam.begin(), fam.end()),
                                        lang_of(j));
}

std::string jsl_dfa_to_json(const JslDfa& d) {
    nlohmann::json out;
    out["alphabet"] = d.alphabet.symbols;
    out["base"] = d.carrier.base.labels;
    auto fam = nlohmann::json::array();
    for (const Bits& b : d.carrier.family) {
        auto m = nlohmann::json::array();
        b.for_each([&](int i) { m.push_back(i); });
        fam.push_back(m);
    }
    out["family"] = fam;
    out["init"] = d.init;
    out["top_nonfinal"] = d.top_nonfinal;
    auto tr = nlohmann::json::object();
    for (int a = 0; a < d.alphabet.size(); ++a)
        tr[std::string(1, d.alphabet.letter(a))] = d.trans[a];
    out["trans"] = tr;
    return out.dump(2);
}

std::string dep_aut_to_dot(const DepAut& d) {
    // lower machine below, upper machine above, undirected dependency edges
    std::ostringstream os;
    os << "digraph depaut {\n  rankdir=LR;\n";
    auto emit_nfa = [&](const Nfa& n, const std::string& prefix, const char* rank) {
        os << "  subgraph cluster_" << prefix << " {\n    rank=" << rank << ";\n";
        for (int q = 0; q < n.size(); ++q) {
            std::string deco;
            if (n.initial.test(q)) deco += "i";
            if (n.final.test(q)) deco += "o";
            os << "    " << prefix << q << " [label=\"" << n.states.labels[q]
               << (deco.empty() ? "" : " [" + deco + "]") << "\"];\n";
        }
        os << "  }\n";
        for (int a = 0; a < n.alphabet.size(); ++a)
            for (int q = 0; q < n.size(); ++q)
                n.trans[a].rows[q].for_each([&](int r) {
                    os << "  " << prefix << q << " -> " << prefix << r << " [label=\""
                       << n.alphabet.letter(a) << "\"];\n";
                });
    };
    emit_nfa(d.upper, "u", "min");
    emit_nfa(d.lower, "l", "max");
    for (int i = 0; i < d.rel.n_rows(); ++i)
        d.rel.rows[i].for_each([&](int k) {
            os << "  l" << i << " -> u" << k << " [dir=none, style=dashed];\n";
        });
    os << "}\n";
    return os.str();
}

}  // namespace depaut
