// acceptance suite: one test case per criterion, one pass/fail line each.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>
#include <set>

#include "depaut/algebra.hh"
#include "depaut/canonical.hh"
#include "depaut/kw.hh"
#include "depaut/regex.hh"
#include "depaut/saturate.hh"

using namespace depaut;

namespace {

int case_fail;

#define ACC(cond)            \
    do {                     \
        bool c_ = (cond);    \
        CHECK(c_);           \
        if (!c_) ++case_fail; \
    } while (0)

void verdict(int n, const char* what) {
    std::printf("[%s] criterion %d: %s\n", case_fail == 0 ? "PASS" : "FAIL", n, what);
    std::fflush(stdout);
}

Language lang(const std::string& re) { return from_nfa(regex_to_nfa(re)); }

Nfa random_nfa(std::mt19937_64& rng, int max_states, int n_letters, int percent = 28) {
    int n = 1 + (int)(rng() % max_states);
    FinSet st = FinSet::numbered(n, "q");
    Alphabet a(std::string("abcdef").substr(0, n_letters));
    std::vector<FinRel> tr;
    for (int l = 0; l < n_letters; ++l) {
        FinRel t(st, st);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((int)(rng() % 100) < percent) t.set_edge(i, j);
        tr.push_back(std::move(t));
    }
    Bits init(n), fin(n);
    for (int i = 0; i < n; ++i) {
        if (rng() % 100 < 40) init.set(i);
        if (rng() % 100 < 40) fin.set(i);
    }
    if (init.none()) init.set((int)(rng() % n));
    return mk_nfa(a, st, init, fin, std::move(tr));
}

Language random_language(std::mt19937_64& rng, int max_quotients) {
    for (;;) {
        Language l = from_nfa(random_nfa(rng, 4, 2));
        if (l.states() <= max_quotients) return l;
    }
}

std::vector<Word> words_up_to(const Alphabet& a, int maxlen) {
    std::vector<Word> out{""};
    size_t start = 0;
    for (int len = 1; len <= maxlen; ++len) {
        size_t end = out.size();
        for (size_t i = start; i < end; ++i)
            for (int l = 0; l < a.size(); ++l) out.push_back(out[i] + a.letter(l));
        start = end;
    }
    return out;
}

}  // namespace

TEST_CASE("criterion 1") {
    case_fail = 0;
    struct Case {
        const char* re;
        int states;
    };
    // the expected counts follow the figures of the source examples: a+aa has
    // 3-state minimal machines, a(b+c)+b(a+c)+c(a+b) 5-state ones, and
    // (ab)*+(abc)* a unique 5-state one (a 2-cycle plus a 3-cycle); the
    // (a+b)*a(a+b)^n family needs n+2 states
    std::vector<Case> cases = {
        {"a+aa", 3},
        {"a(b+c)+b(a+c)+c(a+b)", 5},
        {"(ab)*+(abc)*", 5},
        {"(a+b)*a", 2},
        {"(a+b)*a(a+b)", 3},
        {"(a+b)*a(a+b)(a+b)", 4},
    };
    for (const Case& c : cases) {
        Language l = lang(c.re);
        MinimalNfaResult r = minimal_nfa(l);
        ACC(r.nfa.size() == c.states);
        ACC(from_nfa(r.nfa) == l);
    }
    verdict(1, "Kameda-Weiner exactness on the example languages");
}

TEST_CASE("criterion 2") {
    case_fail = 0;
    // no 2-state machine over {a} accepts a+aa (exhaustive enumeration)
    ACC(no_smaller_nfa_exists(lang("a+aa"), 3));
    // no legitimate cover of size min-1 exists for any criterion-1 language
    for (const char* re : {"a+aa", "a(b+c)+b(a+c)+c(a+b)", "(ab)*+(abc)*", "(a+b)*a",
                           "(a+b)*a(a+b)", "(a+b)*a(a+b)(a+b)"}) {
        Language l = lang(re);
        int k = (int)minimal_nfa(l).nfa.size();
        ACC(!exists_legitimate_cover(l, k - 1));
    }
    verdict(2, "minimality cross-checks (exhaustive nfa and cover scans)");
}

TEST_CASE("criterion 3") {
    case_fail = 0;
    std::mt19937_64 rng(33033);
    for (int it = 0; it < 200; ++it) {
        Nfa n = random_nfa(rng, 5, 2);
        Dfa b = rsc(reverse(to_nfa(rsc(reverse(n)))));
        ACC(iso_dfa(b, min_dfa_of(n)));
    }
    verdict(3, "Brzozowski double reversal on 200 random nfas");
}

TEST_CASE("criterion 4") {
    case_fail = 0;
    std::mt19937_64 rng(44044);
    for (int it = 0; it < 200; ++it) {
        int nb = 1 + (int)(rng() % 5);
        std::vector<Bits> gens;
        for (int i = 0, k = 1 + (int)(rng() % 6); i < k; ++i) {
            Bits b(nb);
            for (int j = 0; j < nb; ++j)
                if (rng() & 1) b.set(j);
            gens.push_back(b);
        }
        Jsl s = mk_jsl(FinSet::numbered(nb), gens);
        JslMor rep = rep_iso(s);  // validated join-morphism
        ACC(is_bijective(rep));
    }
    for (int it = 0; it < 200; ++it) {
        int nr = 1 + (int)(rng() % 5), nc = 1 + (int)(rng() % 5);
        FinRel g(FinSet::numbered(nr, "r"), FinSet::numbered(nc, "c"));
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j)
                if (rng() % 100 < 40) g.set_edge(i, j);
        ACC(dep_isomorphic(g, reduce(g).reduced));
    }
    for (int nr = 1; nr <= 3; ++nr)
        for (int nc = 1; nc <= 3; ++nc)
            for (unsigned m = 0; m < (1u << (nr * nc)); ++m) {
                FinRel g(FinSet::numbered(nr, "r"), FinSet::numbered(nc, "c"));
                for (int i = 0; i < nr; ++i)
                    for (int j = 0; j < nc; ++j)
                        if (m & (1u << (i * nc + j))) g.set_edge(i, j);
                ACC(bipartite_dimension(g) == bipartite_dimension(reduce(g).reduced));
            }
    verdict(4, "Dep/JSL equivalence round trips and dimension preservation");
}

TEST_CASE("criterion 5") {
    case_fail = 0;
    FinSet odd({"1", "3", "5"}), even({"0", "2", "4", "6"});
    FinRel g(odd, even);
    int odd_v[] = {1, 3, 5}, even_v[] = {0, 2, 4, 6};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j)
            if (std::abs(odd_v[i] - even_v[j]) == 1) g.set_edge(i, j);
    Jsl s = open_of(g);
    ACC(s.size() == 7);
    ACC(s.join_irreducibles().size() == 3);
    ACC(s.meet_irreducibles().size() == 4);
    ACC(bipartite_dimension(g) == 3);
    verdict(5, "the P6 lattice has 7 opens, |J| = 3, |M| = 4, dimension 3");
}

TEST_CASE("criterion 6") {
    case_fail = 0;
    std::mt19937_64 rng(66066);
    for (int it = 0; it < 100; ++it) {
        Language l = random_language(rng, 5);
        ACC(dependency_theorem_check(l).ok);

        // pentagram(jslDfaMin(L^r)) is isomorphic to jslDfaMin(L) via dr_L
        Language lr = reverse(l);
        MinJslDfa mr = jsl_dfa_min(lr);
        MinJslDfa ml = jsl_dfa_min(l);
        JslDfa pent = pentagram(mr.machine);
        std::vector<int> ji = mr.machine.carrier.join_irreducibles();
        std::map<Language, int> target;
        for (int y = 0; y < ml.machine.size(); ++y)
            target[lang_of_element(ml.machine, y)] = y;
        std::vector<int> map(pent.size(), -1);
        bool built = true;
        for (int e = 0; e < pent.size(); ++e) {
            // recover the original element: the join of irreducibles whose
            // dual bits are absent
            Bits x(mr.machine.carrier.base.size());
            for (size_t p = 0; p < ji.size(); ++p)
                if (!pent.carrier.family[e].test((int)p))
                    x |= mr.machine.carrier.family[ji[p]];
            int orig = mr.machine.carrier.index_of(x);
            if (orig < 0) {
                built = false;
                break;
            }
            auto it = target.find(dr_l(l, lang_of_element(mr.machine, orig)));
            if (it == target.end()) {
                built = false;
                break;
            }
            map[e] = it->second;
        }
        ACC(built && is_jsl_dfa_iso(pent, ml.machine, map));

        // Dependency Lemma biconditional on every representative pair
        QuotientIndex qi = left_quotients(l);
        QuotientIndex qir = left_quotients(lr);
        for (int i = 0; i < qi.size(); ++i)
            for (int j = 0; j < qir.size(); ++j) {
                bool not_below = !subset_lang(qi.quotient(i), dr_l(l, qir.quotient(j)));
                Word vr(qir.reps[j].rbegin(), qir.reps[j].rend());
                ACC(not_below == member(l, qi.reps[i] + vr));
            }
    }
    verdict(6, "dependency theorem, dr_L duality and the dependency lemma");
}

TEST_CASE("criterion 7") {
    case_fail = 0;
    // the syntactic monoid of a+aa has exactly 4 elements, against a
    // context-partition oracle over words of length <= 6
    {
        Language l = lang("a+aa");
        MonoidDfa syn = syntactic_monoid(l);
        ACC(syn.monoid.size() == 4);
        auto ws = words_up_to(l.alphabet, 6);
        std::set<std::vector<bool>> sigs;
        for (const Word& w : ws) {
            std::vector<bool> sig;
            for (const Word& x : ws)
                for (const Word& y : ws) sig.push_back(member(l, x + w + y));
            sigs.insert(sig);
        }
        ACC((int)sigs.size() == 4);
    }
    std::mt19937_64 rng(77077);
    for (int it = 0; it < 30; ++it) {
        Language l = random_language(rng, 4);
        // transitionSemiring(jslDfaMin(L)) and the syntactic semiring agree
        // via the generator-respecting map (identical tables here), and the
        // laws hold exhaustively
        SemiringDfa syn = syntactic_semiring(l);
        SemiringDfa ts = transition_semiring(jsl_dfa_min(l).machine);
        verify_semiring(syn.semiring);
        ACC(syn.semiring.size() == ts.semiring.size());
        ACC(syn.semiring.mult == ts.semiring.mult);
        ACC(syn.semiring.gens == ts.semiring.gens);
        ACC(lang_of(syn.machine) == l);

        // reach(jslDfaSyn(L)) is the syntactic monoid dfa
        MonoidDfa mon = syntactic_monoid(l);
        std::set<int> seen{syn.machine.init};
        std::vector<int> order{syn.machine.init};
        for (size_t i = 0; i < order.size(); ++i)
            for (int a = 0; a < l.alphabet.size(); ++a) {
                int nx = syn.machine.trans[a][order[i]];
                if (seen.insert(nx).second) order.push_back(nx);
            }
        ACC((int)order.size() == mon.monoid.size());
        Dfa reach_dfa;
        reach_dfa.alphabet = l.alphabet;
        reach_dfa.states = FinSet::numbered((int)order.size(), "r");
        std::map<int, int> re;
        for (size_t i = 0; i < order.size(); ++i) re[order[i]] = (int)i;
        reach_dfa.initial = 0;
        reach_dfa.final = Bits((int)order.size());
        reach_dfa.next.assign(l.alphabet.size(), std::vector<int>((int)order.size()));
        for (size_t i = 0; i < order.size(); ++i) {
            if (syn.machine.is_final(order[i])) reach_dfa.final.set((int)i);
            for (int a = 0; a < l.alphabet.size(); ++a)
                reach_dfa.next[a][i] = re[syn.machine.trans[a][order[i]]];
        }
        ACC(iso_dfa(reach_dfa, mon.dfa));

        // rqc duality
        ACC(rqc_duality_check(jsl_dfa_min(l).machine).ok);
    }
    verdict(7, "algebraic dualities: semirings, monoids and rqc");
}

TEST_CASE("criterion 8") {
    case_fail = 0;
    std::mt19937_64 rng(88088);
    int done = 0;
    while (done < 100) {
        Nfa n = random_nfa(rng, 4, 2);
        AtomicityReport r = atomicity(n);
        if (!r.direct_available) continue;  // draw again (cap hit)
        ACC(r.atomic_direct == r.atomic_via_rsc);
        ACC(r.positive_direct == r.positive_via_order);
        ACC(r.subatomic_direct == r.subatomic_via_monoid);
        ++done;
    }
    for (int it = 0; it < 10; ++it) {
        Language l = random_language(rng, 5);
        AtomicityReport r = atomicity(canonical_rfsa(l));
        ACC(r.atomic_via_rsc);
        if (r.direct_available) ACC(r.atomic_direct);
    }
    verdict(8, "atomicity: direct and characterization predicates agree");
}

TEST_CASE("criterion 9") {
    case_fail = 0;
    // example machines and their (faithful) flag patterns
    {
        Alphabet a("a");
        FinSet st({"p", "q", "r"});
        FinRel t(st, st);
        t.set_edge(0, 1);
        t.set_edge(1, 2);
        Bits init(3), fin(3);
        init.set(0);
        init.set(1);
        fin.set(2);
        SaturationReport r = saturation(mk_nfa(a, st, init, fin, {t}));
        ACC(r.locally);
        ACC(!r.intersection);
    }
    {
        // the a+b+(a^+ + b^+)c^+ figure machine is not locally saturated as
        // drawn (three forced edges missing), and the both-saturated
        // non-transition-maximal pattern is realized by a concrete machine
        Alphabet abc("abc");
        FinSet st({"i", "la", "mid", "rb", "bot"});
        std::vector<FinRel> tr(3, FinRel(st, st));
        auto E = [&](int s, char c, int t2) { tr[abc.index(c)].set_edge(s, t2); };
        E(0, 'a', 1);
        E(0, 'a', 2);
        E(0, 'b', 2);
        E(0, 'b', 3);
        E(1, 'a', 1);
        E(1, 'c', 2);
        E(1, 'c', 4);
        E(3, 'b', 3);
        E(3, 'c', 2);
        E(3, 'c', 4);
        E(4, 'c', 4);
        Bits init(5), fin(5);
        init.set(0);
        fin.set(2);
        fin.set(4);
        Nfa figure = mk_nfa(abc, st, init, fin, std::move(tr));
        SaturationReport r = saturation(figure);
        ACC(!r.locally);
        ACC(!r.transition_maximal);
        Nfa dashed = figure;
        dashed.trans[2].set_edge(2, 4);  // the dashed c-transition
        ACC(from_nfa(dashed) == from_nfa(figure));
        Nfa witness = nfa_from_json(R"({"alphabet":"ab",
            "states":["q0","q1","q2","q3"],
            "initial":["q0"],"final":["q2"],
            "trans":[["q0","a","q2"],["q1","a","q0"],["q1","a","q1"],
                     ["q3","a","q1"],["q3","a","q2"],["q0","b","q3"],
                     ["q1","b","q0"],["q1","b","q1"],["q2","b","q2"],
                     ["q3","b","q2"]]})");
        SaturationReport rw = saturation(witness);
        ACC(rw.locally);
        ACC(rw.intersection);
        ACC(!rw.transition_maximal);
    }
    std::mt19937_64 rng(99099);
    for (int it = 0; it < 8; ++it) {
        Language l = random_language(rng, 6);
        SaturationReport r = saturation(sat_min_dfa(l));
        ACC(r.transition_maximal);
    }
    for (int it = 0; it < 200; ++it) {
        Nfa n = random_nfa(rng, 4, 2);
        Nfa s = simple_irr(n);
        ACC(from_nfa(s) == from_nfa(n));
        ACC(s.size() <= n.size());
    }
    for (int it = 0; it < 25; ++it) {
        Nfa n = random_nfa(rng, 4, 2);
        Nfa e = transition_maximal_extension(n);
        ACC(iso_nfa(e, transition_maximal_extension(e)));
        SaturationReport r = saturation(e);
        ACC(r.locally);
        ACC(r.intersection);
        ACC(r.transition_maximal);
    }
    verdict(9, "saturation examples, irreducible simplification, extensions");
}

TEST_CASE("criterion 10") {
    case_fail = 0;
    std::mt19937_64 rng(10010);
    for (int it = 0; it < 100; ++it) {
        Nfa n = random_nfa(rng, 4, 2);
        JslDfa j = full_subset(n);
        // H_e is a legitimate L-covering (throws on failure)
        try {
            covering_of_extension(j);
        } catch (const std::exception&) {
            ACC(false);
        }
        ACC(atomizer_open_check(j).ok);
    }
    verdict(10, "atomizer coverings are legitimate; theta is a bijection");
}
