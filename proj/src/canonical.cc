#include "depaut/canonical.hh"

#include <algorithm>
#include <map>
#include <set>

#include "depaut/algebra.hh"

namespace depaut {

Language CanonicalMachine::lang_of_elem(int x) const {
    Language u = empty_language(language.alphabet);
    machine.carrier.family[x].for_each([&](int i) { u = union_lang(u, base_langs[i]); });
    return u;
}

namespace {

// all 2^n subsets as a Jsl plus the standard machine pieces shared by the
// boolean constructions: delta_a(sigma) is a preimage under a base function
CanonicalMachine boolean_machine(const Language& l, const std::vector<Language>& base_langs,
                                 const std::vector<std::string>& base_labels,
                                 const std::vector<std::vector<int>>& base_step,
                                 const Bits& init_bits, int eps_base) {
    int n = (int)base_langs.size();
    FinSet base{base_labels};
    Jsl carrier = powerset_jsl(base);
    std::vector<std::vector<int>> trans(l.alphabet.size(), std::vector<int>(carrier.size()));
    for (int a = 0; a < l.alphabet.size(); ++a)
        for (int x = 0; x < carrier.size(); ++x) {
            Bits img(n);
            for (int b = 0; b < n; ++b)
                if (carrier.family[x].test(base_step[a][b])) img.set(b);
            trans[a][x] = carrier.index_of(img);
        }
    int init = carrier.index_of(init_bits);
    int topnf = carrier.index_of(Bits::single(n, eps_base).complement());
    CanonicalMachine out;
    out.machine = mk_jsl_dfa(l.alphabet, std::move(carrier), init, std::move(trans), topnf);
    out.base_langs = base_langs;
    out.language = l;
    return out;
}

}  // namespace

CanonicalMachine bool_min(const Language& l, int atom_cap) {
    Language lr = reverse(l);
    if (lr.states() > atom_cap)
        throw CapExceeded("bool_min: " + std::to_string(lr.states()) + " atoms exceed cap " +
                          std::to_string(atom_cap));
    std::vector<Language> at = atoms(l);  // indexed by the states of minDfa(L^r)
    QuotientIndex qir = left_quotients(lr);
    std::vector<std::string> labels;
    for (const Word& w : qir.reps) labels.push_back("[" + word_display(Word(w.rbegin(), w.rend())) + "]");
    // delta_a(sigma) = { x : delta_rev(x, a) in sigma }
    CanonicalMachine out =
        boolean_machine(l, at, labels, lr.next, lr.final, 0);
    return out;
}

CanonicalMachine dist_min(const Language& l, int atom_cap) {
    Language lr = reverse(l);
    int n = lr.states();
    if (n > atom_cap)
        throw CapExceeded("dist_min: " + std::to_string(n) + " atoms exceed cap " +
                          std::to_string(atom_cap));
    std::vector<Language> at = atoms(l);
    // quotients as atom sets are the rows of the dependency relation; close
    // them under unions and intersections by alternating passes
    FinRel dr = dependency_relation(l);
    std::set<Bits> fam(dr.rows.begin(), dr.rows.end());
    fam.insert(Bits(n));
    fam.insert(Bits::full(n));  // empty union and empty intersection
    int passes = 0;
    for (bool grew = true; grew; ++passes) {
        grew = false;
        std::vector<Bits> cur(fam.begin(), fam.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                if (fam.insert(cur[i] | cur[j]).second) grew = true;
        cur.assign(fam.begin(), fam.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                if (fam.insert(cur[i] & cur[j]).second) grew = true;
    }
    (void)passes;
    Jsl carrier;
    QuotientIndex qir = left_quotients(lr);
    for (const Word& w : qir.reps)
        carrier.base.labels.push_back("[" + word_display(Word(w.rbegin(), w.rend())) + "]");
    carrier.family.assign(fam.begin(), fam.end());
    std::vector<std::vector<int>> trans(l.alphabet.size(), std::vector<int>(carrier.size()));
    for (int a = 0; a < l.alphabet.size(); ++a)
        for (int x = 0; x < carrier.size(); ++x) {
            Bits img(n);
            for (int b = 0; b < n; ++b)
                if (carrier.family[x].test(lr.next[a][b])) img.set(b);
            int i = carrier.index_of(img);
            if (i < 0) throw DefectError("dist_min: family not closed under letter quotients");
            trans[a][x] = i;
        }
    int init = carrier.index_of(lr.final);
    Bits tnf(n);
    for (const Bits& m : carrier.family)
        if (!m.test(0)) tnf |= m;
    int topnf = carrier.index_of(tnf);
    if (init < 0 || topnf < 0) throw DefectError("dist_min: carrier misses init or top-nonfinal");
    CanonicalMachine out;
    out.machine = mk_jsl_dfa(l.alphabet, std::move(carrier), init, std::move(trans), topnf);
    out.base_langs = at;
    out.language = l;
    return out;
}

CanonicalMachine syn_bool_min(const Language& l, int class_cap) {
    MonoidDfa syn = syntactic_monoid(l);
    int n = syn.monoid.size();
    if (n > class_cap)
        throw CapExceeded("syn_bool_min: " + std::to_string(n) + " classes exceed cap " +
                          std::to_string(class_cap));
    // class languages from the monoid dfa
    std::vector<Language> class_langs;
    std::vector<std::string> labels;
    for (int c = 0; c < n; ++c) {
        Dfa d = syn.dfa;
        d.final = Bits::single(n, c);
        class_langs.push_back(from_dfa(d));
        labels.push_back("[" + word_display(syn.monoid.witness[c]) + "]");
    }
    // delta_a(sigma) = { c : [a] . c in sigma }, and [eps] is the unit
    std::vector<std::vector<int>> step(l.alphabet.size(), std::vector<int>(n));
    for (int a = 0; a < l.alphabet.size(); ++a)
        for (int c = 0; c < n; ++c) step[a][c] = syn.monoid.mult[syn.monoid.gens[a]][c];
    Bits init_bits(n);
    for (int c = 0; c < n; ++c)
        if (member(l, syn.monoid.witness[c])) init_bits.set(c);
    return boolean_machine(l, class_langs, labels, step, init_bits, syn.monoid.unit);
}

std::vector<Language> kappa(const Language& l, int atom_cap) {
    Language lr = reverse(l);
    if (lr.states() > atom_cap) throw CapExceeded("kappa: atom cap exceeded");
    std::vector<Language> at = atoms(l);
    // transition relationship: kappa(x) subseteq a^{-1} kappa(y) iff
    // delta_rev(x, a) = y
    for (int a = 0; a < l.alphabet.size(); ++a)
        for (int x = 0; x < lr.states(); ++x)
            for (int y = 0; y < lr.states(); ++y) {
                bool incl =
                    subset_lang(at[x], left_word_quotient(at[y], Word(1, l.alphabet.letter(a))));
                if (incl != (lr.next[a][x] == y))
                    throw DefectError("kappa: transition relationship violated");
            }
    return at;
}

namespace {

// dr_L(v^{-1}L^r) as an atom set: the union of the DR rows avoiding column v
Bits dr_atom_set(const FinRel& dr, int v) {
    Bits u(dr.n_cols());
    for (int q = 0; q < dr.n_rows(); ++q)
        if (!dr.rows[q].test(v)) u |= dr.rows[q];
    return u;
}

// lambda_L(v^{-1}L^r) as an atom set: intersection of the rows containing v
Bits lambda_atom_set(const FinRel& dr, int v) {
    Bits u = Bits::full(dr.n_cols());
    for (int q = 0; q < dr.n_rows(); ++q)
        if (dr.rows[q].test(v)) u &= dr.rows[q];
    return u;
}

}  // namespace

std::vector<Language> lambda_bij(const Language& l, int atom_cap) {
    CanonicalMachine dm = dist_min(l, atom_cap);
    Language lr = reverse(l);
    QuotientIndex qir = left_quotients(lr);
    FinRel dr = dependency_relation(l);
    std::vector<int> ji = dm.machine.carrier.join_irreducibles();
    std::set<Bits> ji_sets;
    for (int j : ji) ji_sets.insert(dm.machine.carrier.family[j]);
    std::vector<Language> out;
    std::set<Bits> seen;
    for (int v = 0; v < lr.states(); ++v) {
        Bits lam = lambda_atom_set(dr, v);
        if (!ji_sets.count(lam))
            throw DefectError("lambda_bij: image is not join-irreducible in LD");
        if (!seen.insert(lam).second) throw DefectError("lambda_bij: not injective");
        Language lang = empty_language(l.alphabet);
        lam.for_each([&](int i) { lang = union_lang(lang, dm.base_langs[i]); });
        out.push_back(lang);
    }
    if (seen.size() != ji.size()) throw DefectError("lambda_bij: not onto J(LD)");
    // transition relationship: lambda(x) subseteq a^{-1} lambda(y) iff
    // y^{-1}L^r subseteq (xa)^{-1} L^r
    for (int a = 0; a < l.alphabet.size(); ++a)
        for (int x = 0; x < lr.states(); ++x)
            for (int y = 0; y < lr.states(); ++y) {
                bool incl =
                    subset_lang(out[x], left_word_quotient(out[y], Word(1, l.alphabet.letter(a))));
                bool expect = subset_lang(qir.quotient(y), qir.quotient(lr.next[a][x]));
                if (incl != expect)
                    throw DefectError("lambda_bij: transition relationship violated");
            }
    return out;
}

namespace {

// pentagram carrier element corresponding to a given element of s: its
// D-image bits { p : ji[p] not<= x }
Bits dual_bits(const Jsl& s, const std::vector<int>& ji, int x) {
    Bits d((int)ji.size());
    for (size_t p = 0; p < ji.size(); ++p)
        if (!s.leq(ji[p], x)) d.set((int)p);
    return d;
}

// the supseteq / subseteq order relation between the quotients of l
FinRel quotient_order_rel(const Language& l, bool supseteq) {
    QuotientIndex qi = left_quotients(l);
    FinSet st;
    for (const Word& w : qi.reps) st.labels.push_back(word_display(w));
    std::vector<Language> qs(qi.size());
    for (int i = 0; i < qi.size(); ++i) qs[i] = qi.quotient(i);
    FinRel r(st, st);
    for (int i = 0; i < qi.size(); ++i)
        for (int j = 0; j < qi.size(); ++j) {
            bool le = subset_lang(qs[i], qs[j]);
            if (supseteq ? subset_lang(qs[j], qs[i]) : le) r.set_edge(i, j);
        }
    return r;
}

// aut_Dep-isomorphism with bijective lower/upper witnesses
CheckReport check_aut_dep_iso(const DepAut& a, const DepAut& b, const std::vector<int>& lower_bij,
                              const std::vector<int>& upper_bij) {
    CheckReport rep;
    auto fail = [&](const std::string& why) {
        rep.ok = false;
        rep.detail = why;
        return rep;
    };
    FinRel lrel(a.lower.states, b.lower.states), urel(b.upper.states, a.upper.states);
    std::vector<bool> lhit(b.lower.size(), false), uhit(b.upper.size(), false);
    for (int i = 0; i < a.lower.size(); ++i) {
        if (lower_bij[i] < 0 || lower_bij[i] >= b.lower.size() || lhit[lower_bij[i]])
            return fail("lower witness is not a bijection");
        lhit[lower_bij[i]] = true;
        lrel.set_edge(i, lower_bij[i]);
    }
    for (int i = 0; i < a.upper.size(); ++i) {
        if (upper_bij[i] < 0 || upper_bij[i] >= b.upper.size() || uhit[upper_bij[i]])
            return fail("upper witness is not a bijection");
        uhit[upper_bij[i]] = true;
        urel.set_edge(upper_bij[i], i);
    }
    FinRel r = compose(lrel, b.rel);
    if (!r.same_table(compose(a.rel, converse(urel))))
        return fail("witnesses do not factor the same relation");
    for (int t = 0; t < a.lower.alphabet.size(); ++t)
        if (!compose(a.lower.trans[t], r).same_table(compose(r, converse(b.upper.trans[t]))))
            return fail("transition compatibility fails");
    if (!(image(r, a.lower.initial) == b.upper.final))
        return fail("R[I] != F'");
    if (!(image(converse(r), b.upper.initial) == a.lower.final))
        return fail("R~[I'] != F");
    return rep;
}

}  // namespace

CheckReport dual_bool_check(const Language& l, int atom_cap) {
    CheckReport rep;
    CanonicalMachine bm = bool_min(l, atom_cap);
    Language lr = reverse(l);
    JslDfa fs = full_subset(to_nfa(canonical_dfa(lr)));
    JslDfa pent = pentagram(bm.machine);
    std::vector<int> ji = bm.machine.carrier.join_irreducibles();
    // theta(S) = union of atoms [v^r] over v not in S = the complement atom set
    std::vector<int> map(fs.size());
    for (int x = 0; x < fs.size(); ++x) {
        Bits theta = fs.carrier.family[x].complement();
        int bm_elem = bm.machine.carrier.index_of(theta);
        if (bm_elem < 0) {
            rep.ok = false;
            rep.detail = "theta image missing from the boolean carrier";
            return rep;
        }
        int pe = pent.carrier.index_of(dual_bits(bm.machine.carrier, ji, bm_elem));
        if (pe < 0) {
            rep.ok = false;
            rep.detail = "theta image missing from the dual carrier";
            return rep;
        }
        map[x] = pe;
    }
    if (!is_jsl_dfa_iso(fs, pent, map)) {
        rep.ok = false;
        rep.detail = "theta is not a JSL-dfa isomorphism";
    }
    return rep;
}

CheckReport dual_dist_check(const Language& l, int atom_cap) {
    CheckReport rep;
    CanonicalMachine dm = dist_min(l, atom_cap);
    Language lr = reverse(l);
    FinRel dr = dependency_relation(l);
    Nfa sat = sat_min_dfa(lr);
    FinRel ge = quotient_order_rel(lr, /*supseteq=*/true);
    JslDfa a = det(mk_dep_aut(sat, ge, reverse(sat)));
    JslDfa pent = pentagram(dm.machine);
    std::vector<int> ji = dm.machine.carrier.join_irreducibles();
    std::vector<int> map(a.size());
    for (int x = 0; x < a.size(); ++x) {
        // rho(S) = intersection of dr_L(Y) over Y in S (atom sets)
        Bits rho = Bits::full(dr.n_cols());
        a.carrier.family[x].for_each([&](int v) { rho &= dr_atom_set(dr, v); });
        int e = dm.machine.carrier.index_of(rho);
        if (e < 0) {
            rep.ok = false;
            rep.detail = "rho image missing from the distributive carrier";
            return rep;
        }
        int pe = pent.carrier.index_of(dual_bits(dm.machine.carrier, ji, e));
        if (pe < 0) {
            rep.ok = false;
            rep.detail = "rho image missing from the dual carrier";
            return rep;
        }
        map[x] = pe;
    }
    if (!is_jsl_dfa_iso(a, pent, map)) {
        rep.ok = false;
        rep.detail = "rho is not a JSL-dfa isomorphism";
    }
    return rep;
}

CheckReport bool_dep_aut_check(const Language& l, int atom_cap) {
    CanonicalMachine bm = bool_min(l, atom_cap);
    Language lr = reverse(l);
    DepAut a = dep_of_nfa(reverse(to_nfa(canonical_dfa(lr))));
    DepAut b = airr(bm.machine);
    // lower: rev-state x |-> position of atom {x} in J(LP); upper: x |->
    // position of the coatom complement{x} in M(LP)
    std::vector<int> ji = bm.machine.carrier.join_irreducibles();
    std::vector<int> mi = bm.machine.carrier.meet_irreducibles();
    int n = lr.states();
    std::vector<int> lower_bij(n, -1), upper_bij(n, -1);
    for (int x = 0; x < n; ++x) {
        for (size_t p = 0; p < ji.size(); ++p)
            if (bm.machine.carrier.family[ji[p]] == Bits::single(n, x)) lower_bij[x] = (int)p;
        for (size_t p = 0; p < mi.size(); ++p)
            if (bm.machine.carrier.family[mi[p]] == Bits::single(n, x).complement())
                upper_bij[x] = (int)p;
    }
    return check_aut_dep_iso(a, b, lower_bij, upper_bij);
}

CheckReport dist_dep_aut_check(const Language& l, int atom_cap) {
    CanonicalMachine dm = dist_min(l, atom_cap);
    Language lr = reverse(l);
    FinRel dr = dependency_relation(l);
    Nfa sat = sat_min_dfa(lr);
    FinRel le = quotient_order_rel(lr, /*supseteq=*/false);
    DepAut a = mk_dep_aut(reverse(sat), le, sat);
    DepAut b = airr(dm.machine);
    std::vector<int> ji = dm.machine.carrier.join_irreducibles();
    std::vector<int> mi = dm.machine.carrier.meet_irreducibles();
    int n = lr.states();
    std::vector<int> lower_bij(n, -1), upper_bij(n, -1);
    for (int x = 0; x < n; ++x) {
        Bits lam = lambda_atom_set(dr, x), drs = dr_atom_set(dr, x);
        for (size_t p = 0; p < ji.size(); ++p)
            if (dm.machine.carrier.family[ji[p]] == lam) lower_bij[x] = (int)p;
        for (size_t p = 0; p < mi.size(); ++p)
            if (dm.machine.carrier.family[mi[p]] == drs) upper_bij[x] = (int)p;
    }
    return check_aut_dep_iso(a, b, lower_bij, upper_bij);
}

}  // namespace depaut
