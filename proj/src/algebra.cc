#include "depaut/algebra.hh"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "depaut/canonical.hh"

namespace depaut {

namespace {

struct TableHash {
    size_t operator()(const std::vector<int>& t) const {
        size_t h = t.size();
        for (int v : t) h = h * 1000003u + (size_t)v;
        return h;
    }
};

}  // namespace

MonoidDfa transition_monoid(const Dfa& d, int cap) {
    int n = d.size();
    std::vector<int> id(n);
    for (int q = 0; q < n; ++q) id[q] = q;
    std::unordered_map<std::vector<int>, int, TableHash> idx;
    FinMonoid m;
    idx[id] = 0;
    m.elems.push_back(id);
    m.witness.push_back("");
    std::vector<std::vector<int>> step;  // [elem][letter]
    for (size_t e = 0; e < m.elems.size(); ++e) {
        step.emplace_back(d.alphabet.size());
        for (int a = 0; a < d.alphabet.size(); ++a) {
            std::vector<int> f(n);
            for (int q = 0; q < n; ++q) f[q] = d.next[a][m.elems[e][q]];
            auto [it, fresh] = idx.try_emplace(f, (int)m.elems.size());
            if (fresh) {
                m.elems.push_back(f);
                m.witness.push_back(m.witness[e] + d.alphabet.letter(a));
                if ((int)m.elems.size() > cap)
                    throw CapExceeded("transition_monoid: closure exceeds cap");
            }
            step[e][a] = it->second;
        }
    }
    m.unit = 0;
    m.gens.resize(d.alphabet.size());
    for (int a = 0; a < d.alphabet.size(); ++a) m.gens[a] = step[0][a];
    int sz = m.size();
    m.mult.assign(sz, std::vector<int>(sz));
    for (int u = 0; u < sz; ++u)
        for (int v = 0; v < sz; ++v) {
            std::vector<int> f(n);
            for (int q = 0; q < n; ++q) f[q] = m.elems[v][m.elems[u][q]];
            m.mult[u][v] = idx.at(f);
        }
    // associativity and unit laws, exhaustively
    for (int u = 0; u < sz; ++u) {
        if (m.mult[u][m.unit] != u || m.mult[m.unit][u] != u)
            throw DefectError("transition_monoid: unit law fails");
        for (int v = 0; v < sz; ++v)
            for (int w = 0; w < sz; ++w)
                if (m.mult[m.mult[u][v]][w] != m.mult[u][m.mult[v][w]])
                    throw DefectError("transition_monoid: associativity fails");
    }
    MonoidDfa out;
    out.dfa.alphabet = d.alphabet;
    out.dfa.states = FinSet::numbered(sz, "f");
    out.dfa.initial = m.unit;
    out.dfa.final = Bits(sz);
    for (int e = 0; e < sz; ++e)
        if (d.final.test(m.elems[e][d.initial])) out.dfa.final.set(e);
    out.dfa.next.assign(d.alphabet.size(), std::vector<int>(sz));
    for (int a = 0; a < d.alphabet.size(); ++a)
        for (int e = 0; e < sz; ++e) out.dfa.next[a][e] = step[e][a];
    out.monoid = std::move(m);
    return out;
}

MonoidDfa syntactic_monoid(const Language& l, int cap) {
    return transition_monoid(canonical_dfa(l), cap);
}

void verify_semiring(const IdemSemiring& s) {
    int n = s.size();
    auto join = [&](int x, int y) {
        // carrier indices coincide with element indices by construction
        return s.carrier.join2(x, y);
    };
    for (int x = 0; x < n; ++x) {
        if (s.mult[x][s.unit] != x || s.mult[s.unit][x] != x)
            throw DefectError("semiring: unit law fails");
        if (s.mult[x][s.zero] != s.zero || s.mult[s.zero][x] != s.zero)
            throw DefectError("semiring: zero does not annihilate");
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (s.mult[s.mult[x][y]][z] != s.mult[x][s.mult[y][z]])
                    throw DefectError("semiring: associativity fails");
                if (s.mult[x][join(y, z)] != join(s.mult[x][y], s.mult[x][z]))
                    throw DefectError("semiring: left bilinearity fails");
                if (s.mult[join(y, z)][x] != join(s.mult[y][x], s.mult[z][x]))
                    throw DefectError("semiring: right bilinearity fails");
            }
        }
    }
}

SemiringDfa transition_semiring(const JslDfa& host, int cap) {
    const Jsl& hc = host.carrier;
    std::vector<int> ji = hc.join_irreducibles();
    int n = host.size();
    // elements are endomorphism tables of the host carrier; a table is
    // identified with its restriction to the join-irreducibles
    std::unordered_map<std::vector<int>, int, TableHash> idx;
    std::vector<std::vector<int>> elems;
    std::vector<std::vector<Word>> wit;
    auto add = [&](const std::vector<int>& t, std::vector<Word> w) {
        auto [it, fresh] = idx.try_emplace(t, (int)elems.size());
        if (fresh) {
            elems.push_back(t);
            if (w.size() > 6) w.resize(6);
            wit.push_back(std::move(w));
            if ((int)elems.size() > cap)
                throw CapExceeded("transition_semiring: closure exceeds cap");
        }
        return it->second;
    };
    std::vector<int> id(n), bot(n, hc.bottom());
    for (int x = 0; x < n; ++x) id[x] = x;
    int zero = add(bot, {});
    int unit = add(id, {Word("")});
    std::vector<int> gens;
    for (int a = 0; a < host.alphabet.size(); ++a)
        gens.push_back(add(host.trans[a], {Word(1, host.alphabet.letter(a))}));
    auto compose_t = [&](int x, int y) {  // first x, then y
        std::vector<int> t(n);
        for (int s = 0; s < n; ++s) t[s] = elems[y][elems[x][s]];
        return t;
    };
    auto join_t = [&](int x, int y) {
        std::vector<int> t(n);
        for (int s = 0; s < n; ++s) t[s] = hc.join2(elems[x][s], elems[y][s]);
        return t;
    };
    auto concat_wit = [&](const std::vector<Word>& a, const std::vector<Word>& b) {
        std::vector<Word> out;
        for (const Word& u : a)
            for (const Word& v : b) {
                out.push_back(u + v);
                if (out.size() >= 6) return out;
            }
        return out;
    };
    auto union_wit = [&](std::vector<Word> a, const std::vector<Word>& b) {
        for (const Word& v : b) {
            if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
            if (a.size() >= 6) break;
        }
        return a;
    };
    // worklist closure under composition and pointwise join
    for (size_t e = 0; e < elems.size(); ++e)
        for (size_t x = 0; x <= e; ++x) {
            add(compose_t((int)x, (int)e), concat_wit(wit[x], wit[e]));
            add(compose_t((int)e, (int)x), concat_wit(wit[e], wit[x]));
            add(join_t((int)e, (int)x), union_wit(wit[e], wit[x]));
        }
    int sz = (int)elems.size();

    IdemSemiring s;
    s.elems = elems;
    s.witness = wit;
    s.unit = unit;
    s.zero = zero;
    s.gens = gens;
    s.mult.assign(sz, std::vector<int>(sz));
    std::vector<std::vector<int>> jn(sz, std::vector<int>(sz));
    for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y) {
            auto mit = idx.find(compose_t(x, y));
            auto jit = idx.find(join_t(x, y));
            if (mit == idx.end() || jit == idx.end())
                throw DefectError("transition_semiring: closure is not closed");
            s.mult[x][y] = mit->second;
            jn[x][y] = jit->second;
        }
    // carrier: element tables as a union-closed family over J(host) x base,
    // with the family order forced to match the element order
    int bw = hc.base.size();
    FinSet base;
    for (size_t p = 0; p < ji.size(); ++p)
        for (int b = 0; b < bw; ++b)
            base.labels.push_back("j" + std::to_string(p) + "|" + hc.base.labels[b]);
    std::vector<Bits> fam(sz, Bits((int)ji.size() * bw));
    for (int e = 0; e < sz; ++e)
        for (size_t p = 0; p < ji.size(); ++p) {
            const Bits& val = hc.family[elems[e][ji[p]]];
            val.for_each([&](int b) { fam[e].set((int)p * bw + b); });
        }
    Jsl carrier = mk_jsl(base, fam);
    if (carrier.size() != sz)
        throw DefectError("transition_semiring: carrier is not union-closed as tables");
    std::vector<int> to_carrier(sz), from_carrier(sz);
    for (int e = 0; e < sz; ++e) {
        int c = carrier.index_of(fam[e]);
        to_carrier[e] = c;
        from_carrier[c] = e;
    }
    // sanity: carrier joins agree with pointwise joins
    for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y)
            if (carrier.join2(to_carrier[x], to_carrier[y]) != to_carrier[jn[x][y]])
                throw DefectError("transition_semiring: join encoding mismatch");
    // reindex everything by carrier order so semiring indices match carrier
    IdemSemiring out;
    out.carrier = carrier;
    out.elems.resize(sz);
    out.witness.resize(sz);
    out.mult.assign(sz, std::vector<int>(sz));
    for (int c = 0; c < sz; ++c) {
        out.elems[c] = s.elems[from_carrier[c]];
        out.witness[c] = s.witness[from_carrier[c]];
    }
    for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y)
            out.mult[x][y] = to_carrier[s.mult[from_carrier[x]][from_carrier[y]]];
    out.unit = to_carrier[s.unit];
    out.zero = to_carrier[s.zero];
    for (int g : s.gens) out.gens.push_back(to_carrier[g]);
    if (sz <= 300) verify_semiring(out);

    // the associated JSL-dfa: right multiplication by generators
    std::vector<std::vector<int>> trans(host.alphabet.size(), std::vector<int>(sz));
    for (int a = 0; a < host.alphabet.size(); ++a)
        for (int x = 0; x < sz; ++x) trans[a][x] = out.mult[x][out.gens[a]];
    // gamma_{complement L}: join of the reachable composite functions gamma_w
    // rejected by the host
    std::set<int> reach;
    std::queue<int> bfs;
    reach.insert(out.unit);
    bfs.push(out.unit);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int g : out.gens)
            if (reach.insert(out.mult[x][g]).second) bfs.push(out.mult[x][g]);
    }
    int tnf = out.zero;
    for (int x : reach)
        if (!host.is_final(out.elems[x][host.init]))
            tnf = out.carrier.join2(tnf, x);
    SemiringDfa sd;
    sd.machine = mk_jsl_dfa(host.alphabet, out.carrier, out.unit, std::move(trans), tnf);
    sd.semiring = std::move(out);
    return sd;
}

SemiringDfa syntactic_semiring(const Language& l, int cap) {
    SemiringDfa sd = transition_semiring(jsl_dfa_min(l).machine, cap);
    if (!(lang_of(sd.machine) == l))
        throw DefectError("syntactic_semiring: machine does not accept L");
    return sd;
}

IdemSemiring power_semiring(const FinMonoid& m, int cap) {
    int n = m.size();
    if ((1 << std::min(n, 24)) > cap)
        throw CapExceeded("power_semiring: 2^" + std::to_string(n) + " exceeds cap");
    FinSet base;
    for (int i = 0; i < n; ++i) base.labels.push_back("[" + word_display(m.witness[i]) + "]");
    IdemSemiring s;
    s.carrier = powerset_jsl(base);
    int sz = s.carrier.size();
    s.elems.resize(sz);
    s.witness.resize(sz);
    for (int x = 0; x < sz; ++x) {
        s.elems[x] = s.carrier.family[x].members();
        for (int i : s.elems[x])
            if (s.witness[x].size() < 6) s.witness[x].push_back(m.witness[i]);
    }
    s.zero = s.carrier.bottom();
    s.unit = s.carrier.index_of(Bits::single(n, m.unit));
    for (int g : m.gens) s.gens.push_back(s.carrier.index_of(Bits::single(n, g)));
    s.mult.assign(sz, std::vector<int>(sz));
    for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y) {
            Bits prod(n);
            s.carrier.family[x].for_each([&](int u) {
                s.carrier.family[y].for_each([&](int v) { prod.set(m.mult[u][v]); });
            });
            s.mult[x][y] = s.carrier.index_of(prod);
        }
    if (sz <= 300) verify_semiring(s);
    return s;
}

SimpleJslDfa jsl_dfa_syn_min(const Language& l) { return rqc(jsl_dfa_min(l).machine); }

CheckReport rqc_duality_check(const JslDfa& j) {
    CheckReport rep;
    if (!is_jsl_reachable(j)) {
        rep.ok = false;
        rep.detail = "input machine is not JSL-reachable";
        return rep;
    }
    JslDfa lhs = pentagram(transition_semiring(j).machine);
    SimpleJslDfa rhs = rqc(pentagram(j));
    if (!iso_by_language(lhs, rhs.machine).has_value()) {
        rep.ok = false;
        rep.detail = "acc is not an isomorphism onto the right-quotient closure";
    }
    return rep;
}

CheckReport power_dual_check(const Language& l, int cap) {
    CheckReport rep;
    // power semiring of the syntactic monoid dualises the boolean syntactic machine
    MonoidDfa syn = syntactic_monoid(l);
    JslDfa delta = full_subset(to_nfa(syn.dfa));
    JslDfa lhs = pentagram(transition_semiring(delta, cap).machine);
    CanonicalMachine sb = syn_bool_min(l);
    if (!iso_by_language(lhs, sb.machine).has_value()) {
        rep.ok = false;
        rep.detail = "power-semiring dual does not match the boolean syntactic machine";
        return rep;
    }
    // the syntactic semiring of L^r dualises the minimal syntactic machine of L
    JslDfa lhs2 = pentagram(syntactic_semiring(reverse(l), cap).machine);
    SimpleJslDfa rhs2 = jsl_dfa_syn_min(l);
    if (!iso_by_language(lhs2, rhs2.machine).has_value()) {
        rep.ok = false;
        rep.detail = "syntactic-semiring dual does not match the minimal syntactic machine";
    }
    return rep;
}

std::string semiring_to_text(const IdemSemiring& s) {
    std::ostringstream os;
    os << "elements: " << s.size() << "\n";
    for (int x = 0; x < s.size(); ++x) {
        os << x << (x == s.unit ? " (unit)" : x == s.zero ? " (zero)" : "") << " {";
        for (size_t i = 0; i < s.witness[x].size(); ++i)
            os << (i ? "," : "") << word_display(s.witness[x][i]);
        os << "}\n";
    }
    os << "mult:\n";
    for (int x = 0; x < s.size(); ++x) {
        for (int y = 0; y < s.size(); ++y) os << s.mult[x][y] << " ";
        os << "\n";
    }
    os << "gens:";
    for (int g : s.gens) os << " " << g;
    os << "\n";
    return os.str();
}

}  // namespace depaut
