#include "depaut/jsl.hh"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace depaut {

int Jsl::index_of(const Bits& b) const {
    auto it = std::lower_bound(family.begin(), family.end(), b);
    if (it != family.end() && *it == b) return (int)(it - family.begin());
    return -1;
}

int Jsl::bottom() const { return index_of(Bits(base.size())); }

int Jsl::top() const {
    Bits t(base.size());
    for (const Bits& m : family) t |= m;
    return index_of(t);
}

int Jsl::join2(int x, int y) const {
    int i = index_of(family[x] | family[y]);
    if (i < 0) throw DefectError("Jsl: family not union-closed");
    return i;
}

int Jsl::meet2(int x, int y) const {
    Bits inter = family[x] & family[y];
    Bits m(base.size());
    for (const Bits& f : family)
        if (f.subset_of(inter)) m |= f;
    int i = index_of(m);
    if (i < 0) throw DefectError("Jsl: meet not in family");
    return i;
}

int Jsl::join(const std::vector<int>& xs) const {
    Bits u(base.size());
    for (int x : xs) u |= family[x];
    int i = index_of(u);
    if (i < 0) throw DefectError("Jsl: family not union-closed");
    return i;
}

int Jsl::meet(const std::vector<int>& xs) const {
    if (xs.empty()) return top();
    Bits inter = family[xs[0]];
    for (int x : xs) inter &= family[x];
    Bits m(base.size());
    for (const Bits& f : family)
        if (f.subset_of(inter)) m |= f;
    int i = index_of(m);
    if (i < 0) throw DefectError("Jsl: meet not in family");
    return i;
}

std::vector<int> Jsl::join_irreducibles() const {
    std::vector<int> ji;
    for (int i = 0; i < size(); ++i) {
        Bits u(base.size());
        for (int j = 0; j < size(); ++j)
            if (j != i && family[j].subset_of(family[i])) u |= family[j];
        if (u != family[i]) ji.push_back(i);
    }
    return ji;
}

std::vector<int> Jsl::meet_irreducibles() const {
    // x is meet-irreducible iff the meet of everything strictly above differs from x
    std::vector<int> mi;
    for (int i = 0; i < size(); ++i) {
        Bits inter = Bits::full(base.size());
        bool above = false;
        for (int j = 0; j < size(); ++j)
            if (j != i && family[i].subset_of(family[j])) {
                inter &= family[j];
                above = true;
            }
        if (!above) continue;  // top
        Bits m(base.size());
        for (const Bits& f : family)
            if (f.subset_of(inter)) m |= f;
        if (m != family[i]) mi.push_back(i);
    }
    return mi;
}

Jsl mk_jsl(FinSet base, const std::vector<Bits>& members) {
    int w = base.size();
    std::set<Bits> seen;
    seen.insert(Bits(w));
    std::vector<Bits> work(seen.begin(), seen.end());
    for (const Bits& m : members) {
        if ((int)m.size() != w) throw std::invalid_argument("mk_jsl: member width mismatch");
        if (seen.insert(m).second) work.push_back(m);
    }
    std::vector<Bits> gens = work;
    for (size_t i = 0; i < work.size(); ++i)
        for (const Bits& g : gens) {
            Bits u = work[i] | g;
            if (seen.insert(u).second) work.push_back(u);
        }
    Jsl s;
    s.base = std::move(base);
    s.family.assign(seen.begin(), seen.end());
    return s;
}

Jsl powerset_jsl(const FinSet& base) {
    if (base.size() > 20) throw CapExceeded("powerset_jsl: base too large");
    std::vector<Bits> fam;
    int n = base.size();
    for (int mask = 0; mask < (1 << n); ++mask) {
        Bits b(n);
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) b.set(i);
        fam.push_back(b);
    }
    return mk_jsl(base, fam);
}

JslMor mk_jsl_mor(Jsl dom, Jsl cod, std::vector<int> map) {
    if ((int)map.size() != dom.size())
        throw std::invalid_argument("mk_jsl_mor: map size mismatch");
    for (int v : map)
        if (v < 0 || v >= cod.size()) throw std::invalid_argument("mk_jsl_mor: map out of range");
    if (map[dom.bottom()] != cod.bottom())
        throw std::invalid_argument("mk_jsl_mor: bottom not preserved");
    std::unordered_map<Bits, int, BitsHash> didx, cidx;
    for (int i = 0; i < dom.size(); ++i) didx[dom.family[i]] = i;
    for (int i = 0; i < cod.size(); ++i) cidx[cod.family[i]] = i;
    for (int x = 0; x < dom.size(); ++x)
        for (int y = x + 1; y < dom.size(); ++y) {
            int j = didx.at(dom.family[x] | dom.family[y]);
            int cj = cidx.at(cod.family[map[x]] | cod.family[map[y]]);
            if (map[j] != cj) throw std::invalid_argument("mk_jsl_mor: joins not preserved");
        }
    return JslMor{std::move(dom), std::move(cod), std::move(map)};
}

JslMor jsl_identity(const Jsl& s) {
    std::vector<int> id(s.size());
    for (int i = 0; i < s.size(); ++i) id[i] = i;
    return JslMor{s, s, std::move(id)};
}

JslMor jsl_compose(const JslMor& f, const JslMor& g) {
    if (f.cod.family != g.dom.family)
        throw std::invalid_argument("jsl_compose: type mismatch");
    std::vector<int> m(f.map.size());
    for (size_t i = 0; i < f.map.size(); ++i) m[i] = g.map[f.map[i]];
    return JslMor{f.dom, g.cod, std::move(m)};
}

bool is_bijective(const JslMor& f) {
    if (f.dom.size() != f.cod.size()) return false;
    std::vector<bool> hit(f.cod.size(), false);
    for (int v : f.map) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

JslMor adjoint(const JslMor& f) {
    // the right adjoint f_*(t) = join{ s : f(s) <= t } of a join-morphism is
    // a morphism between the order duals; the adjoint of such a morphism is
    // computed in the dual order, i.e. as the left adjoint, so that taking
    // the adjoint twice literally returns f
    std::vector<int> star(f.cod.size());
    if (!f.between_duals) {
        for (int t = 0; t < f.cod.size(); ++t) {
            Bits u(f.dom.base.size());
            for (int s = 0; s < f.dom.size(); ++s)
                if (f.cod.leq(f.map[s], t)) u |= f.dom.family[s];
            int i = f.dom.index_of(u);
            if (i < 0) throw DefectError("adjoint: join escaped the family");
            star[t] = i;
        }
    } else {
        for (int t = 0; t < f.cod.size(); ++t) {
            std::vector<int> above;
            for (int s = 0; s < f.dom.size(); ++s)
                if (f.cod.leq(t, f.map[s])) above.push_back(s);
            star[t] = f.dom.meet(above);
        }
    }
    return JslMor{f.cod, f.dom, std::move(star), !f.between_duals};
}

DualJsl dual_jsl(const Jsl& s) {
    std::vector<int> ji = s.join_irreducibles();
    FinSet base;
    for (int j : ji) base.labels.push_back(s.base.size() ? s.family[j].to_string() : "j");
    // D(x) = { j in J(s) : j not<= x }; D(x meet y) = D(x) u D(y)
    std::vector<Bits> fam;
    fam.reserve(s.size());
    for (int x = 0; x < s.size(); ++x) {
        Bits d((int)ji.size());
        for (size_t p = 0; p < ji.size(); ++p)
            if (!s.leq(ji[p], x)) d.set((int)p);
        fam.push_back(d);
    }
    Jsl dual;
    dual.base = base;
    dual.family = fam;
    std::sort(dual.family.begin(), dual.family.end());
    dual.family.erase(std::unique(dual.family.begin(), dual.family.end()), dual.family.end());
    if ((int)dual.family.size() != s.size()) throw DefectError("dual_jsl: D not injective");
    DualJsl out;
    out.jsl = dual;
    out.to_dual.resize(s.size());
    out.from_dual.assign(s.size(), -1);
    for (int x = 0; x < s.size(); ++x) {
        int d = dual.index_of(fam[x]);
        out.to_dual[x] = d;
        out.from_dual[d] = x;
    }
    return out;
}

Jsl open_of(const FinRel& g) {
    Jsl s;
    s.base = g.dst;
    s.family = open_sets(g);
    return s;
}

JslMor open_mor(const DepMor& f) {
    Jsl dom = open_of(f.dom), cod = open_of(f.cod);
    FinRel upco = converse(f.upper);
    std::vector<int> map(dom.size());
    for (int i = 0; i < dom.size(); ++i) {
        int j = cod.index_of(image(upco, dom.family[i]));
        if (j < 0) throw DefectError("open_mor: image not open");
        map[i] = j;
    }
    return mk_jsl_mor(std::move(dom), std::move(cod), std::move(map));
}

FinRel pirr_of(const Jsl& s) {
    std::vector<int> ji = s.join_irreducibles(), mi = s.meet_irreducibles();
    FinSet jset, mset;
    for (int j : ji) jset.labels.push_back("j" + s.family[j].to_string());
    for (int m : mi) mset.labels.push_back("m" + s.family[m].to_string());
    FinRel r(jset, mset);
    for (size_t a = 0; a < ji.size(); ++a)
        for (size_t b = 0; b < mi.size(); ++b)
            if (!s.leq(ji[a], mi[b])) r.set_edge((int)a, (int)b);
    return r;
}

DepMor pirr_mor(const JslMor& f) {
    std::vector<int> jis = f.dom.join_irreducibles(), mis = f.dom.meet_irreducibles();
    std::vector<int> jit = f.cod.join_irreducibles(), mit = f.cod.meet_irreducibles();
    FinRel ps = pirr_of(f.dom), pt = pirr_of(f.cod);
    FinRel rel(ps.src, pt.dst);
    for (size_t a = 0; a < jis.size(); ++a)
        for (size_t b = 0; b < mit.size(); ++b)
            if (!f.cod.leq(f.map[jis[a]], mit[b])) rel.set_edge((int)a, (int)b);
    DepMor m = mk_dep_mor(rel, ps, pt);
    // cross-check the closed-form components against the maximum witnesses
    JslMor fs = adjoint(f);
    FinRel lo(ps.src, pt.src), hi(pt.dst, ps.dst);
    for (size_t a = 0; a < jis.size(); ++a)
        for (size_t b = 0; b < jit.size(); ++b)
            if (f.cod.leq(jit[b], f.map[jis[a]])) lo.set_edge((int)a, (int)b);
    for (size_t a = 0; a < mit.size(); ++a)
        for (size_t b = 0; b < mis.size(); ++b)
            if (f.dom.leq(fs.map[mit[a]], mis[b])) hi.set_edge((int)a, (int)b);
    if (!lo.same_table(m.lower) || !hi.same_table(m.upper))
        throw DefectError("pirr_mor: closed-form components differ from maximum witnesses");
    return m;
}

JslMor rep_iso(const Jsl& s) {
    std::vector<int> mi = s.meet_irreducibles();
    Jsl cod = open_of(pirr_of(s));
    std::vector<int> map(s.size());
    for (int x = 0; x < s.size(); ++x) {
        Bits y((int)mi.size());
        for (size_t b = 0; b < mi.size(); ++b)
            if (!s.leq(x, mi[b])) y.set((int)b);
        int i = cod.index_of(y);
        if (i < 0) throw DefectError("rep_iso: rep image not open");
        map[x] = i;
    }
    JslMor f = mk_jsl_mor(s, std::move(cod), std::move(map));
    if (!is_bijective(f)) throw DefectError("rep_iso: not bijective");
    return f;
}

RoundTripReport check_equivalence_round_trips(uint64_t seed, int n_cases) {
    RoundTripReport rep;
    std::mt19937_64 rng(seed);
    for (int c = 0; c < n_cases && rep.ok; ++c) {
        int nbase = 1 + (int)(rng() % 5);
        int k = 1 + (int)(rng() % 6);
        std::vector<Bits> gens;
        for (int i = 0; i < k; ++i) {
            Bits b(nbase);
            for (int j = 0; j < nbase; ++j)
                if (rng() & 1) b.set(j);
            gens.push_back(b);
        }
        Jsl s = mk_jsl(FinSet::numbered(nbase), gens);
        try {
            JslMor r = rep_iso(s);
            if (!is_bijective(r)) {
                rep.ok = false;
                rep.detail = "rep not bijective";
            }
        } catch (const std::exception& e) {
            rep.ok = false;
            rep.detail = e.what();
        }
        ++rep.families_checked;

        int nr = 1 + (int)(rng() % 5), nc = 1 + (int)(rng() % 5);
        FinRel g(FinSet::numbered(nr, "r"), FinSet::numbered(nc, "c"));
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j)
                if (rng() % 100 < 40) g.set_edge(i, j);
        try {
            Reduction red = reduce(g);
            if (!dep_isomorphic(g, red.reduced)) {
                rep.ok = false;
                rep.detail = "reduce not Dep-isomorphic to original";
            }
        } catch (const std::exception& e) {
            rep.ok = false;
            rep.detail = e.what();
        }
        ++rep.relations_checked;
    }
    return rep;
}

std::string jsl_to_text(const Jsl& s) {
    std::ostringstream os;
    os << "base:";
    for (const auto& l : s.base.labels) os << " " << l;
    os << "\n";
    for (const Bits& m : s.family) {
        os << "{";
        bool first = true;
        m.for_each([&](int i) {
            if (!first) os << ",";
            os << s.base.labels[i];
            first = false;
        });
        os << "}\n";
    }
    return os.str();
}

std::string jsl_to_dot(const Jsl& s) {
    // Hasse diagram: x -> y iff y covers x
    std::ostringstream os;
    os << "digraph jsl {\n  rankdir=BT;\n";
    for (int i = 0; i < s.size(); ++i) {
        os << "  n" << i << " [label=\"{";
        bool first = true;
        s.family[i].for_each([&](int b) {
            if (!first) os << ",";
            os << s.base.labels[b];
            first = false;
        });
        os << "}\"];\n";
    }
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
            if (x == y || !s.leq(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < s.size() && cover; ++z)
                if (z != x && z != y && s.leq(x, z) && s.leq(z, y)) cover = false;
            if (cover) os << "  n" << x << " -> n" << y << ";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace depaut
