#include "depaut/finrel.hh"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace depaut {

FinSet FinSet::numbered(int n, const std::string& prefix) {
    std::vector<std::string> ls;
    ls.reserve(n);
    for (int i = 0; i < n; ++i) ls.push_back(prefix + std::to_string(i));
    return FinSet(std::move(ls));
}

FinRel FinRel::identity(const FinSet& x) {
    FinRel r(x, x);
    for (int i = 0; i < x.size(); ++i) r.set_edge(i, i);
    return r;
}

FinRel FinRel::full(const FinSet& s, const FinSet& t) {
    FinRel r(s, t);
    for (auto& row : r.rows) row = Bits::full(t.size());
    return r;
}

int FinRel::edge_count() const {
    int c = 0;
    for (const Bits& row : rows) c += row.count();
    return c;
}

Bits FinRel::col(int j) const {
    Bits c(n_rows());
    for (int i = 0; i < n_rows(); ++i)
        if (rows[i].test(j)) c.set(i);
    return c;
}

FinRel compose(const FinRel& r, const FinRel& s) {
    if (r.dst.size() != s.src.size())
        throw std::invalid_argument("compose: dimension mismatch");
    FinRel out(r.src, s.dst);
    for (int i = 0; i < r.n_rows(); ++i)
        r.rows[i].for_each([&](int j) { out.rows[i] |= s.rows[j]; });
    return out;
}

FinRel converse(const FinRel& r) {
    FinRel out(r.dst, r.src);
    for (int i = 0; i < r.n_rows(); ++i)
        r.rows[i].for_each([&](int j) { out.rows[j].set(i); });
    return out;
}

FinRel rel_union(const FinRel& r, const FinRel& s) {
    if (r.src.size() != s.src.size() || r.dst.size() != s.dst.size())
        throw std::invalid_argument("rel_union: dimension mismatch");
    FinRel out = r;
    for (int i = 0; i < out.n_rows(); ++i) out.rows[i] |= s.rows[i];
    return out;
}

Bits image(const FinRel& r, const Bits& x) {
    Bits y(r.n_cols());
    x.for_each([&](int i) { y |= r.rows[i]; });
    return y;
}

Bits down(const FinRel& r, const Bits& y) {
    Bits x(r.n_rows());
    for (int i = 0; i < r.n_rows(); ++i)
        if (r.rows[i].subset_of(y)) x.set(i);
    return x;
}

Bits closure(const FinRel& r, const Bits& x) { return down(r, image(r, x)); }

Bits interior(const FinRel& r, const Bits& y) { return image(r, down(r, y)); }

// union closure of a set of generators plus the empty set
static std::vector<Bits> union_closure(int width, const std::vector<Bits>& gens) {
    std::set<Bits> seen;
    seen.insert(Bits(width));
    std::vector<Bits> work(seen.begin(), seen.end());
    for (const Bits& g : gens)
        if (seen.insert(g).second) work.push_back(g);
    for (size_t i = 0; i < work.size(); ++i) {
        // union with every generator suffices: every member is a union of generators
        for (const Bits& g : gens) {
            Bits u = work[i] | g;
            if (seen.insert(u).second) work.push_back(u);
        }
    }
    std::vector<Bits> out(seen.begin(), seen.end());
    return out;
}

std::vector<Bits> open_sets(const FinRel& r) {
    return union_closure(r.n_cols(), r.rows);
}

std::vector<Bits> closed_sets(const FinRel& r) {
    std::set<Bits> seen;
    for (const Bits& o : open_sets(r)) seen.insert(down(r, o));
    return std::vector<Bits>(seen.begin(), seen.end());
}

std::pair<FinRel, FinRel> components(const FinRel& rel, const FinRel& dom, const FinRel& cod) {
    // R-(g_s,h_s) iff H[h_s] subseteq R[g_s];  R+(h_t,g_t) iff G-col(g_t) subseteq R-col(h_t)
    FinRel lower(dom.src, cod.src);
    for (int i = 0; i < dom.src.size(); ++i)
        for (int h = 0; h < cod.src.size(); ++h)
            if (cod.rows[h].subset_of(rel.rows[i])) lower.set_edge(i, h);
    FinRel upper(cod.dst, dom.dst);
    std::vector<Bits> rel_cols(cod.dst.size()), dom_cols(dom.dst.size());
    for (int j = 0; j < cod.dst.size(); ++j) rel_cols[j] = rel.col(j);
    for (int j = 0; j < dom.dst.size(); ++j) dom_cols[j] = dom.col(j);
    for (int ht = 0; ht < cod.dst.size(); ++ht)
        for (int gt = 0; gt < dom.dst.size(); ++gt)
            if (dom_cols[gt].subset_of(rel_cols[ht])) upper.set_edge(ht, gt);
    return {lower, upper};
}

DepMor mk_dep_mor(const FinRel& rel, const FinRel& dom, const FinRel& cod) {
    if (rel.src.size() != dom.src.size() || rel.dst.size() != cod.dst.size())
        throw std::invalid_argument("mk_dep_mor: rel must relate dom.src to cod.dst");
    auto [lower, upper] = components(rel, dom, cod);
    if (!compose(lower, cod).same_table(rel) || !compose(dom, converse(upper)).same_table(rel))
        throw NotADepMorphism("relation does not factor through domain and codomain");
    return DepMor{rel, dom, cod, lower, upper};
}

DepMor dep_identity(const FinRel& g) { return mk_dep_mor(g, g, g); }

DepMor dep_compose(const DepMor& f, const DepMor& g) {
    if (!f.cod.same_table(g.dom))
        throw std::invalid_argument("dep_compose: f.cod != g.dom");
    FinRel c1 = compose(f.lower, g.lower);
    FinRel c2 = compose(f.lower, g.rel);
    FinRel c3 = compose(compose(f.lower, f.cod), converse(g.upper));
    FinRel c4 = compose(f.rel, converse(g.upper));
    FinRel c5 = compose(compose(f.dom, converse(f.upper)), converse(g.upper));
    if (!(c2.same_table(compose(c1, g.cod)) && c2.same_table(c3) && c2.same_table(c4) &&
          c4.same_table(compose(f.dom, converse(compose(g.upper, f.upper))))))
        throw DefectError("dep_compose: the five composition formulas disagree");
    (void)c5;
    return mk_dep_mor(c2, f.dom, g.cod);
}

DepMor dep_converse(const DepMor& f) {
    return mk_dep_mor(converse(f.rel), converse(f.cod), converse(f.dom));
}

Reduction reduce(const FinRel& g) {
    std::vector<Bits> opens = union_closure(g.n_cols(), g.rows);
    int n = (int)opens.size();
    std::map<Bits, int> idx;
    for (int i = 0; i < n; ++i) idx[opens[i]] = i;

    // join-irreducible opens: x != union of opens strictly below it
    std::vector<int> ji, mi;
    for (int i = 0; i < n; ++i) {
        Bits u(g.n_cols());
        for (int j = 0; j < n; ++j)
            if (j != i && opens[j].subset_of(opens[i])) u |= opens[j];
        if (u != opens[i]) ji.push_back(i);
    }
    // meet-irreducible opens: meet of everything strictly above differs from x.
    // in the open-set lattice the meet is the union of all opens below the intersection
    for (int i = 0; i < n; ++i) {
        Bits inter = Bits::full(g.n_cols());
        bool have_above = false;
        for (int j = 0; j < n; ++j)
            if (j != i && opens[i].subset_of(opens[j])) {
                inter &= opens[j];
                have_above = true;
            }
        if (!have_above) continue;  // the top element, never meet-irreducible
        Bits meet(g.n_cols());
        for (int j = 0; j < n; ++j)
            if (opens[j].subset_of(inter)) meet |= opens[j];
        if (meet != opens[i]) mi.push_back(i);
    }

    FinSet jset, mset;
    for (int i : ji) jset.labels.push_back("j" + opens[i].to_string());
    for (int i : mi) mset.labels.push_back("m" + opens[i].to_string());
    FinRel reduced(jset, mset);
    for (size_t a = 0; a < ji.size(); ++a)
        for (size_t b = 0; b < mi.size(); ++b)
            if (!opens[ji[a]].subset_of(opens[mi[b]])) reduced.set_edge((int)a, (int)b);

    // red_g(g_s, Y) iff G[g_s] not subseteq Y, for meet-irreducible opens Y
    FinRel red(g.src, mset);
    for (int s = 0; s < g.n_rows(); ++s)
        for (size_t b = 0; b < mi.size(); ++b)
            if (!g.rows[s].subset_of(opens[mi[b]])) red.set_edge(s, (int)b);
    return Reduction{reduced, mk_dep_mor(red, g, reduced)};
}

std::vector<Biclique> maximal_bicliques(const FinRel& g, int cap) {
    // every maximal biclique satisfies B = intersection of rows over A and
    // A = { x : B subseteq G[x] }; enumerate B through the intersection
    // closure of the rows, keeping only nonempty B with nonempty A
    std::set<Bits> closure_set;
    std::vector<Bits> work;
    for (const Bits& row : g.rows)
        if (row.any() && closure_set.insert(row).second) work.push_back(row);
    for (size_t i = 0; i < work.size(); ++i)
        for (const Bits& row : g.rows) {
            Bits inter = work[i] & row;
            if (inter.any() && closure_set.insert(inter).second) {
                work.push_back(inter);
                if ((int)closure_set.size() > 4 * cap + 64)
                    throw SearchCapExceeded("maximal_bicliques: intersection closure too large");
            }
        }
    std::set<std::pair<Bits, Bits>> found;
    for (const Bits& b0 : closure_set) {
        Bits a(g.n_rows());
        for (int i = 0; i < g.n_rows(); ++i)
            if (b0.subset_of(g.rows[i])) a.set(i);
        if (a.none()) continue;
        Bits b = Bits::full(g.n_cols());
        a.for_each([&](int i) { b &= g.rows[i]; });
        found.insert({a, b});
    }
    if ((int)found.size() > cap)
        throw SearchCapExceeded("maximal_bicliques: " + std::to_string(found.size()) +
                                " bicliques exceed cap " + std::to_string(cap));
    std::vector<Biclique> out;
    out.reserve(found.size());
    for (auto& [a, b] : found) out.push_back(Biclique{a, b});
    return out;
}

namespace {

struct CoverSearch {
    std::vector<Bits> cliq_edges;  // per biclique, its edge set (flattened)
    Bits all_edges;
    int best = -1;
    std::vector<int> chosen, best_set;

    void dfs(const Bits& covered, int limit) {
        if ((int)chosen.size() >= limit) return;
        if (covered == all_edges) {
            best = (int)chosen.size();
            best_set = chosen;
            return;
        }
        int e = all_edges.andnot(covered).next(0);
        for (int c = 0; c < (int)cliq_edges.size(); ++c) {
            if (!cliq_edges[c].test(e)) continue;
            chosen.push_back(c);
            dfs(covered | cliq_edges[c], best < 0 ? limit : best);
            chosen.pop_back();
            if (best >= 0 && best <= (int)chosen.size() + 1) return;  // cannot improve here
        }
    }
};

}  // namespace

std::vector<int> minimum_biclique_cover(const FinRel& g, int cap) {
    if (g.edge_count() == 0) return {};
    auto cliqs = maximal_bicliques(g, cap);
    CoverSearch cs;
    int ncols = g.n_cols();
    cs.all_edges = Bits(g.n_rows() * ncols);
    for (int i = 0; i < g.n_rows(); ++i)
        g.rows[i].for_each([&](int j) { cs.all_edges.set(i * ncols + j); });
    for (const Biclique& c : cliqs) {
        Bits e(g.n_rows() * ncols);
        c.row_set.for_each([&](int i) { c.col_set.for_each([&](int j) { e.set(i * ncols + j); }); });
        cs.cliq_edges.push_back(e);
    }
    cs.dfs(Bits(g.n_rows() * ncols), (int)cliqs.size() + 1);
    if (cs.best < 0) throw DefectError("minimum_biclique_cover: no cover found");
    std::sort(cs.best_set.begin(), cs.best_set.end());
    return cs.best_set;
}

int bipartite_dimension(const FinRel& g, int cap) {
    if (g.edge_count() == 0) return 0;
    return (int)minimum_biclique_cover(g, cap).size();
}

namespace {

// order-isomorphism search between two union-closed families: a bijection on
// join-irreducibles that extends, via joins, to an order-isomorphism
struct LatticeIso {
    const std::vector<Bits>*fam1, *fam2;
    std::vector<int> ji1, ji2;
    std::vector<int> match;  // ji1 position -> ji2 position

    static std::vector<int> join_irr(const std::vector<Bits>& fam, int width) {
        std::vector<int> ji;
        for (int i = 0; i < (int)fam.size(); ++i) {
            Bits u(width);
            for (int j = 0; j < (int)fam.size(); ++j)
                if (j != i && fam[j].subset_of(fam[i])) u |= fam[j];
            if (u != fam[i]) ji.push_back(i);
        }
        return ji;
    }

    bool consistent(int pos) const {
        // the partial map must preserve and reflect order among matched irreducibles
        for (int p = 0; p < pos; ++p) {
            const Bits &a1 = (*fam1)[ji1[p]], &b1 = (*fam1)[ji1[pos]];
            const Bits &a2 = (*fam2)[ji2[match[p]]], &b2 = (*fam2)[ji2[match[pos]]];
            if (a1.subset_of(b1) != a2.subset_of(b2)) return false;
            if (b1.subset_of(a1) != b2.subset_of(a2)) return false;
        }
        return true;
    }

    bool extends() const {
        // F(x) := join of images of irreducibles below x must be a bijection
        // preserving order in both directions
        std::set<Bits> image;
        int w2 = fam2->empty() ? 0 : (*fam2)[0].size();
        std::vector<Bits> fx(fam1->size(), Bits(w2));
        std::set<Bits> fam2_set((*fam2).begin(), (*fam2).end());
        for (size_t x = 0; x < fam1->size(); ++x) {
            Bits y(w2);
            for (size_t p = 0; p < ji1.size(); ++p)
                if ((*fam1)[ji1[p]].subset_of((*fam1)[x])) y |= (*fam2)[ji2[match[p]]];
            if (!fam2_set.count(y)) return false;
            fx[x] = y;
            image.insert(y);
        }
        if (image.size() != fam2->size()) return false;
        for (size_t x = 0; x < fam1->size(); ++x)
            for (size_t y = 0; y < fam1->size(); ++y)
                if ((*fam1)[x].subset_of((*fam1)[y]) != fx[x].subset_of(fx[y])) return false;
        return true;
    }

    bool search(int pos, std::vector<bool>& used) {
        if (pos == (int)ji1.size()) return extends();
        for (int q = 0; q < (int)ji2.size(); ++q) {
            if (used[q]) continue;
            if ((*fam1)[ji1[pos]].count() >= 0) {  // no cheap invariant on subsets themselves
                match[pos] = q;
                if (consistent(pos)) {
                    used[q] = true;
                    if (search(pos + 1, used)) return true;
                    used[q] = false;
                }
            }
        }
        return false;
    }
};

}  // namespace

bool lattice_order_isomorphic(const std::vector<Bits>& fam1, const std::vector<Bits>& fam2) {
    if (fam1.size() != fam2.size()) return false;
    if (fam1.empty()) return true;
    LatticeIso li;
    li.fam1 = &fam1;
    li.fam2 = &fam2;
    li.ji1 = LatticeIso::join_irr(fam1, fam1[0].size());
    li.ji2 = LatticeIso::join_irr(fam2, fam2[0].size());
    if (li.ji1.size() != li.ji2.size()) return false;
    li.match.assign(li.ji1.size(), -1);
    std::vector<bool> used(li.ji2.size(), false);
    return li.search(0, used);
}

bool dep_isomorphic(const FinRel& g, const FinRel& h) {
    return lattice_order_isomorphic(open_sets(g), open_sets(h));
}

std::string finrel_to_text(const FinRel& r) {
    std::ostringstream os;
    os << r.n_rows() << " " << r.n_cols() << "\n";
    for (int i = 0; i < r.n_rows(); ++i) {
        for (int j = 0; j < r.n_cols(); ++j) os << (r.edge(i, j) ? '1' : '0');
        os << "\n";
    }
    return os.str();
}

FinRel finrel_from_text(const std::string& text) {
    std::istringstream is(text);
    int nr, nc;
    if (!(is >> nr >> nc) || nr < 0 || nc < 0)
        throw ParseError("relation text: expected 'rows cols' header");
    FinRel r(FinSet::numbered(nr, "r"), FinSet::numbered(nc, "c"));
    for (int i = 0; i < nr; ++i) {
        std::string row;
        if (!(is >> row) || (int)row.size() != nc)
            throw ParseError("relation text: bad matrix row " + std::to_string(i));
        for (int j = 0; j < nc; ++j) {
            if (row[j] == '1')
                r.set_edge(i, j);
            else if (row[j] != '0')
                throw ParseError("relation text: matrix entries must be 0/1");
        }
    }
    return r;
}

std::string finrel_to_dot(const FinRel& r) {
    std::ostringstream os;
    os << "graph finrel {\n  rankdir=BT;\n";
    for (int i = 0; i < r.n_rows(); ++i)
        os << "  s" << i << " [label=\"" << r.src.labels[i] << "\", shape=box];\n";
    for (int j = 0; j < r.n_cols(); ++j)
        os << "  t" << j << " [label=\"" << r.dst.labels[j] << "\"];\n";
    for (int i = 0; i < r.n_rows(); ++i)
        r.rows[i].for_each([&](int j) { os << "  s" << i << " -- t" << j << ";\n"; });
    os << "}\n";
    return os.str();
}

}  // namespace depaut
