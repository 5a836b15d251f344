#include "depaut/kw.hh"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace depaut {

std::vector<Grid> grids(const Language& l, int cap) {
    FinRel dr = dependency_relation(l);
    std::vector<Biclique> bc = maximal_bicliques(dr, cap);
    std::vector<Grid> out;
    out.reserve(bc.size());
    for (const Biclique& b : bc) out.push_back(Grid{b.row_set, b.col_set});
    return out;
}

LCovering mk_covering(const Language& l, const FinRel& rel) {
    FinRel dr = dependency_relation(l);
    if (rel.n_cols() != dr.n_cols())
        throw std::invalid_argument("mk_covering: codomain must be LW(L^r)");
    // lower(u, h) iff rel[h] subseteq DR[u]
    FinRel lower(dr.src, rel.src);
    for (int u = 0; u < dr.n_rows(); ++u)
        for (int h = 0; h < rel.n_rows(); ++h)
            if (rel.rows[h].subset_of(dr.rows[u])) lower.set_edge(u, h);
    if (!compose(lower, rel).same_table(dr))
        throw NotACovering("relation does not factor the dependency relation");
    return LCovering{l, rel, lower};
}

LCovering biclique_form(const LCovering& c) {
    // rows become the bicliques lower~[h] x rel[h], deduplicated
    std::set<std::pair<Bits, Bits>> seen;
    std::vector<std::pair<Bits, Bits>> bicliques;
    for (int h = 0; h < c.rel.n_rows(); ++h) {
        std::pair<Bits, Bits> b{c.lower.col(h), c.rel.rows[h]};
        if (seen.insert(b).second) bicliques.push_back(b);
    }
    FinSet src;
    for (auto& [a, b] : bicliques) src.labels.push_back(a.to_string() + "x" + b.to_string());
    FinRel rel(src, c.rel.dst);
    for (size_t i = 0; i < bicliques.size(); ++i) rel.rows[i] = bicliques[i].second;
    LCovering out = mk_covering(c.language, rel);
    // the lower component must become membership in the row set
    for (int u = 0; u < out.lower.n_rows(); ++u)
        for (size_t i = 0; i < bicliques.size(); ++i)
            if (out.lower.edge(u, (int)i) != bicliques[i].first.test(u))
                throw DefectError("biclique_form: lower component is not membership");
    return out;
}

LCovering dual_covering(const LCovering& c) {
    return mk_covering(reverse(c.language), converse(c.lower));
}

bool is_maximal(const LCovering& c) {
    LCovering dd = dual_covering(dual_covering(c));
    return dd.rel.same_table(c.rel);
}

Nfa induced_nfa(const LCovering& c) {
    const Language& l = c.language;
    Dfa dl = canonical_dfa(l);
    int nh = c.rel.n_rows();
    FinSet st = c.rel.src;
    Bits init(nh), fin(nh);
    for (int h = 0; h < nh; ++h) {
        if (c.lower.edge(0, h)) init.set(h);  // state 0 realizes L itself
        bool all_final = true;
        for (int u = 0; u < dl.size(); ++u)
            if (c.lower.edge(u, h) && !dl.final.test(u)) all_final = false;
        if (all_final) fin.set(h);
    }
    std::vector<FinRel> tr;
    for (int a = 0; a < l.alphabet.size(); ++a) {
        FinRel t(st, st);
        for (int h1 = 0; h1 < nh; ++h1)
            for (int h2 = 0; h2 < nh; ++h2) {
                bool ok = true;
                for (int u = 0; u < dl.size() && ok; ++u)
                    if (c.lower.edge(u, h1) && !c.lower.edge(dl.next[a][u], h2)) ok = false;
                if (ok) t.set_edge(h1, h2);
            }
        tr.push_back(std::move(t));
    }
    return mk_nfa(l.alphabet, st, init, fin, std::move(tr));
}

bool is_legitimate(const LCovering& c) { return from_nfa(induced_nfa(c)) == c.language; }

LCovering covering_of_grids(const Language& l, const std::vector<Grid>& gs,
                            const std::vector<int>& chosen) {
    FinRel dr = dependency_relation(l);
    FinSet src;
    for (int gi : chosen) src.labels.push_back("g" + std::to_string(gi));
    FinRel rel(src, dr.dst);
    for (size_t i = 0; i < chosen.size(); ++i) rel.rows[i] = gs[chosen[i]].cols;
    return mk_covering(l, rel);
}

namespace {

// subsets of grids of size k covering all DR edges, lexicographically
struct CoverEnum {
    const std::vector<Grid>* gs;
    Bits all_edges;
    std::vector<Bits> grid_edges;
    int ncols = 0;

    void init(const FinRel& dr, const std::vector<Grid>& grids_in) {
        gs = &grids_in;
        ncols = dr.n_cols();
        all_edges = Bits(dr.n_rows() * ncols);
        for (int i = 0; i < dr.n_rows(); ++i)
            dr.rows[i].for_each([&](int j) { all_edges.set(i * ncols + j); });
        for (const Grid& g : grids_in) {
            Bits e(dr.n_rows() * ncols);
            g.rows.for_each([&](int i) { g.cols.for_each([&](int j) { e.set(i * ncols + j); }); });
            grid_edges.push_back(e);
        }
    }

    // enumerate k-subsets in lexicographic order; f returns true to stop
    template <class F>
    bool enumerate(int k, F f) {
        std::vector<int> pick;
        return rec(0, k, Bits(all_edges.size()), pick, f);
    }

    template <class F>
    bool rec(int from, int k, const Bits& covered, std::vector<int>& pick, F f) {
        if ((int)pick.size() == k)
            return covered == all_edges ? f(pick) : false;
        int remaining = k - (int)pick.size();
        for (int g = from; g + remaining <= (int)grid_edges.size(); ++g) {
            pick.push_back(g);
            if (rec(g + 1, k, covered | grid_edges[g], pick, f)) return true;
            pick.pop_back();
        }
        return false;
    }
};

}  // namespace

bool no_smaller_nfa_exists(const Language& l, int states) {
    // exhaustive enumeration of all nfas with fewer states
    int k = l.alphabet.size();
    for (int n = 1; n < states; ++n) {
        if (n > 2 || k > 2)
            throw CapExceeded("no_smaller_nfa_exists: enumeration infeasible");
        FinSet st = FinSet::numbered(n, "z");
        long long tmax = 1LL << (n * n);
        for (unsigned im = 1; im < (1u << n); ++im)
            for (unsigned fm = 0; fm < (1u << n); ++fm) {
                Bits init(n), fin(n);
                for (int i = 0; i < n; ++i) {
                    if (im & (1u << i)) init.set(i);
                    if (fm & (1u << i)) fin.set(i);
                }
                std::vector<long long> tms(k, 0);
                for (;;) {
                    std::vector<FinRel> tr;
                    for (int a = 0; a < k; ++a) {
                        FinRel t(st, st);
                        for (int i = 0; i < n; ++i)
                            for (int j = 0; j < n; ++j)
                                if (tms[a] & (1LL << (i * n + j))) t.set_edge(i, j);
                        tr.push_back(std::move(t));
                    }
                    if (from_nfa(mk_nfa(l.alphabet, st, init, fin, tr)) == l) return false;
                    int c = 0;
                    while (c < k && ++tms[c] == tmax) tms[c++] = 0;
                    if (c == k) break;
                }
            }
    }
    return true;
}

std::vector<MinimalNfaResult> enumerate_minimal_covers(const Language& l, int grid_cap) {
    std::vector<Grid> gs = grids(l, grid_cap);
    FinRel dr = dependency_relation(l);
    std::vector<MinimalNfaResult> out;
    if (dr.edge_count() == 0) {
        // the empty cover induces the empty nfa; L must be the empty or the
        // all-sink language derivable from no grid rows: handle via the
        // identity covering instead
        LCovering c = mk_covering(l, dr);
        MinimalNfaResult r{induced_nfa(c), c, {}};
        if (is_legitimate(c)) {
            out.push_back(std::move(r));
            return out;
        }
        throw DefectError("enumerate_minimal_covers: edgeless relation with no covering");
    }
    CoverEnum ce;
    ce.init(dr, gs);
    int lb = bipartite_dimension(dr, grid_cap);
    std::map<Bits, Language> legit_cache;  // cover fingerprint -> induced language
    for (int k = lb; k <= (int)gs.size(); ++k) {
        std::vector<std::vector<int>> found;
        ce.enumerate(k, [&](const std::vector<int>& pick) {
            Bits fp((int)gs.size());
            for (int g : pick) fp.set(g);
            LCovering c = covering_of_grids(l, gs, pick);
            auto it = legit_cache.find(fp);
            Language induced =
                it != legit_cache.end() ? it->second : from_nfa(induced_nfa(c));
            legit_cache.emplace(fp, induced);
            if (induced == l) found.push_back(pick);
            return false;  // keep enumerating this level
        });
        if (!found.empty()) {
            for (const std::vector<int>& pick : found) {
                LCovering c = covering_of_grids(l, gs, pick);
                Nfa n = induced_nfa(c);
                bool dup = false;
                for (const MinimalNfaResult& r : out) dup |= iso_nfa(r.nfa, n);
                if (!dup) out.push_back(MinimalNfaResult{std::move(n), std::move(c), pick});
            }
            return out;
        }
    }
    throw DefectError("enumerate_minimal_covers: no legitimate cover found");
}

MinimalNfaResult minimal_nfa(const Language& l, int grid_cap) {
    std::vector<Grid> gs = grids(l, grid_cap);
    FinRel dr = dependency_relation(l);
    if (dr.edge_count() == 0) {
        LCovering c = mk_covering(l, dr);
        if (!is_legitimate(c))
            throw DefectError("minimal_nfa: identity covering of an edgeless relation fails");
        return MinimalNfaResult{induced_nfa(c), c, {}};
    }
    CoverEnum ce;
    ce.init(dr, gs);
    int lb = bipartite_dimension(dr, grid_cap);
    for (int k = lb; k <= (int)gs.size(); ++k) {
        MinimalNfaResult result;
        bool ok = ce.enumerate(k, [&](const std::vector<int>& pick) {
            LCovering c = covering_of_grids(l, gs, pick);
            if (!is_legitimate(c)) return false;
            result = MinimalNfaResult{induced_nfa(c), c, pick};
            return true;  // first at this level wins (lexicographic)
        });
        if (ok) {
            // the KW guarantee: no smaller nfa at all; cross-checked
            // exhaustively when feasible
            if (k <= 3 && l.alphabet.size() <= 2 && !no_smaller_nfa_exists(l, k))
                throw DefectError("minimal_nfa: a smaller nfa exists");
            return result;
        }
    }
    throw DefectError("minimal_nfa: no legitimate cover found");
}

bool exists_legitimate_cover(const Language& l, int k, int grid_cap) {
    std::vector<Grid> gs = grids(l, grid_cap);
    FinRel dr = dependency_relation(l);
    if (dr.edge_count() == 0) return k >= 0;
    if (k <= 0) return false;
    CoverEnum ce;
    ce.init(dr, gs);
    return ce.enumerate(k, [&](const std::vector<int>& pick) {
        return is_legitimate(covering_of_grids(l, gs, pick));
    });
}

LCovering covering_of_extension(const JslDfa& j) {
    Language l = lang_of(j);
    SimpleJslDfa s = jsl_simple(j);
    std::vector<int> ji = s.machine.carrier.join_irreducibles();
    QuotientIndex qir = left_quotients(reverse(l));
    FinSet src;
    for (size_t p = 0; p < ji.size(); ++p) src.labels.push_back("j" + std::to_string(p));
    FinRel rel(src, dependency_relation(l).dst);
    for (size_t p = 0; p < ji.size(); ++p) {
        Language closed = cl_l(l, s.elem_langs[ji[p]]);
        for (int v = 0; v < qir.size(); ++v) {
            Word vr(qir.reps[v].rbegin(), qir.reps[v].rend());
            if (member(closed, vr)) rel.set_edge((int)p, v);
        }
    }
    LCovering c = mk_covering(l, rel);
    if (!is_legitimate(c))
        throw DefectError("covering_of_extension: atomizer covering is not legitimate");
    return c;
}

std::string covering_to_text(const LCovering& c) {
    std::ostringstream os;
    const FinRel& dr_src_names = c.lower;
    for (int h = 0; h < c.rel.n_rows(); ++h) {
        os << "A={";
        bool first = true;
        dr_src_names.col(h).for_each([&](int u) {
            if (!first) os << ",";
            os << c.lower.src.labels[u];
            first = false;
        });
        os << "} x B={";
        first = true;
        c.rel.rows[h].for_each([&](int v) {
            if (!first) os << ",";
            os << c.rel.dst.labels[v];
            first = false;
        });
        os << "}\n";
    }
    return os.str();
}

}  // namespace depaut
