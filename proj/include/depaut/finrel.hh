// finrel.hh -- finite binary relations as objects and morphisms of Dep:
// relational algebra, up/down adjunction, open sets, maximum witnesses,
// reduction, maximal bicliques and exact bipartite dimension.

#ifndef DEPAUT_FINREL_HH_
#define DEPAUT_FINREL_HH_

#include <optional>
#include <string>
#include <vector>

#include "depaut/bits.hh"
#include "depaut/errors.hh"

namespace depaut {

struct FinSet {
    std::vector<std::string> labels;

    FinSet() = default;
    explicit FinSet(std::vector<std::string> ls) : labels(std::move(ls)) {}
    static FinSet numbered(int n, const std::string& prefix = "x");

    int size() const { return (int)labels.size(); }
    bool operator==(const FinSet& o) const { return labels == o.labels; }
};

struct FinRel {
    FinSet src, dst;
    std::vector<Bits> rows;  // rows[i] = successors of src element i

    FinRel() = default;
    FinRel(FinSet s, FinSet t)
        : src(std::move(s)), dst(std::move(t)), rows(src.size(), Bits(dst.size())) {}

    static FinRel identity(const FinSet& x);
    static FinRel full(const FinSet& s, const FinSet& t);

    int n_rows() const { return (int)rows.size(); }
    int n_cols() const { return rows.empty() ? dst.size() : rows[0].size(); }
    bool edge(int i, int j) const { return rows[i].test(j); }
    void set_edge(int i, int j) { rows[i].set(j); }
    int edge_count() const;
    Bits col(int j) const;

    bool same_table(const FinRel& o) const { return rows == o.rows; }
    bool operator==(const FinRel& o) const {
        return src == o.src && dst == o.dst && rows == o.rows;
    }
};

FinRel compose(const FinRel& r, const FinRel& s);
FinRel converse(const FinRel& r);
FinRel rel_union(const FinRel& r, const FinRel& s);

// image R[X], a.k.a. R^up
Bits image(const FinRel& r, const Bits& x);
inline Bits up(const FinRel& r, const Bits& x) { return image(r, x); }
// R^down(Y) = { x : R[x] subseteq Y }
Bits down(const FinRel& r, const Bits& y);
Bits closure(const FinRel& r, const Bits& x);    // down . up
Bits interior(const FinRel& r, const Bits& y);   // up . down

// all R-open sets {R[X] : X subseteq src}, i.e. the union closure of the
// rows plus the empty set; sorted canonically
std::vector<Bits> open_sets(const FinRel& r);
// fixpoints of the closure operator, {R^down(Y) : Y subseteq dst}
std::vector<Bits> closed_sets(const FinRel& r);

// Dep-morphism rel : dom -> cod carrying its maximum witnesses
struct DepMor {
    FinRel rel;    // subseteq dom.src x cod.dst
    FinRel dom;    // G
    FinRel cod;    // H
    FinRel lower;  // R- subseteq G_s x H_s
    FinRel upper;  // R+ subseteq H_t x G_t
};

// maximum witness pair (R-, R+) of a candidate relation
std::pair<FinRel, FinRel> components(const FinRel& rel, const FinRel& dom, const FinRel& cod);
// validates lower;cod = rel = dom;converse(upper); throws NotADepMorphism
DepMor mk_dep_mor(const FinRel& rel, const FinRel& dom, const FinRel& cod);
DepMor dep_identity(const FinRel& g);
// composition; asserts all five equivalent relational composites agree
DepMor dep_compose(const DepMor& f, const DepMor& g);
// self-duality: converse on objects and morphisms, witnesses swapped
DepMor dep_converse(const DepMor& f);

// Pirr(Open g) together with the witnessing natural isomorphism red_g
struct Reduction {
    FinRel reduced;
    DepMor iso;  // red_g : g -> reduced
};
Reduction reduce(const FinRel& g);

struct Biclique {
    Bits row_set, col_set;
    bool operator==(const Biclique& o) const {
        return row_set == o.row_set && col_set == o.col_set;
    }
};

// all inclusion-maximal bicliques A x B subseteq g with A, B nonempty;
// throws SearchCapExceeded if more than `cap` are found
std::vector<Biclique> maximal_bicliques(const FinRel& g, int cap = 1 << 16);

inline constexpr int kDefaultBicliqueCap = 22;

// exact minimum number of maximal bicliques covering all edges (0 if edgeless)
int bipartite_dimension(const FinRel& g, int cap = kDefaultBicliqueCap);
// the cover itself, as indices into maximal_bicliques(g)
std::vector<int> minimum_biclique_cover(const FinRel& g, int cap = kDefaultBicliqueCap);

// Dep-isomorphism test: the open-set lattices are order-isomorphic
bool dep_isomorphic(const FinRel& g, const FinRel& h);
// order-isomorphism of two union-closed families (inclusion order)
bool lattice_order_isomorphic(const std::vector<Bits>& fam1, const std::vector<Bits>& fam2);

std::string finrel_to_text(const FinRel& r);
FinRel finrel_from_text(const std::string& text);
std::string finrel_to_dot(const FinRel& r);

}  // namespace depaut

#endif
