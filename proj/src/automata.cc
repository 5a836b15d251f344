#include "depaut/automata.hh"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace depaut {

Alphabet::Alphabet(std::string s) : symbols(std::move(s)) {
    if (symbols.empty() || symbols.size() > 26)
        throw std::invalid_argument("alphabet must have 1..26 symbols");
    for (size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] < 'a' || symbols[i] > 'z')
            throw std::invalid_argument("alphabet symbols must be lowercase letters");
        if (i && symbols[i] <= symbols[i - 1])
            throw std::invalid_argument("alphabet symbols must be strictly increasing");
    }
}

int Alphabet::index(char c) const {
    auto p = symbols.find(c);
    return p == std::string::npos ? -1 : (int)p;
}

Nfa mk_nfa(Alphabet a, FinSet states, Bits initial, Bits final, std::vector<FinRel> trans) {
    int n = states.size();
    if (initial.size() != n || final.size() != n)
        throw std::invalid_argument("mk_nfa: initial/final dimension mismatch");
    if ((int)trans.size() != a.size())
        throw std::invalid_argument("mk_nfa: one transition relation per letter required");
    for (const FinRel& t : trans)
        if (t.n_rows() != n || t.n_cols() != n)
            throw std::invalid_argument("mk_nfa: transition dimension mismatch");
    Nfa m;
    m.alphabet = std::move(a);
    m.states = std::move(states);
    m.initial = std::move(initial);
    m.final = std::move(final);
    m.trans = std::move(trans);
    return m;
}

Nfa empty_nfa(const Alphabet& a) {
    FinSet st(std::vector<std::string>{"q0"});
    std::vector<FinRel> tr(a.size(), FinRel(st, st));
    return mk_nfa(a, st, Bits(1), Bits(1), std::move(tr));
}

Bits run(const Nfa& n, const Bits& from, const Word& w) {
    Bits cur = from;
    for (char c : w) {
        int a = n.alphabet.index(c);
        if (a < 0) throw std::invalid_argument("run: letter not in alphabet");
        cur = image(n.trans[a], cur);
    }
    return cur;
}

bool accepts(const Nfa& n, const Word& w) { return run(n, n.initial, w).intersects(n.final); }

Nfa at_states(const Nfa& n, const Bits& s) {
    Nfa m = n;
    m.initial = s;
    return m;
}

Nfa reverse(const Nfa& n) {
    Nfa m = n;
    std::swap(m.initial, m.final);
    for (FinRel& t : m.trans) t = converse(t);
    return m;
}

int Dfa::step(int q, const Word& w) const {
    for (char c : w) {
        int a = alphabet.index(c);
        if (a < 0) throw std::invalid_argument("step: letter not in alphabet");
        q = next[a][q];
    }
    return q;
}

Nfa to_nfa(const Dfa& d) {
    int n = d.size();
    std::vector<FinRel> tr;
    for (int a = 0; a < d.alphabet.size(); ++a) {
        FinRel t(d.states, d.states);
        for (int q = 0; q < n; ++q) t.set_edge(q, d.next[a][q]);
        tr.push_back(std::move(t));
    }
    Bits init(n);
    init.set(d.initial);
    return mk_nfa(d.alphabet, d.states, init, d.final, std::move(tr));
}

Dfa mk_dfa(const Nfa& n) {
    if (n.initial.count() != 1)
        throw std::invalid_argument("mk_dfa: exactly one initial state required");
    Dfa d;
    d.alphabet = n.alphabet;
    d.states = n.states;
    d.initial = n.initial.next(0);
    d.final = n.final;
    d.next.assign(n.alphabet.size(), std::vector<int>(n.size(), -1));
    for (int a = 0; a < n.alphabet.size(); ++a)
        for (int q = 0; q < n.size(); ++q) {
            if (n.trans[a].rows[q].count() != 1)
                throw std::invalid_argument("mk_dfa: transitions must be total functions");
            d.next[a][q] = n.trans[a].rows[q].next(0);
        }
    return d;
}

static std::string subset_name(const Bits& s, const FinSet& states) {
    std::string name = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) name += ",";
        name += states.labels[i];
        first = false;
    });
    return name + "}";
}

Dfa rsc(const Nfa& n, std::vector<Bits>* subsets_out) {
    std::map<Bits, int> idx;
    std::vector<Bits> subsets;
    std::queue<int> bfs;
    idx[n.initial] = 0;
    subsets.push_back(n.initial);
    bfs.push(0);
    std::vector<std::vector<int>> nexts(n.alphabet.size());
    while (!bfs.empty()) {
        int cur = bfs.front();
        bfs.pop();
        for (int a = 0; a < n.alphabet.size(); ++a) {
            Bits succ = image(n.trans[a], subsets[cur]);
            auto [it, fresh] = idx.try_emplace(succ, (int)subsets.size());
            if (fresh) {
                subsets.push_back(succ);
                bfs.push(it->second);
            }
            if ((int)nexts[a].size() <= cur) nexts[a].resize(cur + 1, -1);
            nexts[a][cur] = it->second;
        }
    }
    Dfa d;
    d.alphabet = n.alphabet;
    for (const Bits& s : subsets) d.states.labels.push_back(subset_name(s, n.states));
    d.initial = 0;
    d.final = Bits((int)subsets.size());
    for (size_t i = 0; i < subsets.size(); ++i)
        if (subsets[i].intersects(n.final)) d.final.set((int)i);
    d.next.assign(n.alphabet.size(), std::vector<int>(subsets.size(), -1));
    for (int a = 0; a < n.alphabet.size(); ++a)
        for (size_t i = 0; i < subsets.size(); ++i) d.next[a][i] = nexts[a][i];
    if (subsets_out) *subsets_out = subsets;
    return d;
}

static Bits reachable_states(const Nfa& n) {
    Bits seen = n.initial;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const FinRel& t : n.trans) {
            Bits next = seen | image(t, seen);
            if (next != seen) {
                seen = next;
                grew = true;
            }
        }
    }
    return seen;
}

static Nfa restrict_states(const Nfa& n, const Bits& keep) {
    std::vector<int> re(n.size(), -1);
    FinSet st;
    keep.for_each([&](int i) {
        re[i] = st.size();
        st.labels.push_back(n.states.labels[i]);
    });
    int m = st.size();
    Bits init(m), fin(m);
    n.initial.for_each([&](int i) {
        if (re[i] >= 0) init.set(re[i]);
    });
    n.final.for_each([&](int i) {
        if (re[i] >= 0) fin.set(re[i]);
    });
    std::vector<FinRel> tr;
    for (const FinRel& t : n.trans) {
        FinRel r(st, st);
        for (int i = 0; i < n.size(); ++i) {
            if (re[i] < 0) continue;
            t.rows[i].for_each([&](int j) {
                if (re[j] >= 0) r.set_edge(re[i], re[j]);
            });
        }
        tr.push_back(std::move(r));
    }
    return mk_nfa(n.alphabet, std::move(st), std::move(init), std::move(fin), std::move(tr));
}

Nfa reach_part(const Nfa& n) { return restrict_states(n, reachable_states(n)); }

Nfa coreach_part(const Nfa& n) { return reverse(reach_part(reverse(n))); }

namespace {

struct NfaIso {
    const Nfa *a, *b;
    std::vector<int> map;  // a-state -> b-state or -1
    std::vector<bool> used;

    std::vector<uint64_t> signature(const Nfa& n) const {
        std::vector<uint64_t> sig(n.size(), 0);
        for (int q = 0; q < n.size(); ++q) {
            uint64_t s = (n.initial.test(q) ? 1 : 0) | (n.final.test(q) ? 2 : 0);
            for (int l = 0; l < n.alphabet.size(); ++l) {
                s = s * 131 + n.trans[l].rows[q].count();
                s = s * 131 + converse(n.trans[l]).rows[q].count();
            }
            sig[q] = s;
        }
        return sig;
    }

    bool compatible(int qa, int qb) const {
        if (a->initial.test(qa) != b->initial.test(qb)) return false;
        if (a->final.test(qa) != b->final.test(qb)) return false;
        for (int l = 0; l < a->alphabet.size(); ++l) {
            for (int ra = 0; ra < a->size(); ++ra) {
                int rb = (ra == qa) ? qb : map[ra];
                if (rb < 0) continue;
                if (a->trans[l].edge(qa, ra) != b->trans[l].edge(qb, rb)) return false;
                if (a->trans[l].edge(ra, qa) != b->trans[l].edge(rb, qb)) return false;
            }
        }
        return true;
    }

    bool search(int qa, const std::vector<uint64_t>& siga, const std::vector<uint64_t>& sigb) {
        if (qa == a->size()) return true;
        for (int qb = 0; qb < b->size(); ++qb) {
            if (used[qb] || siga[qa] != sigb[qb]) continue;
            map[qa] = qb;
            if (compatible(qa, qb)) {
                used[qb] = true;
                if (search(qa + 1, siga, sigb)) return true;
                used[qb] = false;
            }
            map[qa] = -1;
        }
        return false;
    }
};

}  // namespace

bool iso_nfa(const Nfa& a, const Nfa& b) {
    if (!(a.alphabet == b.alphabet) || a.size() != b.size()) return false;
    if (a.initial.count() != b.initial.count() || a.final.count() != b.final.count()) return false;
    for (int l = 0; l < a.alphabet.size(); ++l)
        if (a.trans[l].edge_count() != b.trans[l].edge_count()) return false;
    NfaIso iso;
    iso.a = &a;
    iso.b = &b;
    iso.map.assign(a.size(), -1);
    iso.used.assign(b.size(), false);
    auto siga = iso.signature(a), sigb = iso.signature(b);
    {
        auto sa = siga, sb = sigb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    return iso.search(0, siga, sigb);
}

// canonical BFS renumbering; empty when some state is unreachable
static std::vector<int> bfs_order(const Dfa& d) {
    std::vector<int> order(d.size(), -1);
    int seen = 0;
    std::queue<int> q;
    order[d.initial] = seen++;
    q.push(d.initial);
    while (!q.empty()) {
        int cur = q.front();
        q.pop();
        for (int a = 0; a < d.alphabet.size(); ++a) {
            int nx = d.next[a][cur];
            if (order[nx] < 0) {
                order[nx] = seen++;
                q.push(nx);
            }
        }
    }
    if (seen != d.size()) return {};
    return order;
}

// renumbered transition/final tables; canonical for reachable dfas
static std::pair<std::vector<std::vector<int>>, std::vector<bool>> bfs_tables(
    const Dfa& d, const std::vector<int>& order) {
    std::vector<int> inv(d.size());
    for (int q = 0; q < d.size(); ++q) inv[order[q]] = q;
    std::vector<std::vector<int>> next(d.alphabet.size(), std::vector<int>(d.size()));
    std::vector<bool> fin(d.size());
    for (int i = 0; i < d.size(); ++i) {
        fin[i] = d.final.test(inv[i]);
        for (int a = 0; a < d.alphabet.size(); ++a) next[a][i] = order[d.next[a][inv[i]]];
    }
    return {next, fin};
}

bool iso_dfa(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet == b.alphabet) || a.size() != b.size()) return false;
    std::vector<int> oa = bfs_order(a), ob = bfs_order(b);
    if (oa.empty() || ob.empty()) return iso_nfa(to_nfa(a), to_nfa(b));
    return bfs_tables(a, oa) == bfs_tables(b, ob);
}

std::string nfa_to_json(const Nfa& n) {
    nlohmann::json j;
    j["alphabet"] = n.alphabet.symbols;
    j["states"] = n.states.labels;
    std::vector<std::string> init, fin;
    n.initial.for_each([&](int i) { init.push_back(n.states.labels[i]); });
    n.final.for_each([&](int i) { fin.push_back(n.states.labels[i]); });
    j["initial"] = init;
    j["final"] = fin;
    auto& tr = j["trans"] = nlohmann::json::array();
    for (int a = 0; a < n.alphabet.size(); ++a)
        for (int q = 0; q < n.size(); ++q)
            n.trans[a].rows[q].for_each([&](int r) {
                tr.push_back({n.states.labels[q], std::string(1, n.alphabet.letter(a)),
                              n.states.labels[r]});
            });
    return j.dump(2);
}

Nfa nfa_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("nfa json: ") + e.what());
    }
    try {
        Alphabet a(j.at("alphabet").get<std::string>());
        FinSet st(j.at("states").get<std::vector<std::string>>());
        std::map<std::string, int> byname;
        for (int i = 0; i < st.size(); ++i) {
            if (byname.count(st.labels[i])) throw ParseError("nfa json: duplicate state name");
            byname[st.labels[i]] = i;
        }
        auto lookup = [&](const std::string& s) {
            auto it = byname.find(s);
            if (it == byname.end()) throw ParseError("nfa json: unknown state " + s);
            return it->second;
        };
        Bits init(st.size()), fin(st.size());
        for (const auto& s : j.at("initial").get<std::vector<std::string>>()) init.set(lookup(s));
        for (const auto& s : j.at("final").get<std::vector<std::string>>()) fin.set(lookup(s));
        std::vector<FinRel> tr(a.size(), FinRel(st, st));
        for (const auto& t : j.at("trans")) {
            if (!t.is_array() || t.size() != 3)
                throw ParseError("nfa json: transitions are [src, letter, dst] triples");
            std::string letter = t[1].get<std::string>();
            if (letter.size() != 1 || a.index(letter[0]) < 0)
                throw ParseError("nfa json: bad transition letter " + letter);
            tr[a.index(letter[0])].set_edge(lookup(t[0].get<std::string>()),
                                            lookup(t[2].get<std::string>()));
        }
        return mk_nfa(a, st, init, fin, std::move(tr));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("nfa json: ") + e.what());
    }
}

std::string nfa_to_dot(const Nfa& n) {
    std::ostringstream os;
    os << "digraph nfa {\n  rankdir=LR;\n";
    for (int q = 0; q < n.size(); ++q) {
        std::string deco;
        if (n.initial.test(q)) deco += "i";
        if (n.final.test(q)) deco += "o";
        os << "  q" << q << " [label=\"" << n.states.labels[q]
           << (deco.empty() ? "" : " [" + deco + "]") << "\""
           << (n.final.test(q) ? ", shape=doublecircle" : ", shape=circle") << "];\n";
        if (n.initial.test(q)) {
            os << "  start" << q << " [shape=none, label=\"\"];\n";
            os << "  start" << q << " -> q" << q << ";\n";
        }
    }
    for (int a = 0; a < n.alphabet.size(); ++a)
        for (int q = 0; q < n.size(); ++q)
            n.trans[a].rows[q].for_each([&](int r) {
                os << "  q" << q << " -> q" << r << " [label=\"" << n.alphabet.letter(a)
                   << "\"];\n";
            });
    os << "}\n";
    return os.str();
}

}  // namespace depaut
