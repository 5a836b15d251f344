// depaut -- command line front end: parse a regex or an nfa json file, run a
// pipeline, emit text/json/dot.
//
// exit codes: 0 ok, 2 parse error, 3 cap exceeded, 4 internal cross-check
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "depaut/algebra.hh"
#include "depaut/canonical.hh"
#include "depaut/jsldfa.hh"
#include "depaut/kw.hh"
#include "depaut/regex.hh"
#include "depaut/saturate.hh"

using namespace depaut;

namespace {

struct Options {
    std::string input;
    std::string format = "text";
    int grid_cap = kDefaultGridCap;
    int atom_cap = kDefaultAtomCap;
    uint64_t seed = 1;
    bool emit_cover = false;
};

Nfa load_input(const std::string& input) {
    std::ifstream f(input);
    if (f.good()) {
        std::ostringstream ss;
        ss << f.rdbuf();
        return nfa_from_json(ss.str());
    }
    return regex_to_nfa(input);
}

void print_dfa(const Dfa& d, const std::string& format, std::ostream& os) {
    if (format == "dot") {
        os << nfa_to_dot(to_nfa(d));
        return;
    }
    if (format == "json") {
        os << nfa_to_json(to_nfa(d)) << "\n";
        return;
    }
    os << "states: " << d.size() << "\n";
    for (int q = 0; q < d.size(); ++q) {
        os << (q == d.initial ? "i" : " ") << (d.final.test(q) ? "o" : " ") << " " << q << ":";
        for (int a = 0; a < d.alphabet.size(); ++a)
            os << " " << d.alphabet.letter(a) << "->" << d.next[a][q];
        os << "\n";
    }
}

void print_nfa(const Nfa& n, const std::string& format, std::ostream& os) {
    if (format == "dot") {
        os << nfa_to_dot(n);
        return;
    }
    if (format == "json") {
        os << nfa_to_json(n) << "\n";
        return;
    }
    for (int q = 0; q < n.size(); ++q) {
        os << (n.initial.test(q) ? "i" : " ") << (n.final.test(q) ? "o" : " ") << " "
           << n.states.labels[q] << ":";
        for (int a = 0; a < n.alphabet.size(); ++a)
            n.trans[a].rows[q].for_each(
                [&](int r) { os << " " << n.alphabet.letter(a) << "->" << n.states.labels[r]; });
        os << "\n";
    }
}

int run_selftest(uint64_t seed, std::ostream& os) {
    std::mt19937_64 rng(seed);
    auto random_nfa = [&](int max_states, int n_letters) {
        int n = 1 + (int)(rng() % max_states);
        FinSet st = FinSet::numbered(n, "q");
        Alphabet a(std::string("ab").substr(0, n_letters));
        std::vector<FinRel> tr;
        for (int l = 0; l < n_letters; ++l) {
            FinRel t(st, st);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    if (rng() % 100 < 28) t.set_edge(i, k);
            tr.push_back(std::move(t));
        }
        Bits init(n), fin(n);
        for (int i = 0; i < n; ++i) {
            if (rng() % 100 < 40) init.set(i);
            if (rng() % 100 < 40) fin.set(i);
        }
        if (init.none()) init.set((int)(rng() % n));
        return mk_nfa(a, st, init, fin, std::move(tr));
    };

    os << "rep/red round trips... " << std::flush;
    RoundTripReport rt = check_equivalence_round_trips(rng(), 100);
    if (!rt.ok) {
        os << "FAIL (" << rt.detail << ")\n";
        return 4;
    }
    os << "ok\n";

    os << "brzozowski double reversal (100 nfas)... " << std::flush;
    for (int i = 0; i < 100; ++i) brzozowski_minimize(random_nfa(5, 2));
    os << "ok\n";

    os << "dependency theorem (30 languages)... " << std::flush;
    for (int i = 0; i < 30; ++i) {
        Language l = from_nfa(random_nfa(4, 2));
        CheckReport r = dependency_theorem_check(l);
        if (!r.ok) {
            os << "FAIL (" << r.detail << ")\n";
            return 4;
        }
    }
    os << "ok\n";

    os << "atomizer coverings (30 machines)... " << std::flush;
    for (int i = 0; i < 30; ++i) {
        Nfa n = random_nfa(4, 2);
        covering_of_extension(full_subset(n));  // throws on defect
        CheckReport r = atomizer_open_check(full_subset(n));
        if (!r.ok) {
            os << "FAIL (" << r.detail << ")\n";
            return 4;
        }
    }
    os << "ok\n";

    os << "atomicity agreement (30 nfas)... " << std::flush;
    for (int i = 0; i < 30; ++i) {
        AtomicityReport r = atomicity(random_nfa(4, 2));
        if (!r.consistent()) {
            os << "FAIL\n" << r.to_text();
            return 4;
        }
    }
    os << "ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dependency automata and JSL-dfa toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::string subcmd;
    for (const char* name :
         {"min-dfa", "min-nfa", "rfsa", "brzozowski", "dep-rel", "atoms", "syn-monoid",
          "syn-semiring", "check-atomic", "saturation", "canon", "selftest"}) {
        CLI::App* c = app.add_subcommand(name);
        if (std::string(name) != "selftest")
            c->add_option("input", opt.input, "regex, or path to an nfa json file")->required();
        c->add_option("--format", opt.format, "text|json|dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        c->add_option("--grid-cap", opt.grid_cap, "maximal biclique cap")
            ->check(CLI::PositiveNumber);
        c->add_option("--atom-cap", opt.atom_cap, "atom/class count cap")
            ->check(CLI::PositiveNumber);
        c->add_option("--seed", opt.seed, "randomized suite seed");
        if (std::string(name) == "min-nfa")
            c->add_flag("--emit-cover", opt.emit_cover, "print the minimal covering grids");
        c->callback([&subcmd, name]() { subcmd = name; });
    }

    CLI11_PARSE(app, argc, argv);
    if (const char* env = std::getenv("SEED")) opt.seed = std::strtoull(env, nullptr, 10);

    try {
        std::ostream& os = std::cout;
        if (subcmd == "selftest") return run_selftest(opt.seed, os);

        Nfa input = load_input(opt.input);
        Language l = from_nfa(input);

        if (subcmd == "min-dfa") {
            print_dfa(canonical_dfa(l), opt.format, os);
        } else if (subcmd == "min-nfa") {
            MinimalNfaResult r = minimal_nfa(l, opt.grid_cap);
            if (opt.format == "text") os << "states: " << r.nfa.size() << "\n";
            print_nfa(r.nfa, opt.format, os);
            if (opt.emit_cover && opt.format == "text")
                os << covering_to_text(biclique_form(r.covering));
        } else if (subcmd == "rfsa") {
            print_nfa(canonical_rfsa(l), opt.format, os);
        } else if (subcmd == "brzozowski") {
            print_dfa(brzozowski_minimize(input), opt.format, os);
        } else if (subcmd == "dep-rel") {
            FinRel dr = dependency_relation(l);
            if (opt.format == "dot")
                os << finrel_to_dot(dr);
            else
                os << finrel_to_text(dr);
            auto gs = grids(l, opt.grid_cap);
            os << "grids: " << gs.size() << "\n";
            for (const Grid& g : gs) {
                os << "A={";
                bool first = true;
                g.rows.for_each([&](int u) {
                    os << (first ? "" : ",") << dr.src.labels[u];
                    first = false;
                });
                os << "} x B={";
                first = true;
                g.cols.for_each([&](int v) {
                    os << (first ? "" : ",") << dr.dst.labels[v];
                    first = false;
                });
                os << "}\n";
            }
        } else if (subcmd == "atoms") {
            auto at = atoms(l);
            QuotientIndex qir = left_quotients(reverse(l));
            os << "atoms: " << at.size() << "\n";
            for (size_t i = 0; i < at.size(); ++i) {
                Word w(qir.reps[i].rbegin(), qir.reps[i].rend());
                os << "[" << word_display(w) << "] states=" << at[i].states() << "\n";
            }
        } else if (subcmd == "syn-monoid") {
            MonoidDfa m = syntactic_monoid(l);
            os << "elements: " << m.monoid.size() << "\n";
            for (int e = 0; e < m.monoid.size(); ++e)
                os << (e == m.monoid.unit ? "1" : " ") << " [" << word_display(m.monoid.witness[e])
                   << "]\n";
        } else if (subcmd == "syn-semiring") {
            SemiringDfa s = syntactic_semiring(l, std::max(opt.atom_cap * 256, 4096));
            os << semiring_to_text(s.semiring);
        } else if (subcmd == "check-atomic") {
            AtomicityReport r = atomicity(input, opt.atom_cap);
            os << r.to_text();
            if (!r.consistent()) {
                std::cerr << "defect: direct and characterization predicates disagree\n";
                return 4;
            }
        } else if (subcmd == "saturation") {
            os << saturation(input).to_text();
        } else if (subcmd == "canon") {
            CanonicalMachine bm = bool_min(l, opt.atom_cap);
            CanonicalMachine dm = dist_min(l, opt.atom_cap);
            os << "boolean machine carrier: " << bm.machine.size() << "\n";
            os << "distributive machine carrier: " << dm.machine.size() << "\n";
            if (opt.format == "json") {
                os << jsl_dfa_to_json(bm.machine) << "\n";
                os << jsl_dfa_to_json(dm.machine) << "\n";
            }
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse-error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse-error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap-exceeded: " << e.what() << "\n";
        return 3;
    } catch (const DefectError& e) {
        std::cerr << "defect: " << e.what() << "\n";
        return 4;
    }
}
