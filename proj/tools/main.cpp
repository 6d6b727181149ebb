#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zgu/chartable.hpp"
#include "zgu/errors.hpp"
#include "zgu/report.hpp"
#include "zgu/screen.hpp"
#include "zgu/twosub.hpp"
#include "zgu/units.hpp"

using namespace zgu;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNontrivial = 3;

ClassTable classes_for(long q) {
    if (q % 2 == 0 || q < 5) return conjugacy_classes_brute(q);
    return conjugacy_classes(q);
}

void print_table(const CharTable& table, const ClassTable& classes) {
    std::cout << "PSL(2," << table.q << "), eps = " << table.eps << "\n";
    std::cout << "class   ";
    for (const auto& c : classes.classes) std::cout << c.label << " (size " << c.size << ")  ";
    std::cout << "\n";
    for (const auto& row : table.rows) {
        std::cout << row.label << " (deg " << row.degree << "): ";
        bool first = true;
        for (const auto& c : classes.classes) {
            if (!first) std::cout << " | ";
            first = false;
            std::cout << row.values.at(c.label).to_string();
        }
        std::cout << "\n";
    }
}

int cmd_table(long q, bool as_json) {
    auto classes = conjugacy_classes(q);
    auto table = build_char_table(q);
    std::string note;
    try {
        test_character(table, classes);
    } catch (const QIsFive& e) {
        note = e.what();
    }
    if (as_json) {
        json j = table_json(table, classes);
        if (!note.empty()) j["note"] = note;
        std::cout << dump_report(j);
    } else {
        print_table(table, classes);
        if (!note.empty()) std::cout << "note: " << note << "\n";
    }
    return kExitOk;
}

int cmd_classes(long q, bool brute, bool as_json) {
    auto classes = brute ? conjugacy_classes_brute(q) : classes_for(q);
    if (as_json) {
        std::cout << dump_report(classes_json(classes));
        return kExitOk;
    }
    std::cout << classes.classes.size() << " conjugacy classes of PSL(2," << q << "):\n";
    for (const auto& c : classes.classes)
        std::cout << "  " << c.label << ": size " << c.size << ", element order "
                  << c.element_order << "\n";
    return kExitOk;
}

int cmd_real(long q, bool as_json) {
    auto classes = classes_for(q);
    if (as_json) {
        std::cout << dump_report(real_classes_json(classes));
        return kExitOk;
    }
    auto real = real_classes(classes);
    for (const auto& c : classes.classes)
        std::cout << "  " << c.label << " (order " << c.element_order << "): "
                  << (real.count(c.label) ? "real" : "not real") << "\n";
    return kExitOk;
}

int cmd_two_subgroups(long q, bool as_json) {
    auto rep = theorem21_verdict(q);
    if (as_json) {
        std::cout << dump_report(json(rep));
    } else {
        std::cout << "q = " << q << ": " << rep.verdict << "\n" << rep.note << "\n";
        for (const auto& o : rep.obstructions)
            std::cout << "  " << o.test << ": " << o.verdict << " — " << o.witness << "\n";
    }
    for (const auto& o : rep.obstructions)
        if (o.verdict != "Contradiction") return kExitInconsistent;
    return kExitOk;
}

int cmd_help_units(long q, long n, long box, bool as_json) {
    HelpOptions opts;
    opts.box = box;
    auto res = help_enumerate(q, n, opts);
    bool nontrivial = false;
    for (const auto& s : res.solutions) nontrivial |= !s.trivial;
    if (as_json) {
        std::cout << dump_report(help_json(res));
    } else {
        std::cout << "q = " << q << ", order " << n << ": " << res.solutions.size()
                  << " surviving chain(s), " << (res.complete ? "complete within box" : "capped")
                  << "\n";
        for (const auto& s : res.solutions) {
            std::cout << "  " << (s.trivial ? "trivial" : "NONTRIVIAL") << ":";
            for (const auto& [e, pa] : s.chain.pa) {
                std::cout << " order " << e << " {";
                for (const auto& [label, v] : pa.eps) std::cout << " " << label << ":" << v;
                std::cout << " }";
            }
            std::cout << "\n";
        }
    }
    return nontrivial ? kExitNontrivial : kExitOk;
}

int cmd_screen(long q, const std::string& tag, bool as_json) {
    auto rep = screen(parse_candidate(tag), q);
    if (as_json) {
        std::cout << dump_report(json(rep));
    } else {
        std::cout << tag << " vs PSL(2," << q << "): " << rep.verdict << "\n  " << rep.reason
                  << "\n";
        for (const auto& s : rep.steps)
            std::cout << "  " << s.test << ": " << s.outcome << " — " << s.witness << "\n";
    }
    return kExitOk;
}

int cmd_minimal(const std::string& tag, bool as_json) {
    auto rep = minimal_simple_report(tag);
    if (as_json) {
        std::cout << dump_report(json(rep));
    } else {
        std::cout << tag << ": " << rep.summary << "\n";
        for (const auto& l : rep.lines) std::cout << "  " << l << "\n";
    }
    return kExitOk;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

int cmd_verify_all(long q, bool as_json) {
    json j;
    j["q"] = q;
    auto classes = conjugacy_classes(q);
    auto table = build_char_table(q);

    auto orth = verify_orthogonality(table, classes);
    j["orthogonality"] = orth.ok ? "ok" : "FAIL";
    int rc = orth.ok ? kExitOk : kExitInconsistent;

    try {
        const auto& xi = test_character(table, classes);
        j["fs_indicator_xi"] = fs_indicator(table, classes, xi.label);
    } catch (const QIsFive& e) {
        j["fs_indicator_xi"] = e.what();
    }

    auto thm = theorem21_verdict(q);
    j["two_subgroups"] = thm;
    auto [p, f] = prime_power(q);
    (void)f;
    for (const auto& o : thm.obstructions)
        if (o.verdict != "Contradiction") rc = kExitInconsistent;

    json helps = json::object();
    for (long r : prime_divisors(group_order(q))) {
        if (r == p) continue;
        auto res = help_enumerate(q, r);
        bool nontrivial = false;
        for (const auto& s : res.solutions) nontrivial |= !s.trivial;
        helps["r=" + std::to_string(r)] =
            json{{"solutions", res.solutions.size()}, {"nontrivial", nontrivial}};
        if (nontrivial) rc = (rc == kExitOk) ? kExitNontrivial : rc;
    }
    j["help_sweep"] = helps;

    json screens = json::array();
    std::vector<std::string> tags = {"a5", "a7", "j1", "psl33", "sz:3", "ree:3"};
    for (long m = 1; m <= f; ++m)
        tags.push_back("psl2:" + std::to_string(p) + "," + std::to_string(m));
    for (const auto& tag : tags) screens.push_back(json(screen(parse_candidate(tag), q)));
    j["screen"] = screens;

    if (as_json) {
        std::cout << dump_report(j);
    } else {
        std::cout << "q = " << q << "\n";
        std::cout << "orthogonality: " << j["orthogonality"].get<std::string>() << "\n";
        std::cout << "fs_indicator(xi): " << j["fs_indicator_xi"].dump() << "\n";
        std::cout << "2-subgroups: " << thm.verdict << "\n";
        for (const auto& o : thm.obstructions)
            std::cout << "  " << o.test << ": " << o.verdict << " — " << o.witness << "\n";
        std::cout << "torsion-unit sweep:\n";
        for (const auto& [k, v] : helps.items())
            std::cout << "  " << k << ": " << v["solutions"] << " chain(s), nontrivial="
                      << v["nontrivial"] << "\n";
        std::cout << "composition-factor screen:\n";
        for (const auto& s : screens)
            std::cout << "  " << s["candidate"].get<std::string>() << ": "
                      << s["verdict"].get<std::string>() << " (" << s["reason"].get<std::string>()
                      << ")\n";
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for PSL(2,q): character tables, torsion-unit "
                 "constraints, and composition-factor screening"};
    app.require_subcommand(1);

    long q = 7, order = 2, box = 10;
    std::string tag, gtag;
    bool as_json = false, brute = false;

    auto add_q = [&](CLI::App* c) { c->add_option("--q", q, "prime power q")->required(); };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", as_json, "emit JSON"); };

    auto* t = app.add_subcommand("table", "print the character table of PSL(2,q)");
    add_q(t); add_json(t);
    auto* cl = app.add_subcommand("classes", "list conjugacy classes");
    add_q(cl); add_json(cl);
    cl->add_flag("--brute", brute, "force brute-force enumeration");
    auto* re = app.add_subcommand("real", "list real/non-real classes");
    add_q(re); add_json(re);
    auto* ts = app.add_subcommand("two-subgroups", "2-subgroup obstruction verdict");
    add_q(ts); add_json(ts);
    auto* he = app.add_subcommand("help", "enumerate torsion-unit partial augmentations");
    add_q(he); add_json(he);
    he->add_option("--order", order, "unit order")->required();
    he->add_option("--box", box, "coefficient box bound");
    auto* sc = app.add_subcommand("screen", "screen a simple-group candidate");
    add_q(sc); add_json(sc);
    sc->add_option("--candidate", tag, "candidate tag (psl2:r,m | a5 | a7 | j1 | ree:n | sz:n | psl33)")
        ->required();
    auto* mi = app.add_subcommand("minimal", "minimal-simple-group report");
    add_json(mi);
    mi->add_option("--g", gtag, "group tag (psl2:r,m | psl33 | sz:p)")->required();
    auto* va = app.add_subcommand("verify-all", "full verification sweep for one q");
    add_q(va); add_json(va);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (t->parsed()) return cmd_table(q, as_json);
        if (cl->parsed()) return cmd_classes(q, brute, as_json);
        if (re->parsed()) return cmd_real(q, as_json);
        if (ts->parsed()) return cmd_two_subgroups(q, as_json);
        if (he->parsed()) return cmd_help_units(q, order, box, as_json);
        if (sc->parsed()) return cmd_screen(q, tag, as_json);
        if (mi->parsed()) return cmd_minimal(gtag, as_json);
        if (va->parsed()) return cmd_verify_all(q, as_json);
    } catch (const UnsupportedQ& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownCandidate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedTag& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInconsistent;
    }
    return kExitUsage;
}
