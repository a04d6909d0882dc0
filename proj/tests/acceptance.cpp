// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "rbs/gsb.hpp"
#include "rbs/hopf.hpp"
#include "rbs/random.hpp"
#include "rbs/rewriting.hpp"
#include "rbs/syntax.hpp"

using namespace rbs;

namespace {

const Signature kOne = Signature::standard();
const Signature kTwo({"x", "y"});

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail = what;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Word> basis_words(const Signature& sig, std::size_t n) {
    std::vector<Word> out;
    for (auto& w : enumerate_words(sig, n))
        if (is_rbs_word(w)) out.push_back(std::move(w));
    return out;
}

// Signed terms as printed, sorted, duplicates kept.
using TermBag = std::vector<std::pair<std::string, std::string>>;

TermBag bag(const std::vector<std::pair<Scalar, Word>>& terms, const Signature& sig) {
    TermBag out;
    for (const auto& [c, w] : terms) out.emplace_back(format(w, sig), format_scalar(c));
    std::sort(out.begin(), out.end());
    return out;
}

Outcome gsb_criterion() {
    Outcome o;
    auto rules = RelationSystem::standard(kOne);
    auto t0 = Clock::now();
    GsbReport report = verify_gsb(rules, {1, 1});
    double elapsed = seconds_since(t0);
    o.require(report.families.size() == 10, "expected ten composition families");
    for (const auto& f : report.families)
        o.require(f.failures.empty(), f.family + " has " + std::to_string(f.failures.size()) + " failures");
    o.require(elapsed < 60, "took " + std::to_string(elapsed) + " s");

    // The R-self-overlap at u = v = w = 1, one rewrite of each of its four
    // monomials. Expected terms from R(a)R(b) -> R(R(a)b) + R(aS(b)):
    //   -R(R(1))R(1) -> -R(R(R(1)))   - R(R(1)S(1))
    //   -R(S(1))R(1) -> -R(R(S(1)))   - R(S(1)S(1))
    //   +R(1)R(R(1)) -> +R(R(1)R(1))  + R(S(R(1)))
    //   +R(1)R(S(1)) -> +R(R(1)S(1))  + R(S(S(1)))
    const std::vector<std::pair<Scalar, Word>> expected_terms = {
        {-1, parse_word("R(R(R(1)))", kOne)},  {-1, parse_word("R(R(1) S(1))", kOne)},
        {-1, parse_word("R(R(S(1)))", kOne)},  {-1, parse_word("R(S(1) S(1))", kOne)},
        {1, parse_word("R(R(1) R(1))", kOne)}, {1, parse_word("R(S(R(1)))", kOne)},
        {1, parse_word("R(R(1) S(1))", kOne)}, {1, parse_word("R(S(S(1)))", kOne)},
    };
    auto f = MonicElement::from(rules.relation(0, Word(), Word()));
    auto recs = find_intersection_compositions(f, f);
    o.require(recs.size() == 1, "expected one self-overlap of R(1)R(1)");
    if (recs.size() != 1) return o;
    const auto& rec = recs[0];
    o.require(rec.ambiguity == parse_word("R(1) R(1) R(1)", kOne), "ambiguity is not R(1)R(1)R(1)");
    o.require(rec.composition == parse_poly("-R(R(1)) R(1) - R(S(1)) R(1) + R(1) R(R(1)) + R(1) R(S(1))", kOne),
              "composition differs from f·R(1) - R(1)·g");
    std::vector<std::pair<Scalar, Word>> expanded;
    for (const auto& [w, c] : rec.composition) {
        auto m = find_redex(w);
        o.require(m && m->context == StarWord::hole(), "monomial is not a top-level redex");
        if (!m) return o;
        for (const auto& [u, cu] : rewrite_redex(*m, rules)) expanded.emplace_back(c * cu, u);
    }
    o.require(expanded.size() == 8, "expansion has " + std::to_string(expanded.size()) + " terms");
    o.require(bag(expanded, kOne) == bag(expected_terms, kOne), "eight-term expansion differs");
    auto check = check_trivial(rec, rules);
    o.require(check.trivial && check.residual.is_zero(), "composition does not reduce to 0");
    o.require(replay(check.certificate), "certificate does not replay");
    if (o.pass) {
        std::ostringstream s;
        s << report.instances_checked() << " compositions in " << elapsed << " s; 8-term expansion matches";
        o.detail = s.str();
    }
    return o;
}

Outcome basis_criterion() {
    Outcome o;
    std::size_t total = 0;
    for (const auto& [sig, n] : {std::pair{kOne, std::size_t{4}}, {kTwo, std::size_t{3}}}) {
        auto irr = irreducibles(instantiate_relations(RelationSystem::standard(sig), n), sig, n);
        auto basis = basis_words(sig, n);
        o.require(irr == basis, "irreducibles differ from RBS words");
        auto counts = oracle::rbs_counts(sig.generator_count(), sig.operator_count(), n);
        std::size_t want = 0;
        for (auto c : counts) want += c;
        o.require(irr.size() == want, "count differs from the counting recurrence");
        total += irr.size();
    }
    if (o.pass) o.detail = std::to_string(total) + " words compared";
    return o;
}

Outcome diamond_criterion() {
    Outcome o;
    auto rules = RelationSystem::standard(kOne);
    DiamondProduct mul(kOne);
    auto words = basis_words(kOne, 5);
    std::size_t pairs = 0;
    for (const auto& w : words)
        for (const auto& v : words) {
            if (w.degree() + v.degree() > 5) continue;
            ++pairs;
            if (!(mul(w, v) == normal_form(Poly(w * v), rules))) {
                o.require(false, "mismatch at " + format(w, kOne) + " ⋄ " + format(v, kOne));
                return o;
            }
        }
    WordSampler sampler(kOne, 6);
    Rng rng(2718281);
    for (int i = 0; i < 500; ++i) {
        auto total = static_cast<std::size_t>(draw_below(rng, 7));
        auto a = static_cast<std::size_t>(draw_below(rng, total + 1));
        auto b = static_cast<std::size_t>(draw_below(rng, total - a + 1));
        Poly x(sampler.rbs_word(a, rng)), y(sampler.rbs_word(b, rng)), z(sampler.rbs_word(total - a - b, rng));
        o.require(mul(mul(x, y), z) == mul(x, mul(y, z)), "associativity fails");
    }
    if (o.pass) o.detail = std::to_string(pairs) + " pairs, 500 random triples";
    return o;
}

Outcome rb_laws_criterion() {
    Outcome o;
    DiamondProduct mul(kOne);
    auto words = basis_words(kOne, 3);
    for (SymbolId q : {SymbolId{0}, SymbolId{1}})
        for (const auto& a : words)
            for (const auto& b : words) {
                Poly qa(Word(Prime::apply(q, a))), qb(Word(Prime::apply(q, b)));
                Poly ra(Word(Prime::apply(0, a))), sb(Word(Prime::apply(1, b)));
                Poly rhs = apply_operator_linear(q, mul(ra, Poly(b)) + mul(Poly(a), sb));
                o.require(mul(qa, qb) == rhs, "law fails at a=" + format(a, kOne) + ", b=" + format(b, kOne));
            }
    if (o.pass) o.detail = std::to_string(2 * words.size() * words.size()) + " instances";
    return o;
}

Outcome suites_criterion(const HopfReport& r, std::initializer_list<const char*> names, double elapsed,
                         double limit) {
    Outcome o;
    std::size_t checked = 0;
    for (const char* name : names) {
        const SuiteResult* s = r.find(name);
        o.require(s != nullptr, std::string("suite missing: ") + name);
        if (!s) continue;
        o.require(s->passed(), std::string(name) + " fails at " + (s->failures.empty() ? "" : s->failures[0].input));
        o.require(s->checked > 0, std::string(name) + " checked nothing");
        checked += s->checked;
    }
    if (limit > 0) o.require(elapsed < limit, "took " + std::to_string(elapsed) + " s");
    if (o.pass) o.detail = std::to_string(checked) + " checks";
    return o;
}

Outcome right_counit_criterion(const HopfReport& r) {
    Outcome o;
    Bialgebra h(kOne);
    Word s1 = parse_word("S(1)", kOne);
    Poly lhs = counit_right(h.coproduct(s1));
    o.require(lhs == parse_poly("R(1)", kOne), "(id⊗ε)Δ(S(1)) is " + format(lhs, kOne));
    o.require(!(lhs == Poly(s1)), "(id⊗ε)Δ(S(1)) equals S(1)");
    const SuiteResult* s = r.find("right-counit-failure");
    o.require(s && s->passed() && s->checked == 1, "verifier did not report the witness");
    if (o.pass) o.detail = "(id⊗ε)Δ(S(1)) = " + format(lhs, kOne) + " ≠ S(1)";
    return o;
}

Outcome antipode_criterion(const HopfReport& r) {
    Outcome o = suites_criterion(r, {"right-antipode", "connected"}, 0, 0);
    // the recursion asserts the (0, n) slice itself; evaluate it on every word
    Bialgebra h(kOne);
    try {
        for (const auto& w : basis_words(kOne, 4)) h.antipode(w);
    } catch (const std::logic_error& e) {
        o.require(false, e.what());
    }
    return o;
}

Outcome mutation_criterion() {
    Outcome o;
    int caught = 0;
    for (SymbolId op : {SymbolId{0}, SymbolId{1}})
        for (int pos = 0; pos < 3; ++pos) {
            auto report = verify_gsb(RelationSystem::standard(kOne).with_flipped_sign(op, pos), {1, 1});
            if (!report.passed()) ++caught;
            else o.require(false, "flip " + kOne.operator_name(op) + ":" + std::to_string(pos) + " not detected");
        }
    if (o.pass) o.detail = std::to_string(caught) + "/6 sign flips detected";
    return o;
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

Outcome determinism_criterion() {
    Outcome o;
    const std::vector<std::string> args{"--format", "json", "verify", "all", "--seed", "12345"};
    int c1 = 0, c2 = 0, c3 = 0;
    std::string a = cli_output(args, c1);
    std::string b = cli_output(args, c2);
    ::setenv("RBS_KERNEL_THREADS", "1", 1);
    std::string c = cli_output(args, c3);
    ::unsetenv("RBS_KERNEL_THREADS");
    o.require(c1 == 0 && c2 == 0 && c3 == 0, "verify all did not exit 0");
    o.require(!a.empty() && a == b, "two runs differ");
    o.require(a == c, "single-threaded run differs");
    if (o.pass) o.detail = std::to_string(a.size()) + " bytes, identical across 3 runs";
    return o;
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int n, const char* name, const Outcome& o) {
        std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << n << "] " << name;
        if (!o.detail.empty()) std::cout << ": " << o.detail;
        std::cout << std::endl;
        if (!o.pass) ++failed;
    };
    auto guarded = [](const std::function<Outcome()>& fn) {
        try {
            return fn();
        } catch (const std::exception& e) {
            return Outcome{false, std::string("exception: ") + e.what()};
        }
    };

    report(1, "composition families are trivial", guarded(gsb_criterion));
    report(2, "irreducible words are the RBS words", guarded(basis_criterion));
    report(3, "diamond product agrees with reduction", guarded(diamond_criterion));
    report(4, "Rota-Baxter system laws", guarded(rb_laws_criterion));

    auto t0 = Clock::now();
    HopfReport hopf = verify_hopf(kOne, HopfBounds{});
    double elapsed = seconds_since(t0);
    report(5, "bialgebra suite",
           guarded([&] {
               return suites_criterion(hopf,
                                       {"coproduct-multiplicative", "counit-multiplicative", "coassociative",
                                        "left-counit"},
                                       elapsed, 300);
           }));
    report(6, "right counit fails at S(1)", guarded([&] { return right_counit_criterion(hopf); }));
    report(7, "grading", guarded([&] { return suites_criterion(hopf, {"grading-product", "grading-coproduct"}, 0, 0); }));
    report(8, "right antipode", guarded([&] { return antipode_criterion(hopf); }));
    report(9, "mutation sensitivity", guarded(mutation_criterion));
    report(10, "determinism", guarded(determinism_criterion));

    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
    return failed == 0 ? 0 : 1;
}
