#include "rbs/gsb.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "parallel.hpp"
#include "rbs/ordering.hpp"

namespace rbs {

MonicElement MonicElement::from(Poly p) {
    auto [lead, coeff] = leading_term(p);
    if (coeff != 1) throw std::invalid_argument("relation is not monic");
    return MonicElement{std::move(p), std::move(lead)};
}

std::vector<MonicElement> instantiate_relations(const RelationSystem& rules, std::size_t max_degree) {
    const auto& sig = rules.signature();
    const auto words = enumerate_words(sig, max_degree);
    std::vector<MonicElement> out;
    for (SymbolId op = 0; op < sig.operator_count(); ++op)
        for (const auto& u : words)
            for (const auto& v : words)
                if (u.degree() + v.degree() <= max_degree)
                    out.push_back(MonicElement::from(rules.relation(op, u, v)));
    return out;
}

namespace {

bool run_equals(std::span<const Prime> hay, std::size_t at, std::span<const Prime> needle) {
    if (at + needle.size() > hay.size()) return false;
    return std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(at));
}

void collect_occurrences(const Word& w, const Word& pattern, std::vector<Word>& out) {
    const auto f = w.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (run_equals(f, i, pattern.factors()))
            out.push_back(w.slice(0, i) * Word(Prime::hole()) * w.slice(i + pattern.breadth(), f.size()));
        if (!f[i].is_operator()) continue;
        std::vector<Word> inner;
        collect_occurrences(f[i].argument(), pattern, inner);
        for (auto& pi : inner)
            out.push_back(w.slice(0, i) * Word(Prime::apply(f[i].symbol(), std::move(pi))) *
                          w.slice(i + 1, f.size()));
    }
}

}  // namespace

std::vector<StarWord> occurrences(const Word& w, const Word& pattern) {
    if (pattern.is_unit()) throw std::invalid_argument("pattern must not be the unit word");
    std::vector<Word> found;
    collect_occurrences(w, pattern, found);
    std::vector<StarWord> out;
    out.reserve(found.size());
    for (auto& pi : found) out.emplace_back(std::move(pi));
    return out;
}

std::vector<CompositionRecord> find_intersection_compositions(const MonicElement& f,
                                                              const MonicElement& g) {
    const Word& fl = f.leading;
    const Word& gl = g.leading;
    const std::size_t a = fl.breadth(), b = gl.breadth();
    std::vector<CompositionRecord> out;
    if (a == 0 || b == 0) return out;
    for (std::size_t len = std::max(a, b); len < a + b; ++len) {
        const std::size_t offset = len - b;  // where ḡ starts inside w
        if (!run_equals(gl.factors(), 0, fl.factors().subspan(offset))) continue;
        Word right = gl.slice(a - offset, b);
        Word left = fl.slice(0, offset);
        Word ambiguity = fl * right;
        Poly comp = concat_mul(f.poly, Poly(right)) - concat_mul(Poly(left), g.poly);
        if (comp.is_zero() && f.poly == g.poly) continue;
        out.push_back({CompositionKind::Intersection, f, g, std::move(ambiguity), std::nullopt,
                       std::move(left), std::move(right), std::move(comp)});
    }
    return out;
}

namespace {

CompositionRecord make_inclusion(const MonicElement& f, const MonicElement& g, StarWord pi) {
    Poly comp = f.poly - substitute(pi, g.poly);
    return {CompositionKind::Inclusion, f, g, f.leading, std::move(pi), Word(), Word(), std::move(comp)};
}

}  // namespace

std::vector<CompositionRecord> find_inclusion_compositions(const MonicElement& f,
                                                           const MonicElement& g) {
    std::vector<CompositionRecord> out;
    for (auto& pi : occurrences(f.leading, g.leading)) {
        auto rec = make_inclusion(f, g, std::move(pi));
        if (rec.composition.is_zero() && f.poly == g.poly && rec.context->word().breadth() == 1 &&
            rec.context->word()[0].is_hole())
            continue;
        out.push_back(std::move(rec));
    }
    return out;
}

TrivialityCheck check_trivial(const CompositionRecord& rec, const RelationSystem& rules) {
    TrivialityCheck out;
    out.residual = normal_form(rec.composition, rules, Strategy::LeftmostOutermost, &out.certificate);
    for (const auto& step : out.certificate.steps)
        if (!out.max_leading_seen || compare_words(step.matched, *out.max_leading_seen) == Ordering::Greater)
            out.max_leading_seen = step.matched;
    bool below = !out.max_leading_seen ||
                 compare_words(*out.max_leading_seen, rec.ambiguity) == Ordering::Less;
    out.trivial = out.residual.is_zero() && below;
    return out;
}

namespace {

bool contains_leading(const Word& w, const std::unordered_set<Word, WordHash>& leading,
                      std::size_t max_len) {
    const auto f = w.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t len = 1; len <= max_len && i + len <= f.size(); ++len)
            if (leading.count(w.slice(i, i + len))) return true;
        if (f[i].is_operator() && contains_leading(f[i].argument(), leading, max_len)) return true;
    }
    return false;
}

}  // namespace

std::vector<Word> irreducibles(std::span<const MonicElement> relations, const Signature& sig,
                               std::size_t max_degree) {
    std::unordered_set<Word, WordHash> leading;
    std::size_t max_len = 0;
    for (const auto& r : relations) {
        leading.insert(r.leading);
        max_len = std::max(max_len, r.leading.breadth());
    }
    std::vector<Word> out;
    for (auto& w : enumerate_words(sig, max_degree))
        if (!contains_leading(w, leading, max_len)) out.push_back(std::move(w));
    return out;
}

// --- bounded verification ------------------------------------------------

bool GsbReport::passed() const {
    return std::all_of(families.begin(), families.end(),
                       [](const FamilyReport& f) { return f.failures.empty(); });
}

std::size_t GsbReport::instances_checked() const {
    std::size_t n = 0;
    for (const auto& f : families) n += f.instances_checked;
    return n;
}

namespace {

enum class Side { Left, Right };

struct FamilyPlan {
    CompositionKind kind;
    Side side;
    SymbolId outer;
    SymbolId inner;
    std::string name;
};

std::vector<FamilyPlan> family_plans(const Signature& sig) {
    std::vector<FamilyPlan> out;
    const auto n = static_cast<SymbolId>(sig.operator_count());
    for (SymbolId q = 0; q < n; ++q) {
        const auto& qn = sig.operator_name(q);
        out.push_back({CompositionKind::Intersection, Side::Left, q, q, "intersection:" + qn});
        std::vector<SymbolId> inner{q};
        for (SymbolId p = 0; p < n; ++p)
            if (p != q) inner.push_back(p);
        for (SymbolId p : inner) {
            const auto tag = qn + "<-" + sig.operator_name(p);
            out.push_back({CompositionKind::Inclusion, Side::Left, q, p, "inclusion-left:" + tag});
            out.push_back({CompositionKind::Inclusion, Side::Right, q, p, "inclusion-right:" + tag});
        }
    }
    return out;
}

struct Task {
    std::size_t family;
    std::size_t u, v, w;
    std::optional<std::size_t> pi;
};

// Compositions of one instance, each paired with its ambiguity.
std::vector<CompositionRecord> instance_records(const FamilyPlan& plan, const RelationSystem& rules,
                                                const Word& u, const Word& v, const Word& w,
                                                const StarWord* pi) {
    if (plan.kind == CompositionKind::Intersection) {
        auto f = MonicElement::from(rules.relation(plan.outer, u, v));
        auto g = MonicElement::from(rules.relation(plan.outer, v, w));
        auto recs = find_intersection_compositions(f, g);
        // keep the genuine three-prime overlap Q(u)Q(v)Q(w)
        std::erase_if(recs, [](const CompositionRecord& r) { return r.ambiguity.breadth() != 3; });
        return recs;
    }
    const SymbolId q = plan.outer;
    if (plan.side == Side::Left) {
        // f = rel_Q(π|P(u)P(v), w), g = rel_P(u, v), context Q(π)Q(w)
        auto g = MonicElement::from(rules.relation(plan.inner, u, v));
        auto f = MonicElement::from(rules.relation(q, pi->substitute(g.leading), w));
        StarWord ctx(Word(std::vector<Prime>{Prime::apply(q, pi->word()), Prime::apply(q, w)}));
        return {make_inclusion(f, g, std::move(ctx))};
    }
    // f = rel_Q(u, π|P(v)P(w)), g = rel_P(v, w), context Q(u)Q(π)
    auto g = MonicElement::from(rules.relation(plan.inner, v, w));
    auto f = MonicElement::from(rules.relation(q, u, pi->substitute(g.leading)));
    StarWord ctx(Word(std::vector<Prime>{Prime::apply(q, u), Prime::apply(q, pi->word())}));
    return {make_inclusion(f, g, std::move(ctx))};
}

}  // namespace

GsbReport verify_gsb(const RelationSystem& rules, GsbBounds bounds, unsigned threads) {
    const auto& sig = rules.signature();
    const auto words = enumerate_words(sig, bounds.uvw_degree);
    const auto stars = enumerate_star_words(sig, bounds.pi_degree);
    const auto plans = family_plans(sig);

    std::vector<Task> tasks;
    for (std::size_t fam = 0; fam < plans.size(); ++fam)
        for (std::size_t u = 0; u < words.size(); ++u)
            for (std::size_t v = 0; v < words.size(); ++v)
                for (std::size_t w = 0; w < words.size(); ++w) {
                    if (plans[fam].kind == CompositionKind::Intersection) {
                        tasks.push_back({fam, u, v, w, std::nullopt});
                        continue;
                    }
                    for (std::size_t p = 0; p < stars.size(); ++p) tasks.push_back({fam, u, v, w, p});
                }

    struct Outcome {
        std::size_t checked = 0;
        std::vector<FamilyFailure> failures;
    };
    std::vector<Outcome> outcomes(tasks.size());
    detail::parallel_for(tasks.size(), threads, [&](std::size_t i) {
        const Task& t = tasks[i];
        const StarWord* pi = t.pi ? &stars[*t.pi] : nullptr;
        for (const auto& rec :
             instance_records(plans[t.family], rules, words[t.u], words[t.v], words[t.w], pi)) {
            ++outcomes[i].checked;
            auto check = check_trivial(rec, rules);
            if (check.trivial) continue;
            outcomes[i].failures.push_back({words[t.u], words[t.v], words[t.w],
                                            pi ? std::optional<StarWord>(*pi) : std::nullopt,
                                            rec.ambiguity, check.residual, check.residual.is_zero()});
        }
    });

    GsbReport report{bounds, {}};
    for (const auto& plan : plans)
        report.families.push_back({plan.name, plan.kind, plan.outer, plan.inner, 0, {}});
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        auto& fam = report.families[tasks[i].family];
        fam.instances_checked += outcomes[i].checked;
        for (auto& f : outcomes[i].failures) fam.failures.push_back(std::move(f));
    }
    return report;
}

}  // namespace rbs
