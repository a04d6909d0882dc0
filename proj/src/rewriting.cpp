#include "rbs/rewriting.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "rbs/ordering.hpp"

namespace rbs {

Word RuleMatch::redex() const {
    return Word(std::vector<Prime>{Prime::apply(op, left), Prime::apply(op, right)});
}

namespace {

struct Found {
    Word context;
    SymbolId op;
    Word left;
    Word right;
};

bool same_operator(const Prime& a, const Prime& b) {
    return a.is_operator() && b.is_operator() && a.symbol() == b.symbol();
}

// Context with factors [0, first) and [last, n) kept and `middle` in between.
Word splice(const Word& w, std::size_t first, std::size_t last, const Prime& middle) {
    std::vector<Prime> f(w.factors().begin(), w.factors().begin() + static_cast<std::ptrdiff_t>(first));
    f.push_back(middle);
    f.insert(f.end(), w.factors().begin() + static_cast<std::ptrdiff_t>(last), w.factors().end());
    return Word(std::move(f));
}

Found at_pair(const Word& w, std::size_t i) {
    return {splice(w, i, i + 2, Prime::hole()), w[i].symbol(), w[i].argument(), w[i + 1].argument()};
}

std::optional<Found> search(const Word& w, Strategy strategy);

std::optional<Found> inside(const Word& w, std::size_t i, Strategy strategy) {
    if (!w[i].is_operator()) return std::nullopt;
    auto found = search(w[i].argument(), strategy);
    if (found) found->context = splice(w, i, i + 1, Prime::apply(w[i].symbol(), found->context));
    return found;
}

std::optional<Found> search(const Word& w, Strategy strategy) {
    const std::size_t n = w.breadth();
    if (strategy == Strategy::LeftmostOutermost) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i + 1 < n && same_operator(w[i], w[i + 1])) return at_pair(w, i);
            if (auto found = inside(w, i, strategy)) return found;
        }
    } else {
        for (std::size_t i = n; i-- > 0;) {
            if (auto found = inside(w, i, strategy)) return found;
            if (i + 1 < n && same_operator(w[i], w[i + 1])) return at_pair(w, i);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<RuleMatch> find_redex(const Word& w, Strategy strategy) {
    auto found = search(w, strategy);
    if (!found) return std::nullopt;
    return RuleMatch{StarWord(std::move(found->context)), found->op, std::move(found->left),
                     std::move(found->right)};
}

bool is_rbs_word(const Word& w) {
    const auto f = w.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i + 1 < f.size() && same_operator(f[i], f[i + 1])) return false;
        if (f[i].is_operator() && !is_rbs_word(f[i].argument())) return false;
    }
    return true;
}

// --- relations -----------------------------------------------------------

RelationSystem::RelationSystem(Signature sig)
    : sig_(std::move(sig)), signs_(sig_.operator_count(), {Scalar(1), Scalar(-1), Scalar(-1)}) {}

RelationSystem RelationSystem::standard(const Signature& sig) { return RelationSystem(sig); }

RelationSystem RelationSystem::with_flipped_sign(SymbolId op, int position) const {
    if (op >= sig_.operator_count() || position < 0 || position > 2)
        throw std::invalid_argument("no such relation sign");
    RelationSystem out = *this;
    out.signs_[op][static_cast<std::size_t>(position)] *= -1;
    return out;
}

bool RelationSystem::is_standard() const {
    for (const auto& s : signs_)
        if (s[0] != 1 || s[1] != -1 || s[2] != -1) return false;
    return true;
}

Poly RelationSystem::replacement(SymbolId op, const Word& u, const Word& v) const {
    const auto& s = signs_.at(op);
    const Word ru = Word(Prime::apply(sig_.lead_operator(), u)) * v;
    const Word sv = u * Word(Prime::apply(sig_.trail_operator(), v));
    Poly out(Word(Prime::apply(op, ru)), -s[1] / s[0]);
    out.add_term(Word(Prime::apply(op, sv)), -s[2] / s[0]);
    return out;
}

Poly RelationSystem::relation(SymbolId op, const Word& u, const Word& v) const {
    Poly lead(Word(std::vector<Prime>{Prime::apply(op, u), Prime::apply(op, v)}));
    return lead - replacement(op, u, v);
}

Poly rewrite_redex(const RuleMatch& m, const RelationSystem& rules) {
    return substitute(m.context, rules.replacement(m.op, m.left, m.right));
}

// --- normal forms --------------------------------------------------------

Poly normal_form(const Poly& p, const RelationSystem& rules, Strategy strategy,
                 ReductionTrace* trace) {
    std::map<Word, Scalar, DegLexGreater> work(p.begin(), p.end());
    Poly result;
    if (trace) {
        trace->input = p;
        trace->steps.clear();
    }
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Word& w = node.key();
        const Scalar& c = node.mapped();
        auto match = find_redex(w, strategy);
        if (!match) {
            result.add_term(w, c);
            continue;
        }
        Poly repl = rewrite_redex(*match, rules);
        for (const auto& [u, cu] : repl) {
            if (compare_words(u, w) != Ordering::Less)
                throw std::logic_error("rewrite step does not decrease the leading word");
            auto [it, inserted] = work.try_emplace(u, c * cu);
            if (!inserted) {
                it->second += c * cu;
                if (it->second == 0) work.erase(it);
            }
        }
        if (trace) trace->steps.push_back({w, std::move(*match), c, std::move(repl)});
    }
    if (trace) trace->result = result;
    return result;
}

Poly normal_form(const Poly& p, const Signature& sig) {
    return normal_form(p, RelationSystem::standard(sig));
}

bool replay(const ReductionTrace& trace) {
    Poly p = trace.input;
    for (const auto& step : trace.steps) {
        if (!(step.match.matched() == step.matched)) return false;
        p.add_term(step.matched, -step.coefficient);
        p += step.coefficient * step.replacement;
    }
    return p == trace.result;
}

// --- diamond product -----------------------------------------------------

struct DiamondProduct::Cache {
    std::shared_mutex mutex;
    std::unordered_map<WordPair, Poly, WordPairHash> entries;
};

DiamondProduct::DiamondProduct(Signature sig) : sig_(std::move(sig)), cache_(std::make_unique<Cache>()) {}
DiamondProduct::~DiamondProduct() = default;
DiamondProduct::DiamondProduct(DiamondProduct&&) noexcept = default;
DiamondProduct& DiamondProduct::operator=(DiamondProduct&&) noexcept = default;

Poly DiamondProduct::operator()(const Word& w, const Word& v) const {
    if (!is_rbs_word(w) || !is_rbs_word(v))
        throw std::invalid_argument("diamond product needs RBS words");
    return unchecked(w, v);
}

Poly DiamondProduct::operator()(const Poly& p, const Poly& q) const {
    for (const auto* poly : {&p, &q})
        for (const auto& term : *poly)
            if (!is_rbs_word(term.first)) throw std::invalid_argument("diamond product needs RBS words");
    Poly out;
    for (const auto& [w, cw] : p)
        for (const auto& [v, cv] : q) {
            Scalar c = cw * cv;
            for (const auto& [u, cu] : unchecked(w, v)) out.add_term(u, c * cu);
        }
    return out;
}

Poly DiamondProduct::unchecked(const Word& w, const Word& v) const {
    if (w.is_unit()) return Poly(v);
    if (v.is_unit()) return Poly(w);
    const Prime& last = w[w.breadth() - 1];
    const Prime& first = v[0];
    if (!same_operator(last, first)) return Poly(w * v);

    // w_1..w_{t-1} (w_t ⋄ v_1) v_2..v_l; each term of w_t ⋄ v_1 is a single prime.
    const Word head = w.slice(0, w.breadth() - 1);
    const Word tail = v.slice(1, v.breadth());
    Poly out;
    for (const auto& [mid, c] : prime_product(last, first)) out.add_term(head * mid * tail, c);
    return out;
}

Poly DiamondProduct::prime_product(const Prime& a, const Prime& b) const {
    WordPair key{Word(a), Word(b)};
    {
        std::shared_lock lock(cache_->mutex);
        if (auto it = cache_->entries.find(key); it != cache_->entries.end()) return it->second;
    }
    // Q(w̃) ⋄ Q(ṽ) = Q(R(w̃) ⋄ ṽ + w̃ ⋄ S(ṽ))
    const Word& wt = a.argument();
    const Word& vt = b.argument();
    Poly inner = unchecked(Word(Prime::apply(sig_.lead_operator(), wt)), vt);
    inner += unchecked(wt, Word(Prime::apply(sig_.trail_operator(), vt)));
    Poly result = apply_operator_linear(a.symbol(), inner);
    std::unique_lock lock(cache_->mutex);
    cache_->entries.try_emplace(std::move(key), result);
    return result;
}

Poly diamond(const Signature& sig, const Word& w, const Word& v) { return DiamondProduct(sig)(w, v); }

Poly diamond_poly(const Signature& sig, const Poly& p, const Poly& q) {
    return DiamondProduct(sig)(p, q);
}

}  // namespace rbs
