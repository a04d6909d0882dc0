#include "rbs/hopf.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "parallel.hpp"
#include "rbs/random.hpp"
#include "rbs/syntax.hpp"

namespace rbs {

Poly LinearEndomap::operator()(const Poly& p) const {
    Poly out;
    for (const auto& [w, c] : p)
        for (const auto& [u, cu] : on_basis_(w)) out.add_term(u, c * cu);
    return out;
}

std::size_t Tensor3::KeyHash::operator()(const Key& k) const noexcept {
    std::size_t h = std::get<0>(k).hash();
    h = h * 0x9e3779b97f4a7c15ULL ^ std::get<1>(k).hash();
    h = h * 0x9e3779b97f4a7c15ULL ^ std::get<2>(k).hash();
    return h;
}

void Tensor3::add_term(const Word& a, const Word& b, const Word& c, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b, c}, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

Scalar Tensor3::coefficient(const Word& a, const Word& b, const Word& c) const {
    auto it = terms_.find(Key{a, b, c});
    return it == terms_.end() ? Scalar(0) : it->second;
}

// --- bialgebra -----------------------------------------------------------

struct Bialgebra::Cache {
    std::shared_mutex mutex;
    std::unordered_map<Word, TensorPoly, WordHash> coproducts;
    std::unordered_map<Word, Poly, WordHash> antipodes;
};

namespace {

template <typename Map, typename Compute>
auto memoized(std::shared_mutex& mutex, Map& map, const Word& w, Compute&& compute) {
    {
        std::shared_lock lock(mutex);
        if (auto it = map.find(w); it != map.end()) return it->second;
    }
    auto value = compute();
    std::unique_lock lock(mutex);
    map.try_emplace(w, value);
    return value;
}

}  // namespace

Bialgebra::Bialgebra(Signature sig) : product_(std::move(sig)), cache_(std::make_unique<Cache>()) {}
Bialgebra::~Bialgebra() = default;
Bialgebra::Bialgebra(Bialgebra&&) noexcept = default;
Bialgebra& Bialgebra::operator=(Bialgebra&&) noexcept = default;

TensorPoly Bialgebra::tensor_diamond(const TensorPoly& a, const TensorPoly& b) const {
    TensorPoly out;
    for (const auto& [ab, ca] : a)
        for (const auto& [cd, cb] : b) {
            Poly left = product_.unchecked(ab.first, cd.first);
            Poly right = product_.unchecked(ab.second, cd.second);
            Scalar c = ca * cb;
            for (const auto& [l, cl] : left)
                for (const auto& [r, cr] : right) out.add_term(l, r, c * cl * cr);
        }
    return out;
}

TensorPoly Bialgebra::coproduct(const Word& w) const {
    if (!is_rbs_word(w)) throw std::invalid_argument("coproduct needs an RBS word");
    return memoized(cache_->mutex, cache_->coproducts, w, [&] {
        if (w.is_unit()) return TensorPoly(Word::unit(), Word::unit());
        if (w.breadth() > 1) {
            TensorPoly acc = coproduct(w.slice(0, 1));
            for (std::size_t i = 1; i < w.breadth(); ++i)
                acc = tensor_diamond(acc, coproduct(w.slice(i, i + 1)));
            return acc;
        }
        const Prime& p = w[0];
        if (p.is_generator()) {
            TensorPoly t(Word::unit(), w);
            t.add_term(w, Word::unit(), 1);
            return t;
        }
        const SymbolId q = p.symbol();
        const SymbolId lead = signature().lead_operator();
        TensorPoly t = tensor_map(coproduct(p.argument()), identity_map,
                                  [q](const Word& u) { return Poly(Word(Prime::apply(q, u))); });
        t.add_term(Word(Prime::apply(lead, p.argument())), Word::unit(), 1);
        return t;
    });
}

TensorPoly Bialgebra::coproduct(const Poly& p) const {
    TensorPoly out;
    for (const auto& [w, c] : p) out += c * coproduct(w);
    return out;
}

Poly Bialgebra::antipode(const Word& w) const {
    if (!is_rbs_word(w)) throw std::invalid_argument("antipode needs an RBS word");
    return memoized(cache_->mutex, cache_->antipodes, w, [&] {
        if (w.is_unit()) return Poly::one();
        const std::size_t n = w.degree();
        const TensorPoly d = coproduct(w);
        if (!(tensor_graded_slice(d, 0, n) == TensorPoly(Word::unit(), w)))
            throw std::logic_error("coproduct is not connected at this word");
        Poly out;
        for (const auto& [ab, c] : d) {
            if (ab.first.is_unit() && ab.second == w) continue;
            if (ab.second.degree() >= n) throw std::logic_error("coproduct is not graded at this word");
            for (const auto& [u, cu] : product_(Poly(ab.first), antipode(ab.second)))
                out.add_term(u, -c * cu);
        }
        return out;
    });
}

Poly Bialgebra::antipode(const Poly& p) const {
    Poly out;
    for (const auto& [w, c] : p) out += c * antipode(w);
    return out;
}

LinearEndomap Bialgebra::identity() const {
    return LinearEndomap([](const Word& w) { return Poly(w); });
}

LinearEndomap Bialgebra::unit_counit() const {
    return LinearEndomap([](const Word& w) { return w.is_unit() ? Poly::one() : Poly(); });
}

LinearEndomap Bialgebra::antipode_map() const {
    return LinearEndomap([this](const Word& w) { return antipode(w); });
}

LinearEndomap Bialgebra::convolve(LinearEndomap f, LinearEndomap g) const {
    return LinearEndomap([this, f = std::move(f), g = std::move(g)](const Word& w) {
        Poly out;
        for (const auto& [ab, c] : coproduct(w))
            out += c * product_(f(ab.first), g(ab.second));
        return out;
    });
}

Tensor3 Bialgebra::coproduct_left_iterated(const Word& w) const {
    Tensor3 out;
    for (const auto& [ab, c] : coproduct(w))
        for (const auto& [xy, cx] : coproduct(ab.first)) out.add_term(xy.first, xy.second, ab.second, c * cx);
    return out;
}

Tensor3 Bialgebra::coproduct_right_iterated(const Word& w) const {
    Tensor3 out;
    for (const auto& [ab, c] : coproduct(w))
        for (const auto& [xy, cx] : coproduct(ab.second)) out.add_term(ab.first, xy.first, xy.second, c * cx);
    return out;
}

Poly graded_slice(const Poly& p, std::size_t n) {
    Poly out;
    for (const auto& [w, c] : p)
        if (w.degree() == n) out.add_term(w, c);
    return out;
}

TensorPoly tensor_graded_slice(const TensorPoly& t, std::size_t p, std::size_t q) {
    TensorPoly out;
    for (const auto& [ab, c] : t)
        if (ab.first.degree() == p && ab.second.degree() == q) out.add_term(ab.first, ab.second, c);
    return out;
}

Poly counit_left(const TensorPoly& t) {
    Poly out;
    for (const auto& [ab, c] : t)
        if (ab.first.is_unit()) out.add_term(ab.second, c);
    return out;
}

Poly counit_right(const TensorPoly& t) {
    Poly out;
    for (const auto& [ab, c] : t)
        if (ab.second.is_unit()) out.add_term(ab.first, c);
    return out;
}

// --- bounded verification ------------------------------------------------

bool HopfReport::passed() const {
    for (const auto& s : suites)
        if (!s.passed()) return false;
    return true;
}

const SuiteResult* HopfReport::find(const std::string& suite) const {
    for (const auto& s : suites)
        if (s.suite == suite) return &s;
    return nullptr;
}

namespace {

// Per-item result of one suite check: empty when it holds.
using Check = std::optional<SuiteFailure>;

template <typename Item, typename Fn>
SuiteResult run_suite(std::string name, const std::vector<Item>& items, unsigned threads, Fn&& fn) {
    std::vector<Check> results(items.size());
    detail::parallel_for(items.size(), threads, [&](std::size_t i) { results[i] = fn(items[i]); });
    SuiteResult out{std::move(name), items.size(), {}};
    for (auto& r : results)
        if (r) out.failures.push_back(std::move(*r));
    return out;
}

}  // namespace

HopfReport verify_hopf(const Signature& sig, HopfBounds bounds, unsigned threads) {
    const Bialgebra h(sig);
    const DiamondProduct& mul = h.product();

    std::vector<Word> words;
    for (auto& w : enumerate_words(sig, bounds.max_degree))
        if (is_rbs_word(w)) words.push_back(std::move(w));

    std::vector<WordPair> pairs;
    for (const auto& w : words)
        for (const auto& v : words)
            if (w.degree() + v.degree() <= bounds.max_degree) pairs.emplace_back(w, v);
    if (bounds.random_pairs > 0) {
        WordSampler sampler(sig, bounds.random_degree);
        Rng rng(bounds.seed);
        for (std::size_t k = 0; k < bounds.random_pairs; ++k) {
            const auto total = static_cast<std::size_t>(draw_below(rng, bounds.random_degree + 1));
            const auto a = static_cast<std::size_t>(draw_below(rng, total + 1));
            Word w = sampler.rbs_word(a, rng);
            Word v = sampler.rbs_word(total - a, rng);
            pairs.emplace_back(std::move(w), std::move(v));
        }
    }

    auto fw = [&](const Word& w) { return format(w, sig); };
    auto fp = [&](const Poly& p) { return format(p, sig); };
    auto ft = [&](const TensorPoly& t) { return format(t, sig); };
    auto pair_input = [&](const WordPair& p) { return fw(p.first) + ", " + fw(p.second); };

    HopfReport report;
    report.bounds = bounds;

    report.suites.push_back(run_suite("coproduct-multiplicative", pairs, threads, [&](const WordPair& p) -> Check {
        TensorPoly lhs = h.coproduct(mul(p.first, p.second));
        TensorPoly rhs = h.tensor_diamond(h.coproduct(p.first), h.coproduct(p.second));
        if (lhs == rhs) return std::nullopt;
        return SuiteFailure{pair_input(p), ft(lhs), ft(rhs)};
    }));

    report.suites.push_back(run_suite("counit-multiplicative", pairs, threads, [&](const WordPair& p) -> Check {
        Scalar lhs = Bialgebra::counit(mul(p.first, p.second));
        Scalar rhs = Bialgebra::counit(Poly(p.first)) * Bialgebra::counit(Poly(p.second));
        if (lhs == rhs) return std::nullopt;
        return SuiteFailure{pair_input(p), format_scalar(lhs), format_scalar(rhs)};
    }));

    report.suites.push_back(run_suite("coassociative", words, threads, [&](const Word& w) -> Check {
        Tensor3 lhs = h.coproduct_left_iterated(w);
        Tensor3 rhs = h.coproduct_right_iterated(w);
        if (lhs == rhs) return std::nullopt;
        return SuiteFailure{fw(w), "(Δ⊗id)Δ has " + std::to_string(lhs.size()) + " terms",
                            "(id⊗Δ)Δ has " + std::to_string(rhs.size()) + " terms"};
    }));

    report.suites.push_back(run_suite("left-counit", words, threads, [&](const Word& w) -> Check {
        Poly lhs = counit_left(h.coproduct(w));
        if (lhs == Poly(w)) return std::nullopt;
        return SuiteFailure{fw(w), fp(lhs), fw(w)};
    }));

    {
        // (id⊗ε)Δ differs from the identity at the lowest ranked operator
        // applied to 1 whenever there is more than one operator.
        SuiteResult s{"right-counit-failure", 0, {}};
        if (sig.operator_count() > 1) {
            Word witness(Prime::apply(sig.trail_operator(), Word::unit()));
            Poly lhs = counit_right(h.coproduct(witness));
            s.checked = 1;
            if (lhs == Poly(witness)) s.failures.push_back({fw(witness), fp(lhs), fw(witness)});
        }
        report.suites.push_back(std::move(s));
    }

    report.suites.push_back(run_suite("grading-product", pairs, threads, [&](const WordPair& p) -> Check {
        Poly prod = mul(p.first, p.second);
        Poly slice = graded_slice(prod, p.first.degree() + p.second.degree());
        if (slice == prod) return std::nullopt;
        return SuiteFailure{pair_input(p), fp(prod), fp(slice)};
    }));

    report.suites.push_back(run_suite("grading-coproduct", words, threads, [&](const Word& w) -> Check {
        TensorPoly d = h.coproduct(w);
        TensorPoly graded;
        for (std::size_t k = 0; k <= w.degree(); ++k) graded += tensor_graded_slice(d, k, w.degree() - k);
        if (graded == d) return std::nullopt;
        return SuiteFailure{fw(w), ft(d), ft(graded)};
    }));

    report.suites.push_back(run_suite("connected", words, threads, [&](const Word& w) -> Check {
        TensorPoly d = h.coproduct(w);
        TensorPoly slice = tensor_graded_slice(d, 0, w.degree());
        if (slice == TensorPoly(Word::unit(), w)) return std::nullopt;
        return SuiteFailure{fw(w), ft(slice), ft(TensorPoly(Word::unit(), w))};
    }));

    const LinearEndomap right = h.convolve(h.identity(), h.antipode_map());
    const LinearEndomap left = h.convolve(h.antipode_map(), h.identity());
    const LinearEndomap ue = h.unit_counit();

    report.suites.push_back(run_suite("right-antipode", words, threads, [&](const Word& w) -> Check {
        Poly lhs = right(w);
        Poly rhs = ue(w);
        if (lhs == rhs) return std::nullopt;
        return SuiteFailure{fw(w), fp(lhs), fp(rhs)};
    }));

    report.left_antipode_holds = true;
    for (const auto& w : words) {
        Poly lhs = left(w);
        Poly rhs = ue(w);
        if (lhs == rhs) continue;
        report.left_antipode_holds = false;
        report.left_antipode_counterexample = SuiteFailure{fw(w), fp(lhs), fp(rhs)};
        break;
    }
    return report;
}

}  // namespace rbs
