#pragma once

// Left counital Hopf structure on the free Rota-Baxter system.
//
// On basis words the coproduct is
//   Δ(1) = 1⊗1,  Δ(x) = 1⊗x + x⊗1,
//   Δ(Q(w)) = R(w)⊗1 + (id⊗Q)Δ(w)     (R the highest ranked operator),
//   Δ(w1 w2 ... wm) = Δ(w1) ⋄ Δ(w2) ⋄ ... ⋄ Δ(wm)   (legwise diamond).
// The counit reads off the coefficient of 1. It is a left counit only.
// The right antipode T solves id ∗ T = uε degree by degree.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "rbs/algebra.hpp"
#include "rbs/rewriting.hpp"
#include "rbs/terms.hpp"

namespace rbs {

/// A linear map determined by its values on basis words.
class LinearEndomap {
public:
    explicit LinearEndomap(std::function<Poly(const Word&)> on_basis) : on_basis_(std::move(on_basis)) {}

    Poly operator()(const Word& w) const { return on_basis_(w); }
    Poly operator()(const Poly& p) const;

private:
    std::function<Poly(const Word&)> on_basis_;
};

/// Finite map on word triples; only used to compare iterated coproducts.
class Tensor3 {
public:
    using Key = std::tuple<Word, Word, Word>;

    void add_term(const Word& a, const Word& b, const Word& c, const Scalar& coeff);
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Word& a, const Word& b, const Word& c) const;
    friend bool operator==(const Tensor3& x, const Tensor3& y) { return x.terms_ == y.terms_; }

private:
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };
    std::unordered_map<Key, Scalar, KeyHash> terms_;
};

class Bialgebra {
public:
    explicit Bialgebra(Signature sig);
    ~Bialgebra();
    Bialgebra(Bialgebra&&) noexcept;
    Bialgebra& operator=(Bialgebra&&) noexcept;

    const Signature& signature() const { return product_.signature(); }
    const DiamondProduct& product() const { return product_; }

    /// Throws std::invalid_argument for a non-basis word. Memoized.
    TensorPoly coproduct(const Word& w) const;
    TensorPoly coproduct(const Poly& p) const;

    static Scalar counit(const Poly& p) { return p.coefficient(Word::unit()); }
    static Poly unit_map(const Scalar& c) { return Poly(Word::unit(), c); }

    /// (a⊗b) ⋄ (c⊗d) = (a⋄c) ⊗ (b⋄d), extended bilinearly.
    TensorPoly tensor_diamond(const TensorPoly& a, const TensorPoly& b) const;

    /// T(1) = 1 and T(w) = -Σ' w(1) ⋄ T(w(2)) over Δ(w) without its 1⊗w term.
    /// Throws std::logic_error if the degree-(0, n) slice of Δ(w) is not
    /// exactly 1⊗w. Memoized.
    Poly antipode(const Word& w) const;
    Poly antipode(const Poly& p) const;

    LinearEndomap identity() const;
    LinearEndomap unit_counit() const;
    LinearEndomap antipode_map() const;

    /// (f ∗ g)(w) = Σ f(w(1)) ⋄ g(w(2))
    LinearEndomap convolve(LinearEndomap f, LinearEndomap g) const;

    /// (Δ⊗id)Δ(w) and (id⊗Δ)Δ(w)
    Tensor3 coproduct_left_iterated(const Word& w) const;
    Tensor3 coproduct_right_iterated(const Word& w) const;

private:
    struct Cache;
    DiamondProduct product_;
    std::unique_ptr<Cache> cache_;
};

Poly graded_slice(const Poly& p, std::size_t n);
TensorPoly tensor_graded_slice(const TensorPoly& t, std::size_t p, std::size_t q);

/// (ε⊗id)t as a polynomial (the k⊗ factor dropped); likewise (id⊗ε)t.
Poly counit_left(const TensorPoly& t);
Poly counit_right(const TensorPoly& t);

struct HopfBounds {
    std::size_t max_degree = 4;
    std::size_t random_pairs = 500;
    std::size_t random_degree = 6;
    std::uint64_t seed = 2718281;
};

struct SuiteFailure {
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct SuiteResult {
    std::string suite;
    std::size_t checked = 0;
    std::vector<SuiteFailure> failures;
    bool passed() const { return failures.empty(); }
};

struct HopfReport {
    HopfBounds bounds;
    std::vector<SuiteResult> suites;
    /// Informational: whether T ∗ id = uε also held on every word checked.
    bool left_antipode_holds = false;
    std::optional<SuiteFailure> left_antipode_counterexample;

    bool passed() const;
    const SuiteResult* find(const std::string& suite) const;
};

/// Runs every bialgebra / Hopf property over basis words up to the bounds.
/// Deterministic for a fixed seed. `threads` = 0 picks the hardware concurrency.
HopfReport verify_hopf(const Signature& sig, HopfBounds bounds, unsigned threads = 0);

}  // namespace rbs
