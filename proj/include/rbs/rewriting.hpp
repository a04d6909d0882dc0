#pragma once

// Normal forms in the free Rota-Baxter system.
//
// Every operator Q carries the rewrite rule
//     Q(u)Q(v)  ->  Q(R(u)v) + Q(uS(v))
// where R is the highest and S the lowest ranked operator of the signature.
// For the default signature {R, S} these are exactly the two defining
// identities. Words without any adjacent Q(u)Q(v) pair, at any nesting
// level, are the basis of the quotient ("RBS words").

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "rbs/algebra.hpp"
#include "rbs/terms.hpp"

namespace rbs {

/// An occurrence of Q(left)Q(right) inside a word.
struct RuleMatch {
    StarWord context;
    SymbolId op;
    Word left;
    Word right;

    /// Q(left)Q(right)
    Word redex() const;
    /// context|redex, i.e. the word the match was found in.
    Word matched() const { return context.substitute(redex()); }
};

enum class Strategy { LeftmostOutermost, RightmostInnermost };

/// None iff `w` is an RBS word.
std::optional<RuleMatch> find_redex(const Word& w, Strategy strategy = Strategy::LeftmostOutermost);

bool is_rbs_word(const Word& w);

/// The relation schema, one per operator Q:
///     lead·Q(u)Q(v) + first·Q(R(u)v) + second·Q(uS(v))
/// The defining relations have signs (+1, -1, -1). Other sign patterns exist
/// only for mutation testing of the composition checker.
class RelationSystem {
public:
    static RelationSystem standard(const Signature& sig);

    /// Same schema with one sign flipped; position 0 is the leading term,
    /// 1 the Q(R(u)v) term, 2 the Q(uS(v)) term.
    RelationSystem with_flipped_sign(SymbolId op, int position) const;

    const Signature& signature() const { return sig_; }
    bool is_standard() const;

    /// The relation at (u, v), normalized to be monic in Q(u)Q(v).
    Poly relation(SymbolId op, const Word& u, const Word& v) const;
    /// What Q(u)Q(v) rewrites to: Q(u)Q(v) minus the monic relation.
    Poly replacement(SymbolId op, const Word& u, const Word& v) const;

    std::array<Scalar, 3> signs(SymbolId op) const { return signs_.at(op); }

private:
    explicit RelationSystem(Signature sig);

    Signature sig_;
    std::vector<std::array<Scalar, 3>> signs_;
};

/// substitute(context, replacement of the matched redex).
Poly rewrite_redex(const RuleMatch& m, const RelationSystem& rules);

struct ReductionStep {
    Word matched;
    RuleMatch match;
    Scalar coefficient;  ///< coefficient of `matched` when it was rewritten
    Poly replacement;    ///< what `matched` was replaced by (before scaling)
};

struct ReductionTrace {
    Poly input;
    std::vector<ReductionStep> steps;
    Poly result;
};

/// Repeatedly rewrites the Deg-lex greatest reducible monomial until every
/// monomial is an RBS word. If `trace` is given, every step is recorded and
/// checked to strictly decrease (throws std::logic_error otherwise).
Poly normal_form(const Poly& p, const RelationSystem& rules,
                 Strategy strategy = Strategy::LeftmostOutermost, ReductionTrace* trace = nullptr);

Poly normal_form(const Poly& p, const Signature& sig);

/// Re-applies the recorded steps to trace.input; true iff that reproduces
/// trace.result exactly.
bool replay(const ReductionTrace& trace);

/// The product of the free Rota-Baxter system on basis words, computed by
/// recursion on the prime factors next to the junction. Results of the
/// same-operator case are cached; the cache is safe for concurrent use.
class DiamondProduct {
public:
    explicit DiamondProduct(Signature sig);
    ~DiamondProduct();
    DiamondProduct(DiamondProduct&&) noexcept;
    DiamondProduct& operator=(DiamondProduct&&) noexcept;

    const Signature& signature() const { return sig_; }

    /// Throws std::invalid_argument if either argument is not an RBS word.
    Poly operator()(const Word& w, const Word& v) const;
    /// Bilinear extension; same precondition on every monomial.
    Poly operator()(const Poly& p, const Poly& q) const;

    /// No argument checks.
    Poly unchecked(const Word& w, const Word& v) const;

private:
    Poly prime_product(const Prime& a, const Prime& b) const;

    struct Cache;
    Signature sig_;
    std::unique_ptr<Cache> cache_;
};

Poly diamond(const Signature& sig, const Word& w, const Word& v);
Poly diamond_poly(const Signature& sig, const Poly& p, const Poly& q);

}  // namespace rbs
