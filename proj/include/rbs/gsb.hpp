#pragma once

// Compositions of relations and a bounded checker for the claim that the
// Rota-Baxter system relations form a Gröbner-Shirshov basis.
//
// The relation schemas range over all Omega-words u, v; the checker
// instantiates them over every word up to a degree bound, builds all
// intersection and inclusion compositions between instances, and reduces each
// one to normal form. A composition is trivial when it reduces to zero and
// every rewritten word lies strictly below its ambiguity.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbs/algebra.hpp"
#include "rbs/rewriting.hpp"
#include "rbs/terms.hpp"

namespace rbs {

struct MonicElement {
    Poly poly;
    Word leading;

    /// Throws std::invalid_argument if `p` is zero or not monic.
    static MonicElement from(Poly p);
};

enum class CompositionKind { Intersection, Inclusion };

struct CompositionRecord {
    CompositionKind kind;
    MonicElement f;
    MonicElement g;
    Word ambiguity;
    /// For inclusions: ambiguity = context|ḡ. For intersections: the
    /// ambiguity is f̄·right = left·ḡ.
    std::optional<StarWord> context;
    Word left;
    Word right;
    Poly composition;
};

struct TrivialityCheck {
    bool trivial = false;
    Poly residual;
    ReductionTrace certificate;
    /// Greatest word rewritten during the reduction, if any.
    std::optional<Word> max_leading_seen;
};

/// Both relation schemas (all operators) at every (u, v) with
/// deg(u) + deg(v) <= max_degree.
std::vector<MonicElement> instantiate_relations(const RelationSystem& rules, std::size_t max_degree);

/// All π with w = π|pattern (pattern non-empty).
std::vector<StarWord> occurrences(const Word& w, const Word& pattern);

/// w = f̄·a = b·ḡ with bre(w) < bre(f̄) + bre(ḡ), over top-level factor sequences.
std::vector<CompositionRecord> find_intersection_compositions(const MonicElement& f,
                                                              const MonicElement& g);

/// f̄ = π|ḡ for every occurrence of ḡ inside f̄.
std::vector<CompositionRecord> find_inclusion_compositions(const MonicElement& f,
                                                           const MonicElement& g);

TrivialityCheck check_trivial(const CompositionRecord& rec, const RelationSystem& rules);

/// Enumerated words of degree <= max_degree that contain no leading word of
/// `relations` as a contiguous run of factors at any nesting level.
std::vector<Word> irreducibles(std::span<const MonicElement> relations, const Signature& sig,
                               std::size_t max_degree);

struct GsbBounds {
    std::size_t uvw_degree = 1;
    std::size_t pi_degree = 1;
};

struct FamilyFailure {
    Word u, v, w;
    std::optional<StarWord> pi;
    Word ambiguity;
    Poly residual;
    bool bound_violated = false;
};

/// One composition family, e.g. "inclusion-left:R<-S" for the ambiguities
/// R(π|S(u)S(v)) R(w).
struct FamilyReport {
    std::string family;
    CompositionKind kind;
    SymbolId outer;
    SymbolId inner;
    std::size_t instances_checked = 0;
    std::vector<FamilyFailure> failures;
};

struct GsbReport {
    GsbBounds bounds;
    std::vector<FamilyReport> families;

    bool passed() const;
    std::size_t instances_checked() const;
};

/// Checks every composition family over u, v, w of degree <= uvw_degree and
/// π of degree <= pi_degree. `threads` = 0 picks the hardware concurrency.
/// Family order and failure order are deterministic.
GsbReport verify_gsb(const RelationSystem& rules, GsbBounds bounds, unsigned threads = 0);

}  // namespace rbs
