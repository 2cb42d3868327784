#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgeideals/monomial.hpp"

namespace edgeideals {

/// One element of a tree-like system: a single monomial (isolated summand,
/// right absent) or a sum of two distinct monomials.
struct TlsElement {
    SquarefreeMonomial left;
    std::optional<SquarefreeMonomial> right;

    bool isolated() const { return !right.has_value(); }
    /// Variable support of the element's summand product.
    SquarefreeMonomial product_support() const;

    bool operator==(const TlsElement&) const = default;
};

TlsElement isolated_summand(SquarefreeMonomial m);
TlsElement summand_pair(SquarefreeMonomial left, SquarefreeMonomial right);

/// Ordered sequence q_0, q_1, ... where every non-isolated element has some
/// earlier element with a summand dividing the product of its two summands.
/// Juxtapositions of systems with disjoint supports are systems again, so
/// several isolated "heads" may occur.
struct TreeLikeSystem {
    std::vector<TlsElement> elements;
    int nvars = 0;

    int length() const { return static_cast<int>(elements.size()); }
    bool operator==(const TreeLikeSystem&) const = default;
};

/// Positions of a strict subtree: the first is an isolated summand, every
/// later element's predecessor is exactly the previous listed element.
struct StrictChain {
    std::vector<int> positions;
    bool operator==(const StrictChain&) const = default;
};

struct TlsValidation {
    bool ok = true;
    int position = -1;
    std::string reason;
};

/// Checks the defining divisibility condition, summand distinctness and
/// squarefreeness. Violations are returned as data, never thrown.
TlsValidation validate_tls(const TreeLikeSystem& s);

/// All summands, sorted and deduplicated.
std::vector<SquarefreeMonomial> support(const TreeLikeSystem& s);

/// Reconstructs the forest whose edge monomials are the support. Throws
/// NotForestSupport if some summand is not quadratic or the support graph
/// has a cycle.
Forest forest_from_support(const TreeLikeSystem& s);

/// The unique earlier position whose element contains the edge monomial of
/// the edge lying between the two edges of element i. Throws
/// IsolatedElement, NotForestSupport, InvalidSystem (no divisor found).
int predecessor(const TreeLikeSystem& s, int i);

/// Walks predecessors from position i back to an isolated summand and
/// returns the chain in system order.
StrictChain strict_subtree_ending_at(const TreeLikeSystem& s, int i);

/// Partition of all positions into maximal strict chains, ordered by chain
/// head. Throws NotStretched when some element has two followers (which
/// cannot happen over a stretched support).
std::vector<StrictChain> decompose_strict(const TreeLikeSystem& s);

/// Subsequence of elements containing an edge monomial of the given
/// component of the support forest, in original order.
TreeLikeSystem restrict_to_component(const TreeLikeSystem& s, int component_id);

/// Moves the given positions (which must form a tree-like subsequence) to
/// the front, keeping both parts in original order. Throws NotASubtree.
TreeLikeSystem push_to_top(const TreeLikeSystem& s, const std::vector<int>& positions);

/// Removes the elements at `positions` and places `replacement` (whose
/// support must equal the removed summand set) at the front of the residual
/// subsequence. Throws SupportMismatch.
TreeLikeSystem replace_subsequence(const TreeLikeSystem& s, const std::vector<int>& positions,
                                   const TreeLikeSystem& replacement);

/// Inversion of a strict divisibility chain a_0..a_r, b_1..b_r of pairwise
/// distinct squarefree quadratic monomials with a_{i-1} | a_i*b_i: returns a
/// strict system with the same support starting at a_{r-1}. The base case
/// resolves the free swap deterministically: a_2 and b_2 are interchanged
/// only if the shared variable of a_0 and a_1 does not divide a_2.
/// Throws PreconditionViolated.
TreeLikeSystem tree_inversion(const std::vector<SquarefreeMonomial>& a,
                              const std::vector<SquarefreeMonomial>& b, int nvars);

/// True iff only element 0 is isolated and each element's stored left
/// summand divides the next element's summand product.
bool is_strict(const TreeLikeSystem& s);

/// One element per line, `x1*x2` or `x1*x2 + x3*x4`.
std::string render_text(const TreeLikeSystem& s, const std::vector<std::string>& labels = {});

} // namespace edgeideals
