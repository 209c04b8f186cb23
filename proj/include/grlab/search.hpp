#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grlab/colored_graph.hpp"
#include "grlab/formulas.hpp"
#include "grlab/target_graph.hpp"

namespace grlab {

// What a coloring must avoid. At least one constraint must be present.
struct Forbid {
    bool rainbow_k3 = false;
    std::vector<TargetGraph> mono;
};

struct SearchConfig {
    // node counts, not wall time; a node is one attempted edge-color
    // assignment
    std::uint64_t node_budget = 200'000'000;
    int threads = 1;
    // lex-least adjacency-row pruning; defaulted per entry point (on for
    // unavoidability proofs, off for witness hunts) when unset
    std::optional<bool> vertex_symmetry;
    // subtree split point for worker pools: edges among the first
    // split_vertices vertices form the sequential prefix (0 = auto)
    int split_vertices = 0;
};

enum class Verdict { Found, Exhausted, Budget };

std::string to_string(Verdict v);

struct SearchOutcome {
    Verdict verdict = Verdict::Budget;
    std::optional<ColoredCompleteGraph> witness;
    std::uint64_t nodes = 0;
    int max_depth = 0;
    double elapsed_seconds = 0.0;

    // config echo
    int n = 0;
    int k = 0;
    std::uint64_t node_budget = 0;
    int threads = 1;
    bool vertex_symmetry = false;

    // per-subtree node counts when a worker pool ran
    std::vector<std::uint64_t> subtree_nodes;

    bool found() const { return verdict == Verdict::Found; }
    bool exhausted() const { return verdict == Verdict::Exhausted; }

    // line-oriented certificate with config echo and node counts
    std::string certificate(const Forbid& f) const;
};

// Branch-and-prune over k-colorings of K_n in vertex-by-vertex edge order.
// Color-permutation symmetry is broken by first-occurrence canonical form;
// monochromatic and rainbow constraints are checked incrementally against
// the newest edge. Found colorings are re-verified by the detectors before
// being returned.
SearchOutcome find_free_coloring(int n, int k, const Forbid& f, SearchConfig cfg = {});

// Dual reading of the same search: Exhausted certifies that every
// k-coloring of K_n hits the forbidden set; Found is a counterexample.
SearchOutcome prove_unavoidable(int n, int k, const Forbid& f, SearchConfig cfg = {});

// exact two-color Ramsey number if both sides resolve within budget
// (per-order searches), else the proven range
GrValue compute_r2(const TargetGraph& h, int n_max, const SearchConfig& cfg = {});

// Gallai-Ramsey analogue: rainbow triangles are forbidden alongside h
GrValue compute_gr(const TargetGraph& h, int k, int n_max, const SearchConfig& cfg = {});

}  // namespace grlab
